// Copyright 2026 The numrad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "numrad/block.hpp"
#include "numrad/error.hpp"
#include "numrad/linalg.hpp"
#include "numrad/matrix.hpp"
#include "numrad/matrix_json.hpp"
#include "oracles.hpp"

namespace numrad {
namespace {

using testing::max_diff;

const Complex I(0.0, 1.0);

void expect_error(Errc code, const auto& fn) {
  try {
    fn();
    FAIL() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(ComplexMatrix, RejectsEmptyExtentsAndBadEntryCounts) {
  expect_error(Errc::DimensionMismatch, [] { ComplexMatrix(0, 2); });
  expect_error(Errc::DimensionMismatch, [] { ComplexMatrix(2, 2, std::vector<Complex>(3)); });
}

TEST(Adjoint, ConjugatesScalar) {
  EXPECT_EQ(adjoint(ComplexMatrix{{I}}), (ComplexMatrix{{-I}}));
}

TEST(Adjoint, TransposesRealMatrix) {
  EXPECT_EQ(adjoint(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), (ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}}));
}

TEST(Adjoint, IsAnInvolution) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix m = testing::random_ginibre(1 + k % 6, rng);
    EXPECT_EQ(adjoint(adjoint(m)), m);
  }
}

TEST(HermEig, Diagonal) {
  const auto e = herm_eig(ComplexMatrix::diagonal({3.0, 1.0}));
  EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], 3.0, 1e-14);
}

TEST(HermEig, PauliX) {
  const auto e = herm_eig(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_NEAR(e.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], 1.0, 1e-14);
}

TEST(HermEig, ComplexTwoByTwoFromCharacteristicPolynomial) {
  // lambda^2 - 4 lambda + 3 = 0.
  const auto e = herm_eig(ComplexMatrix{{2.0, I}, {-I, 2.0}});
  EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], 3.0, 1e-14);
}

TEST(HermEig, ReconstructionOrthonormalityAndTrace) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + k % 12;
    const ComplexMatrix h = testing::random_hermitian(n, rng);
    const auto e = herm_eig(h);
    const double scale = std::max(1.0, operator_norm(h));
    ASSERT_TRUE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
    std::vector<Complex> d(e.eigenvalues.begin(), e.eigenvalues.end());
    const ComplexMatrix rebuilt =
        times_adjoint(e.eigenvectors * ComplexMatrix::diagonal(d), e.eigenvectors);
    EXPECT_LE(operator_norm(rebuilt - h), 1e-10 * scale);
    EXPECT_LE(operator_norm(adjoint_times(e.eigenvectors, e.eigenvectors) -
                            ComplexMatrix::identity(n)),
              1e-10);
    double sum = 0.0;
    for (double v : e.eigenvalues) sum += v;
    EXPECT_NEAR(sum, trace(h).real(), 1e-9 * scale);
  }
}

TEST(HermEig, RejectsNonHermitianAndNonSquare) {
  expect_error(Errc::NotHermitian, [] { herm_eig(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}); });
  expect_error(Errc::NonSquare, [] { herm_eig(ComplexMatrix(2, 3)); });
}

TEST(HermEig, SymmetrizesWithinTolerance) {
  const auto e = herm_eig(ComplexMatrix{{1.0, 1e-13}, {0.0, 1.0}});
  EXPECT_NEAR(e.eigenvalues[1], 1.0, 1e-12);
}

TEST(LambdaMax, AgreesWithJacobi) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    const ComplexMatrix h = testing::random_hermitian(1 + k % 20, rng);
    EXPECT_NEAR(lambda_max(h), herm_eig(h).eigenvalues.back(), 1e-11 * operator_norm(h));
  }
}

TEST(AbsValue, StrictlyUpperShift) {
  EXPECT_LE(max_diff(abs_value(ComplexMatrix{{0.0, 2.0}, {0.0, 0.0}}),
                     ComplexMatrix::diagonal({0.0, 2.0})),
            1e-14);
}

TEST(AbsValue, IdentityOnPsd) {
  std::mt19937_64 rng(4);
  const ComplexMatrix p = testing::random_psd(4, rng);
  EXPECT_LE(max_diff(abs_value(p), p), 1e-11 * operator_norm(p));
}

TEST(AbsValue, AdjointSwapsTheKernel) {
  EXPECT_LE(max_diff(abs_value(adjoint(ComplexMatrix{{0.0, 2.0}, {0.0, 0.0}})),
                     ComplexMatrix::diagonal({2.0, 0.0})),
            1e-14);
}

TEST(AbsValue, SquaresToGramAndMatchesNorm) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix m = testing::random_ginibre(1 + k % 8, rng);
    const ComplexMatrix p = abs_value(m);
    const double norm = operator_norm(m);
    EXPECT_TRUE(is_psd(p, 1e-10));
    EXPECT_LE(operator_norm(p * p - adjoint_times(m, m)), 1e-9 * std::max(1.0, norm * norm));
    EXPECT_NEAR(operator_norm(p), norm, 1e-9);
  }
}

TEST(MatfunPsd, Examples) {
  EXPECT_LE(max_diff(matfun_psd(ComplexMatrix::diagonal({4.0, 9.0}),
                                [](double t) { return std::sqrt(t); }),
                     ComplexMatrix::diagonal({2.0, 3.0})),
            1e-14);
  const ComplexMatrix ones{{1.0, 1.0}, {1.0, 1.0}};
  EXPECT_LE(max_diff(matfun_psd(ones, [](double t) { return t; }), ones), 1e-14);
  EXPECT_LE(max_diff(matfun_psd(ones, [](double t) { return t * t; }),
                     ComplexMatrix{{2.0, 2.0}, {2.0, 2.0}}),
            1e-13);
}

TEST(MatfunPsd, SemigroupAndCommutation) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int k = 0; k < 100; ++k) {
    ComplexMatrix p = testing::random_psd(1 + k % 6, rng);
    p *= 1.0 / std::max(1.0, operator_norm(p));
    const double a = u(rng);
    const double b = u(rng);
    const ComplexMatrix pa = matfun_psd(p, [a](double t) { return std::pow(t, a); });
    const ComplexMatrix pab = matfun_psd(pa, [a, b](double t) { return std::pow(t, b / a); });
    const ComplexMatrix direct = matfun_psd(p, [a, b](double t) { return std::pow(t, b); });
    EXPECT_LE(max_diff(pab, direct), 1e-8);
    EXPECT_LE(max_diff(pa * p, p * pa), 1e-9);
    // t^a then t^b composes to t^(a+b) when both are applied as products.
    const ComplexMatrix pb = matfun_psd(p, [b](double t) { return std::pow(t, b); });
    const ComplexMatrix sum = matfun_psd(p, [a, b](double t) { return std::pow(t, a + b); });
    EXPECT_LE(max_diff(pa * pb, sum), 1e-8);
  }
}

TEST(MatfunPsd, ClampsRoundingButRejectsNegativeSpectrum) {
  const ComplexMatrix nearly = ComplexMatrix::diagonal({-1e-12, 1.0});
  EXPECT_NEAR(matfun_psd(nearly, [](double t) { return std::sqrt(t); })(0, 0).real(), 0.0, 1e-15);
  expect_error(Errc::NegativeSpectrum, [] {
    matfun_psd(ComplexMatrix::diagonal({-0.5, 1.0}), [](double t) { return t; });
  });
}

TEST(Polar, UnitaryFactorsAsItself) {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix q{{s, s * I}, {s * I, s}};
  const Polar pd = polar_decompose(q);
  EXPECT_LE(max_diff(pd.w, q), 1e-12);
  EXPECT_LE(max_diff(pd.p, ComplexMatrix::identity(2)), 1e-12);
}

TEST(Polar, RealSignDecomposition) {
  const Polar pd = polar_decompose(ComplexMatrix::diagonal({-2.0, 3.0}));
  EXPECT_LE(max_diff(pd.w, ComplexMatrix::diagonal({-1.0, 1.0})), 1e-14);
  EXPECT_LE(max_diff(pd.p, ComplexMatrix::diagonal({2.0, 3.0})), 1e-14);
}

TEST(Polar, RankDeficientReconstruction) {
  const ComplexMatrix m{{0.0, 2.0}, {0.0, 0.0}};
  const Polar pd = polar_decompose(m);
  EXPECT_LE(max_diff(pd.p, abs_value(m)), 1e-14);
  EXPECT_LE(max_diff(pd.w * ComplexMatrix::diagonal({0.0, 2.0}), m), 1e-14);
}

TEST(Polar, ReconstructionAndPartialIsometryOnRandomGinibre) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    const ComplexMatrix m = testing::random_ginibre(1 + k % 8, rng);
    const Polar pd = polar_decompose(m);
    const double scale = std::max(1.0, operator_norm(m));
    ASSERT_LE(operator_norm(pd.w * pd.p - m), 1e-9 * scale);
    const auto eig = herm_eig(pd.p);
    const ComplexMatrix wtw = adjoint_times(pd.w, pd.w);
    for (std::size_t j = 0; j < eig.eigenvalues.size(); ++j) {
      if (eig.eigenvalues[j] <= 1e-10) continue;
      ComplexMatrix v(m.rows(), 1);
      for (std::size_t i = 0; i < m.rows(); ++i) v(i, 0) = eig.eigenvectors(i, j);
      ASSERT_LE(max_diff(wtw * v, v), 1e-8);
    }
  }
}

TEST(Cartesian, Examples) {
  const ComplexMatrix h{{1.0, I}, {-I, 2.0}};
  const Cartesian ch = cartesian(h);
  EXPECT_LE(max_diff(ch.re, h), 1e-15);
  EXPECT_LE(max_abs(ch.im), 1e-15);

  const Cartesian cn = cartesian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
  EXPECT_LE(max_diff(cn.re, ComplexMatrix{{0.0, 0.5}, {0.5, 0.0}}), 1e-15);
  EXPECT_LE(max_diff(cn.im, ComplexMatrix{{0.0, -0.5 * I}, {0.5 * I, 0.0}}), 1e-15);

  const Cartesian ci = cartesian(I * h);
  EXPECT_LE(max_abs(ci.re), 1e-15);
  EXPECT_LE(max_diff(ci.im, h), 1e-15);
}

TEST(Cartesian, PartsAreHermitianBoundedAndExact) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix m = testing::random_ginibre(1 + k % 8, rng);
    const Cartesian c = cartesian(m);
    EXPECT_TRUE(is_hermitian(c.re, 0.0));
    EXPECT_TRUE(is_hermitian(c.im, 0.0));
    EXPECT_LE(max_diff(c.re + I * c.im, m), 1e-15 * std::max(1.0, max_abs(m)));
    const double norm = operator_norm(m);
    EXPECT_LE(operator_norm(c.re), norm * (1 + 1e-12));
    EXPECT_LE(operator_norm(c.im), norm * (1 + 1e-12));
  }
}

TEST(OperatorNorm, Examples) {
  EXPECT_NEAR(operator_norm(ComplexMatrix::diagonal({3.0, 4.0 * I})), 4.0, 1e-14);
  EXPECT_NEAR(operator_norm(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}), (1.0 + std::sqrt(5.0)) / 2.0,
              1e-13);
  EXPECT_EQ(operator_norm(ComplexMatrix::zero(3)), 0.0);
}

TEST(OperatorNorm, AgreesWithJacobiOracle) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix m = testing::random_ginibre(1 + k % 10, rng);
    EXPECT_NEAR(operator_norm(m), testing::jacobi_norm(m), 1e-10 * operator_norm(m));
  }
}

TEST(BlockEmbed, Examples) {
  const ComplexMatrix one{{1.0}};
  EXPECT_EQ(block_embed(BlockMatrix2x2(one, one, one, one)), (ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}));

  std::mt19937_64 rng(10);
  const std::size_t n = 3;
  const BlockMatrix2x2 blk(testing::random_ginibre(n, rng), testing::random_ginibre(n, rng),
                           testing::random_ginibre(n, rng), testing::random_ginibre(n, rng));
  const ComplexMatrix z = ComplexMatrix::zero(n);
  EXPECT_EQ(blk.diag_part(), BlockMatrix2x2(blk.a(), z, z, blk.d()).embed());
  EXPECT_EQ(blk.diag_part() + blk.offdiag_part(), blk.embed());
  const BlockMatrix2x2 back = BlockMatrix2x2::split(blk.embed());
  EXPECT_EQ(back.a(), blk.a());
  EXPECT_EQ(back.c(), blk.c());
}

TEST(BlockEmbed, RejectsMismatchedBlocks) {
  expect_error(Errc::DimensionMismatch, [] {
    BlockMatrix2x2(ComplexMatrix(2, 2), ComplexMatrix(2, 2), ComplexMatrix(3, 3),
                   ComplexMatrix(2, 2));
  });
}

TEST(MatrixJson, RoundTrip) {
  std::mt19937_64 rng(11);
  const ComplexMatrix m = testing::random_ginibre(3, rng);
  EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  const ComplexMatrix parsed =
      matrix_from_json(R"({"rows":1,"cols":2,"data":[[1,0],[0,-1]]})");
  EXPECT_EQ(parsed, (ComplexMatrix{{1.0, -I}}));
}

TEST(MatrixJson, LengthMismatchNamesIndex) {
  try {
    matrix_from_json(R"({"rows":2,"cols":2,"data":[[1,0],[0,1],[2,2]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Parse);
    EXPECT_NE(std::string(e.what()).find("index 3"), std::string::npos) << e.what();
  }
  try {
    matrix_from_json(R"({"rows":1,"cols":2,"data":[[1,0],[1]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("data[1]"), std::string::npos) << e.what();
  }
  expect_error(Errc::Parse, [] { matrix_from_json("{not json"); });
  expect_error(Errc::Parse, [] { matrix_from_json(R"({"rows":0,"cols":1,"data":[]})"); });
}

}  // namespace
}  // namespace numrad
