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

#include "numrad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "numrad/error.hpp"

namespace numrad {
namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kJacobiThreshold = 1e-13;
constexpr int kJacobiMaxSweeps = 64;
constexpr double kSpectrumBand = 1e-10;

void require_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(Errc::NonSquare, std::string(op) + ": " + std::to_string(m.rows()) + "x" +
                                     std::to_string(m.cols()));
  }
}

double hermitian_defect(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) s += std::norm(h(i, j) - std::conj(h(j, i)));
  }
  return std::sqrt(s);
}

ComplexMatrix symmetrized(const ComplexMatrix& h, const char* op) {
  require_square(h, op);
  const double defect = hermitian_defect(h);
  if (defect > kHermitianTol * std::max(1.0, frobenius_norm(h))) {
    throw Error(Errc::NotHermitian,
                std::string(op) + ": ||h - h*||_F = " + std::to_string(defect));
  }
  const std::size_t n = h.rows();
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  return a;
}

// V diag(f) V*.
ComplexMatrix spectral_compose(const ComplexMatrix& v, std::span<const double> f) {
  const std::size_t n = v.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] == 0.0) continue;
        s += v(i, k) * f[k] * std::conj(v(j, k));
      }
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

// Eigenvalues of [[a, b], [conj(b), d]] with a, d real.
std::pair<double, double> hermitian_2x2(double a, Complex b, double d) {
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(b));
  return {mean - radius, mean + radius};
}

// Number of eigenvalues of the symmetric tridiagonal (diag, off^2) strictly below x.
std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& off_sq,
                        double x) {
  std::size_t count = 0;
  double q = diag[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    if (q == 0.0) q = std::numeric_limits<double>::epsilon() * (std::abs(x) + 1e-300);
    q = diag[i] - x - off_sq[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

HermEig herm_eig(const ComplexMatrix& h) {
  ComplexMatrix a = symmetrized(h, "herm_eig");
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = frobenius_norm(a);

  for (int sweep = 0; sweep < kJacobiMaxSweeps && n > 1 && scale > 0.0; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
    }
    if (std::sqrt(off) <= kJacobiThreshold * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Real rotation on the phase-normalized pair [[app, mag], [mag, aqq]].
        const double theta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U = diag(1, conj(phase)) * [[c, s], [-s, c]].
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  HermEig out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double lambda_max(const ComplexMatrix& h) {
  ComplexMatrix a = symmetrized(h, "lambda_max");
  return lambda_max_overwrite(a);
}

double lambda_max_overwrite(ComplexMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0).real();
  if (n == 2) return hermitian_2x2(a(0, 0).real(), a(0, 1), a(1, 1).real()).second;

  std::vector<double> diag(n);
  std::vector<double> off_sq(n - 1, 0.0);
  std::vector<Complex> v(n);
  std::vector<Complex> p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // length of the column below the diagonal
    double xnorm_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) xnorm_sq += std::norm(a(k + 1 + i, k));
    const double xnorm = std::sqrt(xnorm_sq);
    off_sq[k] = xnorm_sq;
    if (xnorm == 0.0) continue;
    const Complex x0 = a(k + 1, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    const Complex alpha = -phase * xnorm;
    double vnorm_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = a(k + 1 + i, k) - (i == 0 ? alpha : Complex{});
      vnorm_sq += std::norm(v[i]);
    }
    if (vnorm_sq == 0.0) continue;
    const double inv = 1.0 / std::sqrt(vnorm_sq);
    for (std::size_t i = 0; i < m; ++i) v[i] *= inv;

    // Trailing block B <- B - 2 v q* - 2 q v* with p = B v, q = p - (v* p) v.
    double kappa = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      Complex s{};
      for (std::size_t j = 0; j < m; ++j) s += a(k + 1 + i, k + 1 + j) * v[j];
      p[i] = s;
      kappa += (std::conj(v[i]) * s).real();
    }
    for (std::size_t i = 0; i < m; ++i) p[i] -= kappa * v[i];
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        a(k + 1 + i, k + 1 + j) -= 2.0 * (v[i] * std::conj(p[j]) + p[i] * std::conj(v[j]));
      }
    }
  }
  off_sq[n - 2] = std::norm(a(n - 1, n - 2));
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();

  double lo = diag[0];
  double hi = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::sqrt(off_sq[i - 1]);
    if (i + 1 < n) r += std::sqrt(off_sq[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double span = std::max(std::abs(lo), std::abs(hi));
  if (span == 0.0) return 0.0;
  // Invariant: lambda_max in [lo, hi].
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(diag, off_sq, mid) == n) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * span) break;
  }
  return 0.5 * (lo + hi);
}

double operator_norm(const ComplexMatrix& m) {
  const double scale = max_abs(m);
  if (scale == 0.0) return 0.0;
  ComplexMatrix scaled = m;
  scaled *= 1.0 / scale;
  const ComplexMatrix gram = m.rows() >= m.cols() ? adjoint_times(scaled, scaled)
                                                  : times_adjoint(scaled, scaled);
  return scale * std::sqrt(std::max(0.0, lambda_max(gram)));
}

SingularSystem singular_system(const ComplexMatrix& m) {
  require_square(m, "singular_system");
  HermEig eig = herm_eig(adjoint_times(m, m));
  const std::size_t n = m.rows();
  SingularSystem out{std::vector<double>(n), std::move(eig.eigenvectors)};
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex mv{};
      for (std::size_t j = 0; j < n; ++j) mv += m(i, j) * out.right(j, k);
      s += std::norm(mv);
    }
    out.sigma[k] = std::sqrt(s);
  }
  return out;
}

ComplexMatrix abs_function(const ComplexMatrix& m, const std::function<double(double)>& phi) {
  const SingularSystem ss = singular_system(m);
  std::vector<double> f(ss.sigma.size());
  std::transform(ss.sigma.begin(), ss.sigma.end(), f.begin(), phi);
  return spectral_compose(ss.right, f);
}

ComplexMatrix abs_value(const ComplexMatrix& m) {
  return abs_function(m, [](double s) { return s; });
}

ComplexMatrix abs_power(const ComplexMatrix& m, double e) {
  return abs_function(m, [e](double s) { return e == 0.0 ? 1.0 : std::pow(s, e); });
}

ComplexMatrix matfun_psd(const ComplexMatrix& p, const std::function<double(double)>& phi) {
  HermEig eig = herm_eig(p);
  double scale = 1.0;
  for (double l : eig.eigenvalues) scale = std::max(scale, std::abs(l));
  std::vector<double> f(eig.eigenvalues.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    double l = eig.eigenvalues[k];
    if (l < 0.0) {
      if (l < -kSpectrumBand * scale) {
        throw Error(Errc::NegativeSpectrum, "matfun_psd: eigenvalue " + std::to_string(l));
      }
      l = 0.0;
    }
    f[k] = phi(l);
  }
  return spectral_compose(eig.eigenvectors, f);
}

Polar polar_decompose(const ComplexMatrix& m) {
  const SingularSystem ss = singular_system(m);
  const std::size_t n = m.rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return ss.sigma[i] > ss.sigma[j]; });
  const double sigma_max = ss.sigma[order[0]];

  // Left factors u_i = m v_i / sigma_i, re-orthonormalized in decreasing sigma order.
  ComplexMatrix u(n, n);
  std::vector<bool> filled(n, false);
  std::size_t rank = 0;
  auto orthogonalize = [&](std::vector<Complex>& col) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!filled[k]) continue;
        Complex proj{};
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(u(i, k)) * col[i];
        for (std::size_t i = 0; i < n; ++i) col[i] -= proj * u(i, k);
      }
    }
    double s = 0.0;
    for (const auto& c : col) s += std::norm(c);
    return std::sqrt(s);
  };
  std::vector<Complex> col(n);
  for (std::size_t idx : order) {
    if (!(ss.sigma[idx] > 1e-14 * sigma_max)) break;
    for (std::size_t i = 0; i < n; ++i) {
      Complex s{};
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * ss.right(j, idx);
      col[i] = s;
    }
    const double norm = orthogonalize(col);
    if (norm <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) u(i, idx) = col[i] / norm;
    filled[idx] = true;
    ++rank;
  }
  // Complete an orthonormal basis on the kernel columns.
  std::size_t probe = 0;
  for (std::size_t idx : order) {
    if (filled[idx]) continue;
    while (probe < n) {
      std::fill(col.begin(), col.end(), Complex{});
      col[probe++] = 1.0;
      const double norm = orthogonalize(col);
      if (norm > 0.5) {
        for (std::size_t i = 0; i < n; ++i) u(i, idx) = col[i] / norm;
        filled[idx] = true;
        break;
      }
    }
  }

  Polar out{times_adjoint(u, ss.right), spectral_compose(ss.right, ss.sigma)};
  return out;
}

Cartesian cartesian(const ComplexMatrix& m) {
  require_square(m, "cartesian");
  const std::size_t n = m.rows();
  Cartesian out{ComplexMatrix(n, n), ComplexMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex mij = m(i, j);
      const Complex mji = std::conj(m(j, i));
      out.re(i, j) = 0.5 * (mij + mji);
      const Complex d = 0.5 * (mij - mji);
      out.im(i, j) = Complex(d.imag(), -d.real());  // d / i
    }
  }
  return out;
}

ComplexMatrix real_part_rotated(const ComplexMatrix& m, double theta) {
  require_square(m, "real_part_rotated");
  const Complex e = std::polar(1.0, theta);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = 0.5 * (e * m(i, j) + std::conj(e) * std::conj(m(j, i)));
    }
  }
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (!m.is_square()) return false;
  return hermitian_defect(m) <= rel_tol * std::max(1.0, frobenius_norm(m));
}

bool is_normal(const ComplexMatrix& m, double rel_tol) {
  if (!m.is_square()) return false;
  const double norm = operator_norm(m);
  const ComplexMatrix commutator = adjoint_times(m, m) - times_adjoint(m, m);
  return operator_norm(commutator) <= rel_tol * norm * norm;
}

bool is_psd(const ComplexMatrix& m, double rel_tol) {
  if (!is_hermitian(m)) return false;
  const double top = lambda_max(m);
  const double bottom = -lambda_max(-m);
  const double scale = std::max({1.0, std::abs(top), std::abs(bottom)});
  return bottom >= -rel_tol * scale;
}

}  // namespace numrad
