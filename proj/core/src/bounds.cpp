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

#include "numrad/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "json.hpp"
#include "numrad/error.hpp"
#include "numrad/linalg.hpp"
#include "numrad/numrange.hpp"

namespace numrad {
namespace {

using P = ParamKind;
using S = OperandShape;

const std::vector<BoundInfo>& catalog() {
  static const std::vector<BoundInfo> kCatalog = {
      {BoundId::NormSandwichLower, "||A||/2 <= w(A)", S::Single, {}, "none"},
      {BoundId::NormSandwichUpper, "w(A) <= ||A||", S::Single, {}, "none"},
      {BoundId::PowerInequality, "w(A^n) <= w(A)^n", S::Single, {P::N}, "n >= 1"},
      {BoundId::OffdiagHalfSum, "w(S) <= (||B|| + ||C||)/2", S::Offdiag, {}, "none"},
      {BoundId::KittanehAbs, "w(A) <= || |A| + |A*| ||/2", S::Single, {}, "none"},
      {BoundId::KittanehSqLower, "|| |A|^2 + |A*|^2 ||/4 <= w^2(A)", S::Single, {}, "none"},
      {BoundId::KittanehSqUpper, "w^2(A) <= || |A|^2 + |A*|^2 ||/2", S::Single, {}, "none"},
      {BoundId::CartesianPowerLower,
       "2^(-r/2-1) || |ReA+ImA|^r + |ReA-ImA|^r || <= w^r(A)", S::Single, {P::R}, "r >= 2"},
      {BoundId::CartesianPowerUpper, "w^r(A) <= || |ReA+ImA|^r + |ReA-ImA|^r ||/2", S::Single,
       {P::R}, "r >= 2"},
      {BoundId::Thm2_5,
       "h(w(S)) <= || h(f^2(|B|)) + h(g^2(|B|)) ||/4 + || h(f^2(|C|)) + h(g^2(|C|)) ||/4",
       S::Offdiag, {P::Gauge, P::Pair}, "h convex nondecreasing, f g = t"},
      {BoundId::Cor2_6,
       "w^r(S) <= || |B|^(2ra) + |B|^(2r(1-a)) ||/4 + || |C|^(2ra) + |C|^(2r(1-a)) ||/4",
       S::Offdiag, {P::Alpha, P::R}, "a in [0,1], r >= 1"},
      {BoundId::Rem2_7_Lower, "w^(1/2)(BC) <= w(S)", S::Offdiag, {}, "none"},
      {BoundId::Rem2_7_PsdRho, "||B^(1/2) C^(1/2)||^2 = rho(BC) <= w(BC)", S::Offdiag, {},
       "B, C positive semidefinite"},
      {BoundId::Cor2_8,
       "||B+C||^r <= 2^(r-2) (|| |B|^(2ra) + |B|^(2r(1-a)) || + || |C|^(2ra) + |C|^(2r(1-a)) ||)",
       S::Offdiag, {P::Alpha, P::R}, "C normal, a in [0,1], r >= 1"},
      {BoundId::Thm2_9a,
       "w^r(S) <= 2^(-r/2-1) max^(1/p)(al, be) max^(1/q)(ga, de), f1,f2 on |B*-iC|, |B*+iC|",
       S::Offdiag, {P::Quad, P::Holder, P::R}, "r >= 2, 1/p + 1/q = 1, f_k g_k = t"},
      {BoundId::Thm2_9b,
       "w^r(S) <= 2^(-r/2-1) max^(1/p)(al', be') max^(1/q)(ga', de'), f1,g2 on |B*-iC|, |B*+iC|",
       S::Offdiag, {P::Quad, P::Holder, P::R}, "r >= 2, 1/p + 1/q = 1, f_k g_k = t"},
      {BoundId::Thm3_1,
       "h(w(T)) <= max(|| h(f^2(|A|)) + h(g^2(|A|)) ||, || h(f^2(|D|)) + h(g^2(|D|)) ||)/2",
       S::Diag, {P::Gauge, P::Pair}, "h convex nondecreasing, f g = t"},
      {BoundId::Cor3_2,
       "w^r(T) <= max(|| |A|^(2ra) + |A|^(2r(1-a)) ||, || |D|^(2ra) + |D|^(2r(1-a)) ||)/2",
       S::Diag, {P::Alpha, P::R}, "a in [0,1], r >= 1"},
      {BoundId::Cor3_2_Single, "w^r(A) <= || |A|^(2ra) + |A|^(2r(1-a)) ||/2", S::Single,
       {P::Alpha, P::R}, "a in [0,1], r >= 1"},
      {BoundId::Cor3_3,
       "h(w(Y)/2) <= max(|| h(f^2(|A|)) + h(g^2(|A|)) ||, same for D)/4 + "
       "(|| h(f^2(|B|)) + h(g^2(|B|)) || + same for C)/8",
       S::Full, {P::Gauge, P::Pair}, "h convex nondecreasing, f g = t"},
      {BoundId::Cor3_4,
       "max(w^r(A+-B), w^r(A+-iB)) <= 2^(r-2) (|| |A|^(2ra) + |A|^(2r(1-a)) || + same for B)",
       S::Pair, {P::Alpha, P::R}, "a in [0,1], r >= 1"},
      {BoundId::Thm3_5,
       "h(w(T)) <= max(|| h(f^2(|A|)) + h(g^2(|A*|)) ||, || h(f^2(|D|)) + h(g^2(|D*|)) ||)/2",
       S::Diag, {P::Gauge, P::Pair}, "h convex nondecreasing, f g = t"},
      {BoundId::Cor3_6,
       "w^r(T) <= max(|| |A|^(2ra) + |A*|^(2r(1-a)) ||, || |D|^(2ra) + |D*|^(2r(1-a)) ||)/2",
       S::Diag, {P::Alpha, P::R}, "a in [0,1], r >= 1"},
      {BoundId::Cor3_6_Single, "w^r(A) <= || |A|^(2ra) + |A*|^(2r(1-a)) ||/2", S::Single,
       {P::Alpha, P::R}, "a in [0,1], r >= 1"},
      {BoundId::Cor3_6_Power, "w^r(A) <= || |A|^r + |A*|^r ||/2", S::Single, {P::R}, "r >= 1"},
      {BoundId::Thm3_8,
       "h(w^r(T)) <= max(|| h(f^(pr)(|A|))/p + h(g^(qr)(|A*|))/q ||, same for D)", S::Diag,
       {P::Gauge, P::Pair, P::Holder, P::R}, "h convex nondecreasing, f g = t, r min(p,q) >= 2"},
      {BoundId::Cor3_9, "w^(2r)(A) <= || |A|^(2pra)/p + |A*|^(2qr(1-a))/q ||", S::Single,
       {P::Holder, P::R, P::Alpha}, "a in [0,1], r min(p,q) >= 2"},
      {BoundId::Cor3_10, "w^r(A) <= || |A|^(pra)/p + |A*|^(qr(1-a))/q ||", S::Single,
       {P::Holder, P::R, P::Alpha}, "a in [0,1], r min(p,q) >= 2"},
      {BoundId::Thm3_13a,
       "w^r(T) <= max^(1/p)(al, be) max^(1/q)(ga, de)/2, f1,f2 on |ReX+ImX|, |ReX-ImX|", S::Diag,
       {P::Quad, P::Holder, P::R}, "r >= 2, 1/p + 1/q = 1, f_k g_k = t"},
      {BoundId::Thm3_13b,
       "w^r(T) <= max^(1/p)(al', be') max^(1/q)(ga', de')/2, f1,g2 on |ReX+ImX|, |ReX-ImX|",
       S::Diag, {P::Quad, P::Holder, P::R}, "r >= 2, 1/p + 1/q = 1, f_k g_k = t"},
      {BoundId::Cor3_14,
       "w^r(A) <= || f1^(rp)(|B+C|) + g2^(rp)(|B-C|) ||^(1/p) || g1^(rq)(|B+C|) + "
       "f2^(rq)(|B-C|) ||^(1/q)/2",
       S::Single, {P::Quad, P::Holder, P::R}, "r >= 2, 1/p + 1/q = 1, f_k g_k = t"},
      {BoundId::Cor3_15,
       "w^r(A) <= || |B+C|^(rpa) + |B-C|^(rp(1-a)) ||^(1/p) || |B+C|^(rq(1-a)) + "
       "|B-C|^(rqa) ||^(1/q)/2",
       S::Single, {P::Holder, P::R, P::Alpha}, "a in [0,1], r >= 2, 1/p + 1/q = 1"},
  };
  return kCatalog;
}

constexpr std::string_view kNames[] = {
    "NormSandwichLower", "NormSandwichUpper", "PowerInequality", "OffdiagHalfSum",
    "KittanehAbs",       "KittanehSqLower",   "KittanehSqUpper", "CartesianPowerLower",
    "CartesianPowerUpper", "Thm2_5",          "Cor2_6",          "Rem2_7_Lower",
    "Rem2_7_PsdRho",     "Cor2_8",            "Thm2_9a",         "Thm2_9b",
    "Thm3_1",            "Cor3_2",            "Cor3_2_Single",   "Cor3_3",
    "Cor3_4",            "Thm3_5",            "Cor3_6",          "Cor3_6_Single",
    "Cor3_6_Power",      "Thm3_8",            "Cor3_9",          "Cor3_10",
    "Thm3_13a",          "Thm3_13b",          "Cor3_14",         "Cor3_15",
};
static_assert(std::size(kNames) == kBoundCount);

constexpr auto make_ids() {
  std::array<BoundId, kBoundCount> ids{};
  for (std::size_t i = 0; i < kBoundCount; ++i) ids[i] = static_cast<BoundId>(i);
  return ids;
}
constexpr auto kIds = make_ids();

bool has_param(const BoundParams& p, ParamKind k) {
  switch (k) {
    case P::Gauge: return p.gauge.has_value();
    case P::Pair: return p.pair.has_value();
    case P::Quad: return p.quad.has_value();
    case P::Holder: return p.holder.has_value();
    case P::R: return p.r.has_value();
    case P::Alpha: return p.alpha.has_value();
    case P::N: return p.n.has_value();
  }
  return false;
}

}  // namespace

RConstraint r_constraint(BoundId id) noexcept {
  switch (id) {
    case BoundId::Cor2_6:
    case BoundId::Cor2_8:
    case BoundId::Cor3_2:
    case BoundId::Cor3_2_Single:
    case BoundId::Cor3_4:
    case BoundId::Cor3_6:
    case BoundId::Cor3_6_Single:
    case BoundId::Cor3_6_Power:
      return RConstraint::AtLeastOne;
    case BoundId::CartesianPowerLower:
    case BoundId::CartesianPowerUpper:
    case BoundId::Thm2_9a:
    case BoundId::Thm2_9b:
    case BoundId::Thm3_13a:
    case BoundId::Thm3_13b:
    case BoundId::Cor3_14:
    case BoundId::Cor3_15:
      return RConstraint::AtLeastTwo;
    case BoundId::Thm3_8:
    case BoundId::Cor3_9:
    case BoundId::Cor3_10:
      return RConstraint::HolderScaled;
    default:
      return RConstraint::None;
  }
}

namespace {

// A computed side of an inequality with its numerical uncertainty.
struct Side {
  double value = 0.0;
  double unc = 0.0;
};

// Pushes an uncertain argument through a nondecreasing phi using the finite-difference
// slope with a 1.25 safety factor.
Side compose(const Side& s, const std::function<double(double)>& phi) {
  const double v = phi(s.value);
  if (!std::isfinite(s.unc)) return {v, std::numeric_limits<double>::infinity()};
  const double up = phi(s.value + s.unc);
  return {v, 1.25 * std::max(0.0, up - v)};
}

Side exact(double v) { return {v, 0.0}; }

class Evaluator {
 public:
  Evaluator(const BlockMatrix2x2& blocks, const BoundParams& params, double tol)
      : blocks_(blocks), params_(params), tol_(tol) {}

  Side w(const ComplexMatrix& m) const {
    const RadiusResult r = numerical_radius(m, tol_);
    return {r.value, r.certified_tolerance};
  }

  // max_i phi(sigma_i(x)) = || phi(|x|) || for nonnegative phi.
  static double spectral_max(const ComplexMatrix& x, const std::function<double(double)>& phi) {
    const SingularSystem ss = singular_system(x);
    double best = 0.0;
    for (double s : ss.sigma) best = std::max(best, phi(s));
    return best;
  }

  // || phi(|x|) + psi(|y|) || for nonnegative phi, psi.
  static double psd_sum_norm(const ComplexMatrix& x, const std::function<double(double)>& phi,
                             const ComplexMatrix& y, const std::function<double(double)>& psi) {
    return std::max(0.0, lambda_max(abs_function(x, phi) + abs_function(y, psi)));
  }

  static std::function<double(double)> pw(double e) {
    return [e](double s) { return e == 0.0 ? 1.0 : std::pow(s, e); };
  }

  std::function<double(double)> h() const {
    const GaugeH g = *params_.gauge;
    return [g](double t) { return gauge_eval(g, t); };
  }

  // h(s^{2a}) + h(s^{2(1-a)}) with the pair's alpha.
  std::function<double(double)> gauge_pair_term() const {
    const auto hh = h();
    const double a = params_.pair->alpha;
    return [hh, a](double s) { return hh(pw(2.0 * a)(s)) + hh(pw(2.0 * (1.0 - a))(s)); };
  }

  // s^{2ra} + s^{2r(1-a)} with the scalar alpha.
  std::function<double(double)> power_pair_term() const {
    const double a = *params_.alpha;
    const double r = *params_.r;
    return [a, r](double s) { return pw(2.0 * r * a)(s) + pw(2.0 * r * (1.0 - a))(s); };
  }

  // Four norms shared by the Hoelder forms over (x1, x2) and (y1, y2).
  struct Quad {
    double al, be, ga, de;
  };
  Quad holder_quad(const ComplexMatrix& x1, const ComplexMatrix& x2, const ComplexMatrix& y1,
                   const ComplexMatrix& y2, bool swap_second) const {
    const double r = *params_.r;
    const double p = params_.holder->p;
    const double q = params_.holder->q;
    const double a1 = params_.quad->pair1.alpha;
    const double a2 = params_.quad->pair2.alpha;
    // The primed form exchanges f2 and g2.
    const double f2 = swap_second ? 1.0 - a2 : a2;
    const double g2 = swap_second ? a2 : 1.0 - a2;
    Quad out{};
    out.al = psd_sum_norm(x1, pw(r * p * a1), x2, pw(r * p * f2));
    out.be = psd_sum_norm(y1, pw(r * p * a1), y2, pw(r * p * f2));
    out.ga = psd_sum_norm(x1, pw(r * q * (1.0 - a1)), x2, pw(r * q * g2));
    out.de = psd_sum_norm(y1, pw(r * q * (1.0 - a1)), y2, pw(r * q * g2));
    return out;
  }

  double holder_combine(const Quad& qd, double front) const {
    const double p = params_.holder->p;
    const double q = params_.holder->q;
    return front * std::pow(std::max(qd.al, qd.be), 1.0 / p) *
           std::pow(std::max(qd.ga, qd.de), 1.0 / q);
  }

  void put_quad(const Quad& qd, bool primed) {
    inter_["alpha"] = qd.al;
    inter_["beta"] = qd.be;
    inter_["gamma"] = qd.ga;
    inter_["delta"] = qd.de;
    inter_["primed"] = primed ? 1.0 : 0.0;
  }

  // |ReX + ImX| and |ReX - ImX|.
  static std::pair<ComplexMatrix, ComplexMatrix> cartesian_mix(const ComplexMatrix& x) {
    const Cartesian c = cartesian(x);
    return {c.re + c.im, c.re - c.im};
  }

  void run(BoundId id);

  Side lhs, rhs;
  std::map<std::string, double> inter_;

 private:
  const BlockMatrix2x2& blocks_;
  const BoundParams& params_;
  double tol_;
};

void Evaluator::run(BoundId id) {
  const ComplexMatrix& A = blocks_.a();
  const ComplexMatrix& B = blocks_.b();
  const ComplexMatrix& C = blocks_.c();
  const ComplexMatrix& D = blocks_.d();
  const Complex i(0.0, 1.0);
  const auto adj_a = [&] { return adjoint(A); };
  auto rpow = [](double e) {
    return [e](double t) { return std::pow(t, e); };
  };

  switch (id) {
    case BoundId::NormSandwichLower:
      lhs = exact(0.5 * operator_norm(A));
      rhs = w(A);
      return;
    case BoundId::NormSandwichUpper:
      lhs = w(A);
      rhs = exact(operator_norm(A));
      return;
    case BoundId::PowerInequality: {
      const int n = *params_.n;
      lhs = w(power(A, n));
      const Side wa = w(A);
      rhs = compose(wa, rpow(n));
      inter_["w"] = wa.value;
      return;
    }
    case BoundId::OffdiagHalfSum:
      lhs = w(blocks_.offdiag_part());
      rhs = exact(0.5 * (operator_norm(B) + operator_norm(C)));
      return;
    case BoundId::KittanehAbs:
      lhs = w(A);
      rhs = exact(0.5 * psd_sum_norm(A, pw(1.0), adj_a(), pw(1.0)));
      return;
    case BoundId::KittanehSqLower: {
      lhs = exact(0.25 * psd_sum_norm(A, pw(2.0), adj_a(), pw(2.0)));
      const Side wa = w(A);
      rhs = compose(wa, rpow(2.0));
      inter_["w"] = wa.value;
      return;
    }
    case BoundId::KittanehSqUpper: {
      const Side wa = w(A);
      lhs = compose(wa, rpow(2.0));
      rhs = exact(0.5 * psd_sum_norm(A, pw(2.0), adj_a(), pw(2.0)));
      inter_["w"] = wa.value;
      return;
    }
    case BoundId::CartesianPowerLower:
    case BoundId::CartesianPowerUpper: {
      const double r = *params_.r;
      const auto [plus, minus] = cartesian_mix(A);
      const double norm = psd_sum_norm(plus, pw(r), minus, pw(r));
      const Side wr = compose(w(A), rpow(r));
      inter_["cartesian_norm"] = norm;
      if (id == BoundId::CartesianPowerLower) {
        lhs = exact(std::pow(2.0, -r / 2.0 - 1.0) * norm);
        rhs = wr;
      } else {
        lhs = wr;
        rhs = exact(0.5 * norm);
      }
      return;
    }
    case BoundId::Thm2_5: {
      const double tb = spectral_max(B, gauge_pair_term());
      const double tc = spectral_max(C, gauge_pair_term());
      const Side ws = w(blocks_.offdiag_part());
      lhs = compose(ws, h());
      rhs = exact(0.25 * tb + 0.25 * tc);
      inter_["w"] = ws.value;
      inter_["b_term"] = tb;
      inter_["c_term"] = tc;
      return;
    }
    case BoundId::Cor2_6: {
      const double tb = spectral_max(B, power_pair_term());
      const double tc = spectral_max(C, power_pair_term());
      lhs = compose(w(blocks_.offdiag_part()), rpow(*params_.r));
      rhs = exact(0.25 * tb + 0.25 * tc);
      inter_["b_term"] = tb;
      inter_["c_term"] = tc;
      return;
    }
    case BoundId::Rem2_7_Lower: {
      const Side wbc = w(B * C);
      lhs = compose(wbc, [](double t) { return std::sqrt(t); });
      rhs = w(blocks_.offdiag_part());
      inter_["w_bc"] = wbc.value;
      return;
    }
    case BoundId::Rem2_7_PsdRho: {
      const double nrm = operator_norm(abs_power(B, 0.5) * abs_power(C, 0.5));
      lhs = exact(nrm * nrm);
      rhs = w(B * C);
      if (is_psd(B) && is_psd(C)) {
        const double rho = spectral_radius_psd_product(B, C);
        inter_["rho"] = rho;
        inter_["identity_residual"] = std::abs(lhs.value - rho);
      }
      return;
    }
    case BoundId::Cor2_8: {
      const double r = *params_.r;
      const double tb = spectral_max(B, power_pair_term());
      const double tc = spectral_max(C, power_pair_term());
      lhs = exact(std::pow(operator_norm(B + C), r));
      rhs = exact(std::pow(2.0, r - 2.0) * (tb + tc));
      inter_["b_term"] = tb;
      inter_["c_term"] = tc;
      return;
    }
    case BoundId::Thm2_9a:
    case BoundId::Thm2_9b: {
      const bool primed = id == BoundId::Thm2_9b;
      const double r = *params_.r;
      const ComplexMatrix bs = adjoint(B);
      const ComplexMatrix cs = adjoint(C);
      const ComplexMatrix x1 = bs - i * C;
      const ComplexMatrix x2 = bs + i * C;
      const ComplexMatrix y1 = B + i * cs;
      const ComplexMatrix y2 = B - i * cs;
      const Quad qd = holder_quad(x1, x2, y1, y2, primed);
      put_quad(qd, primed);
      lhs = compose(w(blocks_.offdiag_part()), rpow(r));
      rhs = exact(holder_combine(qd, std::pow(2.0, -r / 2.0 - 1.0)));
      return;
    }
    case BoundId::Thm3_1: {
      const double ta = spectral_max(A, gauge_pair_term());
      const double td = spectral_max(D, gauge_pair_term());
      lhs = compose(w(blocks_.diag_part()), h());
      rhs = exact(0.5 * std::max(ta, td));
      inter_["a_term"] = ta;
      inter_["d_term"] = td;
      return;
    }
    case BoundId::Cor3_2: {
      const double ta = spectral_max(A, power_pair_term());
      const double td = spectral_max(D, power_pair_term());
      lhs = compose(w(blocks_.diag_part()), rpow(*params_.r));
      rhs = exact(0.5 * std::max(ta, td));
      inter_["a_term"] = ta;
      inter_["d_term"] = td;
      return;
    }
    case BoundId::Cor3_2_Single: {
      const double ta = spectral_max(A, power_pair_term());
      lhs = compose(w(A), rpow(*params_.r));
      rhs = exact(0.5 * ta);
      inter_["a_term"] = ta;
      return;
    }
    case BoundId::Cor3_3: {
      const auto term = gauge_pair_term();
      const double ta = spectral_max(A, term);
      const double tb = spectral_max(B, term);
      const double tc = spectral_max(C, term);
      const double td = spectral_max(D, term);
      const auto hh = h();
      lhs = compose(w(blocks_.embed()), [hh](double t) { return hh(0.5 * t); });
      rhs = exact(0.25 * std::max(ta, td) + 0.125 * (tb + tc));
      inter_["a_term"] = ta;
      inter_["b_term"] = tb;
      inter_["c_term"] = tc;
      inter_["d_term"] = td;
      return;
    }
    case BoundId::Cor3_4: {
      const double r = *params_.r;
      Side worst{-1.0, 0.0};
      for (const ComplexMatrix& m : {A + B, A - B, A + i * B, A - i * B}) {
        const Side s = compose(w(m), rpow(r));
        if (s.value > worst.value) worst = s;
        worst.unc = std::max(worst.unc, s.unc);
      }
      const double ta = spectral_max(A, power_pair_term());
      const double tb = spectral_max(B, power_pair_term());
      lhs = worst;
      rhs = exact(std::pow(2.0, r - 2.0) * (ta + tb));
      inter_["a_term"] = ta;
      inter_["b_term"] = tb;
      return;
    }
    case BoundId::Thm3_5: {
      const auto hh = h();
      const double a = params_.pair->alpha;
      auto f_part = [hh, a](double s) { return hh(pw(2.0 * a)(s)); };
      auto g_part = [hh, a](double s) { return hh(pw(2.0 * (1.0 - a))(s)); };
      const double ta = psd_sum_norm(A, f_part, adjoint(A), g_part);
      const double td = psd_sum_norm(D, f_part, adjoint(D), g_part);
      lhs = compose(w(blocks_.diag_part()), hh);
      rhs = exact(0.5 * std::max(ta, td));
      inter_["a_term"] = ta;
      inter_["d_term"] = td;
      return;
    }
    case BoundId::Cor3_6:
    case BoundId::Cor3_6_Single: {
      const double r = *params_.r;
      const double a = *params_.alpha;
      const double ta = psd_sum_norm(A, pw(2.0 * r * a), adjoint(A), pw(2.0 * r * (1.0 - a)));
      inter_["a_term"] = ta;
      if (id == BoundId::Cor3_6_Single) {
        lhs = compose(w(A), rpow(r));
        rhs = exact(0.5 * ta);
        return;
      }
      const double td = psd_sum_norm(D, pw(2.0 * r * a), adjoint(D), pw(2.0 * r * (1.0 - a)));
      inter_["d_term"] = td;
      lhs = compose(w(blocks_.diag_part()), rpow(r));
      rhs = exact(0.5 * std::max(ta, td));
      return;
    }
    case BoundId::Cor3_6_Power: {
      const double r = *params_.r;
      lhs = compose(w(A), rpow(r));
      rhs = exact(0.5 * psd_sum_norm(A, pw(r), adj_a(), pw(r)));
      return;
    }
    case BoundId::Thm3_8: {
      const auto hh = h();
      const double r = *params_.r;
      const double p = params_.holder->p;
      const double q = params_.holder->q;
      const double a = params_.pair->alpha;
      auto f_part = [hh, p, r, a](double s) { return hh(pw(p * r * a)(s)) / p; };
      auto g_part = [hh, q, r, a](double s) { return hh(pw(q * r * (1.0 - a))(s)) / q; };
      const double ta = psd_sum_norm(A, f_part, adjoint(A), g_part);
      const double td = psd_sum_norm(D, f_part, adjoint(D), g_part);
      lhs = compose(w(blocks_.diag_part()), [hh, r](double t) { return hh(std::pow(t, r)); });
      rhs = exact(std::max(ta, td));
      inter_["a_term"] = ta;
      inter_["d_term"] = td;
      return;
    }
    case BoundId::Cor3_9:
    case BoundId::Cor3_10: {
      const double r = *params_.r;
      const double p = params_.holder->p;
      const double q = params_.holder->q;
      const double a = *params_.alpha;
      const double k = id == BoundId::Cor3_9 ? 2.0 : 1.0;
      auto f_part = [k, p, r, a](double s) { return pw(k * p * r * a)(s) / p; };
      auto g_part = [k, q, r, a](double s) { return pw(k * q * r * (1.0 - a))(s) / q; };
      lhs = compose(w(A), rpow(k * r));
      rhs = exact(psd_sum_norm(A, f_part, adj_a(), g_part));
      return;
    }
    case BoundId::Thm3_13a:
    case BoundId::Thm3_13b: {
      const bool primed = id == BoundId::Thm3_13b;
      const double r = *params_.r;
      const auto [p1, p2] = cartesian_mix(A);
      const auto [q1, q2] = cartesian_mix(D);
      const Quad qd = holder_quad(p1, p2, q1, q2, primed);
      put_quad(qd, primed);
      lhs = compose(w(blocks_.diag_part()), rpow(r));
      rhs = exact(holder_combine(qd, 0.5));
      return;
    }
    case BoundId::Cor3_14: {
      const double r = *params_.r;
      const auto [p1, p2] = cartesian_mix(A);
      const Quad qd = holder_quad(p1, p2, p1, p2, true);
      put_quad(qd, true);
      lhs = compose(w(A), rpow(r));
      rhs = exact(holder_combine(qd, 0.5));
      return;
    }
    case BoundId::Cor3_15: {
      const double r = *params_.r;
      const double p = params_.holder->p;
      const double q = params_.holder->q;
      const double a = *params_.alpha;
      const auto [p1, p2] = cartesian_mix(A);
      const double first = psd_sum_norm(p1, pw(r * p * a), p2, pw(r * p * (1.0 - a)));
      const double second = psd_sum_norm(p1, pw(r * q * (1.0 - a)), p2, pw(r * q * a));
      inter_["first_norm"] = first;
      inter_["second_norm"] = second;
      lhs = compose(w(A), rpow(r));
      rhs = exact(0.5 * std::pow(first, 1.0 / p) * std::pow(second, 1.0 / q));
      return;
    }
  }
  throw Error(Errc::UnknownBound, "unknown bound id");
}

}  // namespace

std::string_view to_string(BoundId id) noexcept {
  const auto k = static_cast<std::size_t>(id);
  return k < kBoundCount ? kNames[k] : std::string_view("?");
}

BoundId bound_from_string(std::string_view name) {
  for (std::size_t k = 0; k < kBoundCount; ++k) {
    if (kNames[k] == name) return static_cast<BoundId>(k);
  }
  throw Error(Errc::UnknownBound, "unknown bound '" + std::string(name) + "'");
}

std::span<const BoundId> all_bounds() noexcept { return kIds; }

std::string_view to_string(OperandShape shape) noexcept {
  switch (shape) {
    case S::Single: return "single";
    case S::Pair: return "pair";
    case S::Offdiag: return "offdiag";
    case S::Diag: return "diag";
    case S::Full: return "full";
  }
  return "?";
}

std::string_view to_string(ParamKind kind) noexcept {
  switch (kind) {
    case P::Gauge: return "gauge";
    case P::Pair: return "pair";
    case P::Quad: return "quad";
    case P::Holder: return "holder";
    case P::R: return "r";
    case P::Alpha: return "alpha";
    case P::N: return "n";
  }
  return "?";
}

const std::vector<BoundInfo>& list_bounds() { return catalog(); }

const BoundInfo& bound_info(BoundId id) {
  const auto k = static_cast<std::size_t>(id);
  if (k >= kBoundCount) throw Error(Errc::UnknownBound, "unknown bound id");
  return catalog()[k];
}

HypothesisReport check_hypotheses(BoundId id, const BlockMatrix2x2& blocks,
                                  const BoundParams& params) {
  const BoundInfo& info = bound_info(id);
  HypothesisReport out;
  auto set = [&](const std::string& name, bool value) {
    out.checks[name] = value;
    out.ok = out.ok && value;
  };
  for (ParamKind k : info.required) {
    if (!has_param(params, k)) set("has_" + std::string(to_string(k)), false);
  }
  auto needs = [&](ParamKind k) {
    return std::find(info.required.begin(), info.required.end(), k) != info.required.end() &&
           has_param(params, k);
  };
  if (needs(P::Gauge)) set("gauge_valid", validate_gauge(*params.gauge).valid);
  if (needs(P::Pair)) set("pair_valid", factor_pair_valid(*params.pair));
  if (needs(P::Alpha)) set("alpha_in_unit_interval", factor_pair_valid(FactorPair{*params.alpha}));
  if (needs(P::Quad)) {
    set("quad_valid", factor_pair_valid(params.quad->pair1) &&
                          factor_pair_valid(params.quad->pair2));
  }
  if (needs(P::Holder)) set("holder_valid", holder_pair_valid(*params.holder));
  if (needs(P::N)) set("n_ge_1", *params.n >= 1);
  if (needs(P::R)) {
    const double r = *params.r;
    switch (r_constraint(id)) {
      case RConstraint::AtLeastOne: set("r_ge_1", r >= 1.0); break;
      case RConstraint::AtLeastTwo: set("r_ge_2", r >= 2.0); break;
      case RConstraint::HolderScaled:
        if (has_param(params, P::Holder)) {
          set("r_min_pq_ge_2",
              r * std::min(params.holder->p, params.holder->q) >= 2.0 - 1e-12);
        }
        break;
      case RConstraint::None: break;
    }
  }
  if (id == BoundId::Cor2_8) set("c_normal", is_normal(blocks.c(), 1e-9));
  if (id == BoundId::Rem2_7_PsdRho) {
    set("b_psd", is_psd(blocks.b()));
    set("c_psd", is_psd(blocks.c()));
  }
  return out;
}

BoundReport evaluate_bound(BoundId id, const BlockMatrix2x2& blocks, const BoundParams& params,
                           double tol) {
  const BoundInfo& info = bound_info(id);
  for (ParamKind k : info.required) {
    if (!has_param(params, k)) {
      throw Error(Errc::MissingParam, std::string(to_string(id)) + " requires parameter '" +
                                          std::string(to_string(k)) + "'");
    }
  }
  BoundReport report;
  report.id = id;
  report.hypotheses = check_hypotheses(id, blocks, params);

  Evaluator ev(blocks, params, tol);
  ev.run(id);
  report.lhs = ev.lhs.value;
  report.rhs = ev.rhs.value;
  report.slack = report.rhs - report.lhs;
  const double scale = std::max({1.0, std::abs(report.lhs), std::abs(report.rhs)});
  report.tol_effective = ev.lhs.unc + ev.rhs.unc + tol * scale;
  report.holds = report.slack >= -report.tol_effective;
  report.intermediates = std::move(ev.inter_);
  return report;
}

std::vector<TightnessEntry> compare_tightness(std::span<const BoundConfig> configs,
                                              const BlockMatrix2x2& blocks, double tol) {
  std::vector<std::size_t> order(configs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<TightnessEntry> entries;
  entries.reserve(configs.size());
  for (const BoundConfig& c : configs) {
    const BoundReport r = evaluate_bound(c.id, blocks, c.params, tol);
    entries.push_back({c.id, r.rhs, r.slack, r.holds});
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (entries[x].rhs != entries[y].rhs) return entries[x].rhs < entries[y].rhs;
    return static_cast<int>(entries[x].id) < static_cast<int>(entries[y].id);
  });
  std::vector<TightnessEntry> out;
  out.reserve(order.size());
  for (std::size_t k : order) out.push_back(entries[k]);
  return out;
}

namespace {

nlohmann::json report_json(const BoundReport& r) {
  nlohmann::json hyp = nlohmann::json::object();
  hyp["ok"] = r.hypotheses.ok;
  for (const auto& [k, v] : r.hypotheses.checks) hyp[k] = v;
  nlohmann::json inter = nlohmann::json::object();
  for (const auto& [k, v] : r.intermediates) inter[k] = v;
  return {{"id", std::string(to_string(r.id))},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"slack", r.slack},
          {"holds", r.holds},
          {"tol", r.tol_effective},
          {"hypotheses", std::move(hyp)},
          {"intermediates", std::move(inter)}};
}

}  // namespace

std::string to_json(const BoundReport& report) { return report_json(report).dump(2); }

std::string to_json(std::span<const BoundReport> reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

std::string to_json(std::span<const TightnessEntry> ranking) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : ranking) {
    arr.push_back({{"id", std::string(to_string(e.id))},
                   {"rhs", e.rhs},
                   {"slack", e.slack},
                   {"holds", e.holds}});
  }
  return arr.dump(2);
}

std::string catalog_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const BoundInfo& b : list_bounds()) {
    nlohmann::json req = nlohmann::json::array();
    for (ParamKind k : b.required) req.push_back(std::string(to_string(k)));
    arr.push_back({{"id", std::string(to_string(b.id))},
                   {"anchor", std::string(b.anchor)},
                   {"operands", std::string(to_string(b.shape))},
                   {"required", std::move(req)},
                   {"hypotheses", std::string(b.hypotheses)}});
  }
  return arr.dump(2);
}

}  // namespace numrad
