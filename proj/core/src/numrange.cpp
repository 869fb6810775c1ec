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

#include "numrad/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "numrad/error.hpp"
#include "numrad/linalg.hpp"
#include "numrad/seed.hpp"

namespace numrad {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kInitialIntervals = 64;
constexpr int kEvalBudget = 4096;

void require_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(Errc::NonSquare, std::string(op) + ": expected a square matrix, got " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t >= kTwoPi ? 0.0 : t + 0.0;
}

// g(theta) = lambda_max(cos(theta) X - sin(theta) Y) with X = Re m, Y = Im m.
class ThetaProfile {
 public:
  explicit ThetaProfile(const ComplexMatrix& m) : x_(m.rows(), m.rows()), y_(m.rows(), m.rows()),
                                                   work_(m.rows(), m.rows()) {
    const std::size_t n = m.rows();
    const Complex half_i(0.0, 0.5);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Complex mji = std::conj(m(j, i));
        x_(i, j) = 0.5 * (m(i, j) + mji);
        y_(i, j) = -half_i * (m(i, j) - mji);
      }
    }
  }

  double operator()(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    auto xs = x_.data();
    auto ys = y_.data();
    auto ws = work_.data();
    for (std::size_t k = 0; k < ws.size(); ++k) ws[k] = c * xs[k] - s * ys[k];
    ++evaluations_;
    return lambda_max_overwrite(work_);
  }

  int evaluations() const noexcept { return evaluations_; }

 private:
  ComplexMatrix x_, y_, work_;
  int evaluations_ = 0;
};

struct Interval {
  double a, b, ga, gb, upper;
  bool operator<(const Interval& o) const noexcept { return upper < o.upper; }
};

// Every g is a max of curves |z| cos(theta + arg z), so inside a bracket of half-width h
// a curve peaking in the bracket is within a factor cos(h) of an endpoint value.
double bracket_upper(double ga, double gb, double half_width) {
  const double e = std::max(ga, gb);
  return e > 0.0 ? e / std::cos(half_width) : e;
}

}  // namespace

std::string_view to_string(RadiusMethod method) noexcept {
  switch (method) {
    case RadiusMethod::ThetaSweep: return "sweep";
    case RadiusMethod::Ellipse2x2: return "ellipse";
    case RadiusMethod::RayleighAscent: return "rayleigh";
  }
  return "?";
}

double re_norm_at_theta(const ComplexMatrix& m, double theta) {
  require_square(m, "re_norm_at_theta");
  ThetaProfile g(m);
  return g(theta);
}

RadiusResult numerical_radius(const ComplexMatrix& m, double tol) {
  require_square(m, "numerical_radius");
  if (!(tol >= 1e-12)) {
    throw Error(Errc::OutOfRange, "numerical_radius: tol must be >= 1e-12");
  }
  RadiusResult out;
  out.method = RadiusMethod::ThetaSweep;
  const double norm = operator_norm(m);
  if (norm == 0.0) return out;
  const std::size_t n = m.rows();
  const double target = tol * std::max(1.0, norm);
  const double rounding = 8.0 * static_cast<double>(n) * kEps * norm;
  // w(m) <= (||m|| + ||m^2||^{1/2}) / 2 caps the bracket bound on flat profiles.
  const double cap = 0.5 * (norm + std::sqrt(operator_norm(m * m)));

  ThetaProfile g(m);
  std::vector<double> samples(kInitialIntervals);
  const double step = kTwoPi / kInitialIntervals;
  for (int k = 0; k < kInitialIntervals; ++k) samples[k] = g(step * k);

  double lower = samples[0];
  double arg = 0.0;
  auto record = [&](double theta, double v) {
    if (v > lower || (v == lower && theta < arg)) {
      lower = v;
      arg = theta;
    }
  };
  for (int k = 0; k < kInitialIntervals; ++k) record(step * k, samples[k]);

  std::priority_queue<Interval> queue;
  for (int k = 0; k < kInitialIntervals; ++k) {
    const double ga = samples[k];
    const double gb = samples[(k + 1) % kInitialIntervals];
    queue.push({step * k, step * (k + 1), ga, gb, bracket_upper(ga, gb, 0.5 * step)});
  }

  double upper = std::min(cap, queue.top().upper);
  while (upper - lower + rounding > target && g.evaluations() < kEvalBudget) {
    const Interval top = queue.top();
    queue.pop();
    const double mid = 0.5 * (top.a + top.b);
    const double gm = g(mid);
    record(mid, gm);
    const double h = 0.25 * (top.b - top.a);
    queue.push({top.a, mid, top.ga, gm, bracket_upper(top.ga, gm, h)});
    queue.push({mid, top.b, gm, top.gb, bracket_upper(gm, top.gb, h)});
    upper = std::min(cap, queue.top().upper);
  }
  upper = std::max(upper, lower);
  out.value = std::max(0.0, lower);
  out.certified_tolerance = upper - lower + rounding;
  out.argmax_theta = wrap_angle(arg);
  return out;
}

RadiusResult nr_ellipse_2x2(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(Errc::WrongDimension, "nr_ellipse_2x2: expected a 2x2 matrix, got " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
  const Complex tr = m(0, 0) + m(1, 1);
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const Complex centre = 0.5 * tr;
  const Complex disc = std::sqrt(centre * centre - det);  // half the focal separation
  const Complex l1 = centre + disc;
  const Complex l2 = centre - disc;
  double frob_sq = 0.0;
  for (const auto& v : m.data()) frob_sq += std::norm(v);
  const double b = 0.5 * std::sqrt(std::max(0.0, frob_sq - std::norm(l1) - std::norm(l2)));
  const double a = std::sqrt(b * b + std::norm(disc));
  const double dabs = std::abs(disc);
  const Complex u = dabs > 0.0 ? disc / dabs : Complex(1.0);
  const Complex kappa = std::conj(centre) * u;
  const double kr = kappa.real();
  const double ki = kappa.imag();
  const double c2 = std::norm(centre);

  // |z(t)|^2 for z(t) = centre + u (a cos t + i b sin t).
  auto f = [&](double t) {
    const double ct = std::cos(t);
    const double st = std::sin(t);
    return c2 + 2.0 * (a * kr * ct - b * ki * st) + a * a * ct * ct + b * b * st * st;
  };
  const double curvature = 2.0 * a * std::abs(kr) + 2.0 * b * std::abs(ki) +
                           2.0 * std::abs(a * a - b * b);

  struct Arc {
    double lo, hi, flo, fhi, upper;
    bool operator<(const Arc& o) const noexcept { return upper < o.upper; }
  };
  auto arc_upper = [&](double lo, double hi, double flo, double fhi) {
    const double w = hi - lo;
    return std::max(flo, fhi) + curvature * w * w / 8.0;
  };

  const double step = kTwoPi / kInitialIntervals;
  std::vector<double> samples(kInitialIntervals);
  double best = -1.0;
  double best_t = 0.0;
  for (int k = 0; k < kInitialIntervals; ++k) {
    samples[k] = f(step * k);
    if (samples[k] > best) {
      best = samples[k];
      best_t = step * k;
    }
  }
  std::priority_queue<Arc> queue;
  for (int k = 0; k < kInitialIntervals; ++k) {
    const double flo = samples[k];
    const double fhi = samples[(k + 1) % kInitialIntervals];
    queue.push({step * k, step * (k + 1), flo, fhi, arc_upper(step * k, step * (k + 1), flo, fhi)});
  }
  const double scale = std::max(1.0, c2 + a * a);
  for (int it = 0; it < 20000 && queue.top().upper - best > 1e-15 * scale; ++it) {
    const Arc top = queue.top();
    queue.pop();
    const double mid = 0.5 * (top.lo + top.hi);
    const double fm = f(mid);
    if (fm > best) {
      best = fm;
      best_t = mid;
    }
    queue.push({top.lo, mid, top.flo, fm, arc_upper(top.lo, mid, top.flo, fm)});
    queue.push({mid, top.hi, fm, top.fhi, arc_upper(mid, top.hi, fm, top.fhi)});
  }
  const double upper_sq = std::max(best, queue.top().upper);

  RadiusResult out;
  out.method = RadiusMethod::Ellipse2x2;
  out.value = std::sqrt(std::max(0.0, best));
  const double rounding = 16.0 * kEps * std::sqrt(scale);
  out.certified_tolerance = std::sqrt(std::max(0.0, upper_sq)) - out.value + rounding;
  const Complex z = centre + u * Complex(a * std::cos(best_t), b * std::sin(best_t));
  out.argmax_theta = std::abs(z) > 0.0 ? wrap_angle(-std::arg(z)) : 0.0;
  return out;
}

RadiusResult nr_rayleigh(const ComplexMatrix& m, int restarts, std::uint64_t seed) {
  require_square(m, "nr_rayleigh");
  if (restarts < 1) throw Error(Errc::OutOfRange, "nr_rayleigh: restarts must be >= 1");
  constexpr int kIterations = 200;
  const std::size_t n = m.rows();
  RadiusResult out;
  out.method = RadiusMethod::RayleighAscent;
  out.certified_tolerance = std::numeric_limits<double>::infinity();
  const ComplexMatrix m_adj = adjoint(m);

  auto apply = [n](const ComplexMatrix& a, const std::vector<Complex>& x) {
    std::vector<Complex> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex s{};
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
      y[i] = s;
    }
    return y;
  };
  auto dot = [n](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    Complex s{};  // y* x
    for (std::size_t i = 0; i < n; ++i) s += std::conj(y[i]) * x[i];
    return s;
  };
  auto normalize = [&](std::vector<Complex>& v) {
    const double nv = std::sqrt(dot(v, v).real());
    if (nv > 0.0) {
      for (auto& e : v) e /= nv;
    }
    return nv;
  };

  double best = -1.0;
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(mix_seed({seed, static_cast<std::uint64_t>(r)}));
    std::normal_distribution<double> normal;
    std::vector<Complex> x(n);
    for (auto& e : x) e = Complex(normal(rng), normal(rng));
    normalize(x);
    std::vector<Complex> prev_step(n, Complex{});
    double value = std::abs(dot(apply(m, x), x));

    for (int it = 0; it < kIterations; ++it) {
      const Complex z = dot(apply(m, x), x);
      const Complex phase = std::abs(z) > 0.0 ? std::conj(z) / std::abs(z) : Complex(1.0);
      // H = (e^{-i phi} m + e^{i phi} m*) / 2 restricted to span{x, residual, previous step}.
      auto h_apply = [&](const std::vector<Complex>& v) {
        std::vector<Complex> a1 = apply(m, v);
        std::vector<Complex> a2 = apply(m_adj, v);
        for (std::size_t i = 0; i < n; ++i) a1[i] = 0.5 * (phase * a1[i] + std::conj(phase) * a2[i]);
        return a1;
      };
      std::vector<Complex> hx = h_apply(x);
      const double rho = dot(hx, x).real();
      std::vector<std::vector<Complex>> basis{x};
      std::vector<Complex> resid(n);
      for (std::size_t i = 0; i < n; ++i) resid[i] = hx[i] - rho * x[i];
      for (const auto* cand : {&resid, &prev_step}) {
        std::vector<Complex> v = *cand;
        for (int pass = 0; pass < 2; ++pass) {
          for (const auto& q : basis) {
            const Complex c = dot(v, q);
            for (std::size_t i = 0; i < n; ++i) v[i] -= c * q[i];
          }
        }
        const double nv = std::sqrt(dot(v, v).real());
        if (nv > 1e-10 * std::max(1.0, std::sqrt(dot(*cand, *cand).real()))) {
          for (auto& e : v) e /= nv;
          basis.push_back(std::move(v));
        }
      }
      if (basis.size() == 1) break;  // x is already an eigenvector of H
      const std::size_t k = basis.size();
      std::vector<std::vector<Complex>> hq;
      hq.reserve(k);
      hq.push_back(hx);
      for (std::size_t j = 1; j < k; ++j) hq.push_back(h_apply(basis[j]));
      ComplexMatrix proj(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) proj(i, j) = dot(hq[j], basis[i]);
      }
      for (std::size_t i = 0; i < k; ++i) {
        proj(i, i) = proj(i, i).real();
        for (std::size_t j = i + 1; j < k; ++j) {
          const Complex avg = 0.5 * (proj(i, j) + std::conj(proj(j, i)));
          proj(i, j) = avg;
          proj(j, i) = std::conj(avg);
        }
      }
      const HermEig eig = herm_eig(proj);
      std::vector<Complex> next(n, Complex{});
      for (std::size_t j = 0; j < k; ++j) {
        const Complex coef = eig.eigenvectors(j, k - 1);
        for (std::size_t i = 0; i < n; ++i) next[i] += coef * basis[j][i];
      }
      normalize(next);
      const double next_value = std::abs(dot(apply(m, next), next));
      if (next_value <= value) {
        // Ritz on H guarantees ascent up to rounding; stop at stagnation.
        break;
      }
      for (std::size_t i = 0; i < n; ++i) prev_step[i] = next[i] - x[i];
      const bool converged = next_value - value <= 1e-15 * std::max(1.0, value);
      x = std::move(next);
      value = next_value;
      if (converged) break;
    }
    if (value > best) {
      best = value;
      const Complex z = dot(apply(m, x), x);
      out.argmax_theta = std::abs(z) > 0.0 ? wrap_angle(-std::arg(z)) : 0.0;
    }
  }
  out.value = std::max(0.0, best);
  return out;
}

double spectral_radius_psd_product(const ComplexMatrix& b, const ComplexMatrix& c) {
  if (!b.is_square() || !c.is_square() || b.rows() != c.rows()) {
    throw Error(Errc::DimensionMismatch, "spectral_radius_psd_product: operands must be square "
                                         "of equal size");
  }
  if (!is_psd(b)) throw Error(Errc::NotPSD, "spectral_radius_psd_product: b is not PSD");
  if (!is_psd(c)) throw Error(Errc::NotPSD, "spectral_radius_psd_product: c is not PSD");
  const ComplexMatrix root = matfun_psd(b, [](double t) { return std::sqrt(t); });
  ComplexMatrix sandwich = root * c * root;
  const std::size_t n = sandwich.rows();
  for (std::size_t i = 0; i < n; ++i) {
    sandwich(i, i) = sandwich(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (sandwich(i, j) + std::conj(sandwich(j, i)));
      sandwich(i, j) = avg;
      sandwich(j, i) = std::conj(avg);
    }
  }
  return std::max(0.0, lambda_max_overwrite(sandwich));
}

BlockIdentityReport check_block_identities(const BlockMatrix2x2& blocks, double tol) {
  constexpr double kRadiusTol = 1e-12;
  auto w = [](const ComplexMatrix& m) { return numerical_radius(m, kRadiusTol).value; };
  const ComplexMatrix& a = blocks.a();
  const ComplexMatrix& b = blocks.b();
  const ComplexMatrix& d = blocks.d();
  const Complex i(0.0, 1.0);

  BlockIdentityReport out;
  out.diag_residual = std::abs(w(blocks.diag_part()) - std::max(w(a), w(d)));
  out.sum_residual =
      std::abs(w(BlockMatrix2x2(a, b, b, a).embed()) - std::max(w(a + b), w(a - b)));
  out.rot_residual =
      std::abs(w(BlockMatrix2x2(a, b, -b, a).embed()) - std::max(w(a + i * b), w(a - i * b)));
  out.diag_ok = out.diag_residual <= tol;
  out.sum_ok = out.sum_residual <= tol;
  out.rot_ok = out.rot_residual <= tol;
  return out;
}

namespace {

void require_unit(const ComplexMatrix& x, std::size_t n, const char* name) {
  if (x.cols() != 1 || x.rows() != n) {
    throw Error(Errc::DimensionMismatch, std::string(name) + " must be a column of length " +
                                             std::to_string(n));
  }
  if (std::abs(vector_norm(x) - 1.0) > 1e-12) {
    throw Error(Errc::NotUnit, std::string(name) + " must have unit norm");
  }
}

}  // namespace

ScalarCheck check_jensen(const ComplexMatrix& h, const ComplexMatrix& x,
                         const std::function<double(double)>& phi) {
  if (!h.is_square()) throw Error(Errc::NonSquare, "check_jensen: h must be square");
  require_unit(x, h.rows(), "x");
  if (!is_psd(h)) throw Error(Errc::NotPSD, "check_jensen: h must be Hermitian PSD");
  ScalarCheck out;
  out.lhs = phi(std::max(0.0, inner(h * x, x).real()));
  out.rhs = inner(matfun_psd(h, phi) * x, x).real();
  out.holds = out.lhs <= out.rhs + 1e-10;
  return out;
}

ScalarCheck check_mixed_cs(const ComplexMatrix& m, const ComplexMatrix& x, const ComplexMatrix& y,
                           const FactorPair& pair) {
  require_square(m, "check_mixed_cs");
  require_unit(x, m.rows(), "x");
  require_unit(y, m.rows(), "y");
  if (!factor_pair_valid(pair)) {
    throw Error(Errc::InvalidPair, "check_mixed_cs: alpha must lie in [0, 1]");
  }
  const ComplexMatrix f_sq = abs_power(m, 2.0 * pair.alpha);
  const ComplexMatrix g_sq = abs_power(adjoint(m), 2.0 * (1.0 - pair.alpha));
  ScalarCheck out;
  out.lhs = std::abs(inner(m * x, y));
  out.rhs = std::sqrt(std::max(0.0, inner(f_sq * x, x).real()) *
                      std::max(0.0, inner(g_sq * y, y).real()));
  out.holds = out.lhs <= out.rhs + 1e-10;
  return out;
}

}  // namespace numrad
