#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

#include "polysol/linalg.hpp"
#include "polysol/matfun.hpp"

namespace polysol {

/// Curve data for the second order system x'' = B x + d with
/// x(0) = v, x'(0) = w.
struct SolitonSpec {
  Mat B;
  Vec d;
  Vec v;
  Vec w;

  std::size_t dim() const { return B.dim(); }

  void validate() const {
    const std::size_t n = B.dim();
    if (d.size() != n || v.size() != n || w.size() != n)
      throw std::invalid_argument("SolitonSpec: inconsistent dimensions");
    if (!all_finite(B) || !all_finite(d) || !all_finite(v) || !all_finite(w))
      throw std::invalid_argument("SolitonSpec: non-finite entries");
  }
};

enum class SourceCase {
  Homogeneous,         // d = 0
  SolvableShift,       // d = B d_* for some d_*
  NilpotentAugmented,  // B is the nilpotent Jordan block
  PureTranslation,     // B = 0, d != 0
  MixedSplit,          // singular B with a component of d outside range(B)
};

struct InhomogeneityCase {
  SourceCase tag = SourceCase::Homogeneous;
  std::optional<Vec> d_star;
  std::optional<Vec> kernel_part;
};

/// Decide which solution formula applies to (B, d). Rank decisions go through
/// least squares with threshold 1e-9 (1 + ||d||); the nilpotent-block case is
/// matched structurally, never detected numerically.
inline InhomogeneityCase classify(const SolitonSpec& spec) {
  spec.validate();
  const std::size_t n = spec.dim();

  if (norm(spec.d) == 0.0) return {SourceCase::Homogeneous, std::nullopt, std::nullopt};
  if (spec.B.is_zero()) return {SourceCase::PureTranslation, std::nullopt, spec.d};

  if (spec.B.is_nilpotent_block()) {
    Vec d_star(n);
    for (std::size_t j = 1; j < n; ++j) d_star[j] = spec.d[j - 1];
    Vec kern(n);
    kern[n - 1] = spec.d[n - 1];
    return {SourceCase::NilpotentAugmented, d_star, kern};
  }

  std::vector<Vec> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = spec.B(i, j);
    rows.push_back(std::move(r));
  }
  LeastSquaresResult ls = least_squares(rows, spec.d, 1e-12);
  if (ls.residual <= 1e-9 * (1.0 + norm(spec.d)))
    return {SourceCase::SolvableShift, ls.x, std::nullopt};
  return {SourceCase::MixedSplit, ls.x, spec.d - spec.B * ls.x};
}

namespace detail {

// c_*(t) for the nilpotent block: component j (0-based) is t^{2(n-j)}/(2(n-j))!.
inline Vec nilpotent_particular(std::size_t n, double t) {
  Vec c(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t p = 2 * (n - j);
    double term = 1.0;
    for (std::size_t k = 1; k <= p; ++k) term *= t / static_cast<double>(k);
    c[j] = term;
  }
  return c;
}

inline Vec nilpotent_particular_deriv(std::size_t n, double t) {
  Vec c(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t p = 2 * (n - j) - 1;
    double term = 1.0;
    for (std::size_t k = 1; k <= p; ++k) term *= t / static_cast<double>(k);
    c[j] = term;
  }
  return c;
}

// Classical fixed-step fourth order integration of p'' = B p + g with zero
// initial data, from 0 to t, using full steps of size h0 plus one partial
// final step. The fixed step keeps rounding for nearby t values correlated,
// which matters when callers difference the result.
inline std::pair<Vec, Vec> integrate_second_order(const Mat& B, const Vec& g, double t,
                                                  double h0) {
  const std::size_t n = B.dim();
  Vec p(n), q(n);
  if (t == 0.0) return {p, q};
  const double sign = t > 0.0 ? 1.0 : -1.0;
  const long full = static_cast<long>(std::floor(std::abs(t) / h0));
  const double tail = t - sign * h0 * static_cast<double>(full);
  for (long step = 0; step <= full; ++step) {
    const double h = (step < full) ? sign * h0 : tail;
    if (h == 0.0) break;
    const Vec k1p = q;
    const Vec k1q = B * p + g;
    const Vec k2p = q + (h / 2.0) * k1q;
    const Vec k2q = B * (p + (h / 2.0) * k1p) + g;
    const Vec k3p = q + (h / 2.0) * k2q;
    const Vec k3q = B * (p + (h / 2.0) * k2p) + g;
    const Vec k4p = q + h * k3q;
    const Vec k4q = B * (p + h * k3p) + g;
    p += (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    q += (h / 6.0) * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
  }
  return {p, q};
}

// Particular solution for the kernel component, with a Richardson step-halving
// check against silent integrator misuse.
inline std::pair<Vec, Vec> mixed_particular(const Mat& B, const Vec& g, double t) {
  auto coarse = integrate_second_order(B, g, t, 1e-3);
  auto fine = integrate_second_order(B, g, t, 5e-4);
  if (norm(fine.first - coarse.first) > 1e-8 * (1.0 + norm(fine.first)))
    throw std::runtime_error("eval_curve: integrator step validation failed");
  return fine;
}

}  // namespace detail

/// Curve position and velocity at a single parameter value.
struct CurvePoint {
  Vec pos;
  Vec vel;
};

inline CurvePoint eval_curve_full(const SolitonSpec& spec, double t,
                                  const InhomogeneityCase& cls) {
  const std::size_t n = spec.dim();
  switch (cls.tag) {
    case SourceCase::Homogeneous: {
      MatPair p = co_si(spec.B, t);
      return {p.co * spec.v + p.si * spec.w, spec.B * (p.si * spec.v) + p.co * spec.w};
    }
    case SourceCase::PureTranslation: {
      return {(t * t / 2.0) * spec.d + t * spec.w + spec.v, t * spec.d + spec.w};
    }
    case SourceCase::SolvableShift: {
      const Vec& ds = *cls.d_star;
      MatPair p = co_si(spec.B, t);
      return {p.co * (spec.v + ds) + p.si * spec.w - ds,
              spec.B * (p.si * (spec.v + ds)) + p.co * spec.w};
    }
    case SourceCase::NilpotentAugmented: {
      const Vec& ds = *cls.d_star;
      const double dn = spec.d[n - 1];
      MatPair p = co_si(spec.B, t);
      Vec pos = p.co * (spec.v + ds) + p.si * spec.w - ds +
                dn * detail::nilpotent_particular(n, t);
      Vec vel = spec.B * (p.si * (spec.v + ds)) + p.co * spec.w +
                dn * detail::nilpotent_particular_deriv(n, t);
      return {std::move(pos), std::move(vel)};
    }
    case SourceCase::MixedSplit: {
      const Vec& ds = *cls.d_star;
      MatPair p = co_si(spec.B, t);
      auto part = detail::mixed_particular(spec.B, *cls.kernel_part, t);
      return {p.co * (spec.v + ds) + p.si * spec.w - ds + part.first,
              spec.B * (p.si * (spec.v + ds)) + p.co * spec.w + part.second};
    }
  }
  std::abort();
}

inline CurvePoint eval_curve_full(const SolitonSpec& spec, double t) {
  return eval_curve_full(spec, t, classify(spec));
}

/// c(t) for the spec's case of the inhomogeneous system.
inline Vec eval_curve(const SolitonSpec& spec, double t) {
  return eval_curve_full(spec, t).pos;
}

/// A(s) = (1 + co_B(s)) / 2 with b(s) recovered numerically from the t = 0
/// residual and validated for t-independence. One code path covers all cases,
/// including singular B with d outside range(B).
inline AffineMap affine_family(const SolitonSpec& spec, double s) {
  const InhomogeneityCase cls = classify(spec);
  const std::size_t n = spec.dim();

  Mat A = 0.5 * (Mat::identity(n) + co_si(spec.B, s).co);
  const Vec c0 = eval_curve_full(spec, 0.0, cls).pos;
  const Vec cs0 = 0.25 * (eval_curve_full(spec, -s, cls).pos + 2.0 * c0 +
                          eval_curve_full(spec, s, cls).pos);
  Vec b = cs0 - A * c0;

  double worst = 0.0;
  double scale = 0.0;
  for (int i = 0; i < 33; ++i) {
    const double t = -4.0 + 8.0 * i / 32.0;
    const Vec ct = eval_curve_full(spec, t, cls).pos;
    const Vec lhs = 0.25 * (eval_curve_full(spec, t - s, cls).pos + 2.0 * ct +
                            eval_curve_full(spec, t + s, cls).pos);
    worst = std::max(worst, norm(lhs - (A * ct + b)));
    scale = std::max(scale, norm(ct));
  }
  if (worst > 1e-8 * (1.0 + scale))
    throw std::runtime_error("affine_family: spec is not a soliton at this tolerance");

  return {std::move(A), std::move(b)};
}

/// The t-symmetric quarter sum (c(t-s) + c(t+s)) / 4; solves the wave
/// equation in (s, t) for any curve of the system.
inline Vec wave_family(const SolitonSpec& spec, double s, double t) {
  const InhomogeneityCase cls = classify(spec);
  return 0.25 * (eval_curve_full(spec, t - s, cls).pos +
                 eval_curve_full(spec, t + s, cls).pos);
}

/// E(t) = |c'|^2 / 2 - <B c, c> / 2 - <d, c>. Constant in t when B is
/// symmetric; the velocity is evaluated analytically, not by differencing.
inline double energy(const SolitonSpec& spec, double t) {
  const CurvePoint p = eval_curve_full(spec, t);
  return 0.5 * dot(p.vel, p.vel) - 0.5 * dot(spec.B * p.pos, p.pos) - dot(spec.d, p.pos);
}

}  // namespace polysol
