#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "polysol/linalg.hpp"

namespace polysol {

/// Tolerance used by identity checks on the series kernels.
inline constexpr double tol_series = 1e-10;

/// Even/odd matrix power series at a common argument: co solves X'' = BX with
/// X(0)=1, X'(0)=0 and si the companion with X(0)=0, X'(0)=1.
struct MatPair {
  Mat co;
  Mat si;
};

namespace detail {

// One pass of the defining series; converges fast once |t|^2 * ||B|| <= 1.
inline MatPair co_si_series(const Mat& B, double t) {
  const std::size_t n = B.dim();
  MatPair r{Mat::identity(n), t * Mat::identity(n)};
  Mat term_co = r.co;
  Mat term_si = r.si;
  const Mat bt2 = (t * t) * B;
  for (int k = 0; k < 200; ++k) {
    term_co = term_co * bt2 * (1.0 / ((2.0 * k + 1.0) * (2.0 * k + 2.0)));
    term_si = term_si * bt2 * (1.0 / ((2.0 * k + 2.0) * (2.0 * k + 3.0)));
    r.co += term_co;
    r.si += term_si;
    if (inf_norm(term_co) <= 1e-16 * inf_norm(r.co) &&
        inf_norm(term_si) <= 1e-16 * inf_norm(r.si))
      return r;
  }
  throw std::runtime_error("co_si: series did not converge within 200 terms");
}

inline Mat exp_series(const Mat& M) {
  const std::size_t n = M.dim();
  Mat sum = Mat::identity(n);
  Mat term = sum;
  for (int k = 1; k < 200; ++k) {
    term = term * M * (1.0 / k);
    sum += term;
    if (inf_norm(term) <= 1e-16 * inf_norm(sum)) return sum;
  }
  throw std::runtime_error("mat_exp: series did not converge within 200 terms");
}

}  // namespace detail

/// Evaluate both series at (B, t). Arguments with |t|^2 * ||B|| > 1 are halved
/// first and squared back through the doubling identities
/// co(2t) = 2 co(t)^2 - 1, si(2t) = 2 si(t) co(t).
inline MatPair co_si(const Mat& B, double t) {
  if (B.dim() == 0) throw std::invalid_argument("co_si: empty matrix");
  if (!all_finite(B) || !std::isfinite(t)) throw std::invalid_argument("co_si: non-finite input");
  if (std::abs(t) >= 1e6) throw std::invalid_argument("co_si: |t| too large");

  const double bn = inf_norm(B);
  double tr = t;
  int halvings = 0;
  while (bn * tr * tr > 1.0 && halvings < 64) {
    tr *= 0.5;
    ++halvings;
  }

  MatPair r = detail::co_si_series(B, tr);
  const Mat I = Mat::identity(B.dim());
  for (int i = 0; i < halvings; ++i) {
    Mat co2 = 2.0 * (r.co * r.co) - I;
    Mat si2 = 2.0 * (r.si * r.co);
    r.co = std::move(co2);
    r.si = std::move(si2);
  }
  return r;
}

/// Scalar solutions of f'' = b f with (1,0) resp. (0,1) initial data,
/// total and continuous in b across the b = 0 seam.
inline std::pair<double, double> scalar_cos_sin(double b, double t) {
  if (b > 0.0) {
    const double r = std::sqrt(b);
    return {std::cosh(r * t), std::sinh(r * t) / r};
  }
  if (b < 0.0) {
    const double r = std::sqrt(-b);
    return {std::cos(r * t), std::sin(r * t) / r};
  }
  return {1.0, t};
}

/// Matrix exponential by scaling and squaring with a plain series core.
inline Mat mat_exp(const Mat& M) {
  if (!all_finite(M)) throw std::invalid_argument("mat_exp: non-finite input");
  int s = 0;
  double nrm = inf_norm(M);
  while (nrm > 0.5 && s < 64) {
    nrm *= 0.5;
    ++s;
  }
  Mat e = detail::exp_series(M * std::ldexp(1.0, -s));
  for (int i = 0; i < s; ++i) e = e * e;
  return e;
}

/// phi1(M) = sum M^k / (k+1)!, the entire function with exp(M) = 1 + M phi1(M).
/// Handles singular M, which the closed form (exp(M)-1) M^{-1} does not.
inline Mat phi1(const Mat& M) {
  if (!all_finite(M)) throw std::invalid_argument("phi1: non-finite input");
  const std::size_t n = M.dim();
  int s = 0;
  double nrm = inf_norm(M);
  while (nrm > 0.5 && s < 64) {
    nrm *= 0.5;
    ++s;
  }
  const Mat X = M * std::ldexp(1.0, -s);

  Mat p = Mat::identity(n);
  Mat term = p;
  for (int k = 1; k < 200; ++k) {
    term = term * X * (1.0 / (k + 1.0));
    p += term;
    if (inf_norm(term) <= 1e-16 * inf_norm(p)) break;
  }

  // phi1(2X) = phi1(X) (exp(X) + 1) / 2, with exp squared along.
  Mat e = detail::exp_series(X);
  const Mat I = Mat::identity(n);
  for (int i = 0; i < s; ++i) {
    p = 0.5 * (p * (e + I));
    e = e * e;
  }
  return p;
}

}  // namespace polysol
