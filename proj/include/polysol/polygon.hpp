#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polysol/linalg.hpp"
#include "polysol/soliton.hpp"

namespace polysol {

/// Ordered vertex list, either a closed N-gon (indices mod N) or a finite
/// window [j_min, j_max] of an infinite polygon.
class Polygon {
 public:
  enum class Topology { Closed, Open };

  static Polygon closed(std::vector<Vec> vertices) {
    if (vertices.size() < 3) throw std::invalid_argument("closed polygon needs >= 3 vertices");
    return Polygon(Topology::Closed, 0, std::move(vertices));
  }

  static Polygon open_window(long j_min, std::vector<Vec> vertices) {
    if (vertices.empty()) throw std::invalid_argument("open window needs >= 1 vertex");
    return Polygon(Topology::Open, j_min, std::move(vertices));
  }

  Topology topology() const { return topology_; }
  bool is_closed() const { return topology_ == Topology::Closed; }
  std::size_t count() const { return vertices_.size(); }
  std::size_t dim() const { return vertices_.empty() ? 0 : vertices_[0].size(); }

  long j_min() const { return j_min_; }
  long j_max() const { return j_min_ + static_cast<long>(vertices_.size()) - 1; }

  const std::vector<Vec>& vertices() const { return vertices_; }

  /// Vertex by polygon index: wraps for closed polygons, window-relative for
  /// open ones (throws outside the window).
  const Vec& at(long j) const {
    if (is_closed()) {
      const long n = static_cast<long>(vertices_.size());
      return vertices_[static_cast<std::size_t>(((j % n) + n) % n)];
    }
    if (j < j_min() || j > j_max()) throw std::out_of_range("vertex index outside window");
    return vertices_[static_cast<std::size_t>(j - j_min_)];
  }

 private:
  Polygon(Topology topology, long j_min, std::vector<Vec> vertices)
      : topology_(topology), j_min_(j_min), vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("polygon needs vertices");
    const std::size_t d = vertices_[0].size();
    for (const Vec& v : vertices_)
      if (v.size() != d) throw std::invalid_argument("vertices of mixed dimension");
  }

  Topology topology_;
  long j_min_;
  std::vector<Vec> vertices_;
};

/// Midpoint construction: each output vertex is the midpoint of two
/// consecutive input vertices. Open windows lose their last index.
inline Polygon midpoint_map(const Polygon& x) {
  if (x.count() < 2) throw std::invalid_argument("midpoint_map: needs >= 2 vertices");
  std::vector<Vec> out;
  if (x.is_closed()) {
    const long n = static_cast<long>(x.count());
    out.reserve(x.count());
    for (long j = 0; j < n; ++j) out.push_back(0.5 * (x.at(j) + x.at(j + 1)));
    return Polygon::closed(std::move(out));
  }
  out.reserve(x.count() - 1);
  for (long j = x.j_min(); j < x.j_max(); ++j) out.push_back(0.5 * (x.at(j) + x.at(j + 1)));
  return Polygon::open_window(x.j_min(), std::move(out));
}

/// The shortening map: the three-point average with weights (a, 1-2a, a).
/// For the canonical weight 1/4 this is the midpoint construction applied
/// twice with the index shift, and is computed exactly that way; for other
/// weights it is one explicit Euler step of the semidiscrete flow.
inline Polygon shorten_T(const Polygon& x, double alpha = 0.25) {
  if (alpha == 0.0) throw std::invalid_argument("shorten_T: alpha must be nonzero");
  if (x.count() < 3) throw std::invalid_argument("shorten_T: needs >= 3 vertices");

  if (alpha == 0.25) {
    Polygon mm = midpoint_map(midpoint_map(x));
    if (x.is_closed()) {
      const long n = static_cast<long>(mm.count());
      std::vector<Vec> out;
      out.reserve(mm.count());
      for (long j = 0; j < n; ++j) out.push_back(mm.at(j - 1));
      return Polygon::closed(std::move(out));
    }
    return Polygon::open_window(mm.j_min() + 1, mm.vertices());
  }

  auto combine = [alpha](const Vec& a, const Vec& b, const Vec& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] + alpha * ((a[i] - 2.0 * b[i]) + c[i]);
    return r;
  };

  std::vector<Vec> out;
  if (x.is_closed()) {
    const long n = static_cast<long>(x.count());
    out.reserve(x.count());
    for (long j = 0; j < n; ++j) out.push_back(combine(x.at(j - 1), x.at(j), x.at(j + 1)));
    return Polygon::closed(std::move(out));
  }
  out.reserve(x.count() - 2);
  for (long j = x.j_min() + 1; j < x.j_max(); ++j)
    out.push_back(combine(x.at(j - 1), x.at(j), x.at(j + 1)));
  return Polygon::open_window(x.j_min() + 1, std::move(out));
}

/// Vertices c(a + s j) for j in [j_min, j_max].
inline Polygon sample_polygon(const SolitonSpec& spec, double a, double s, long j_min,
                              long j_max) {
  if (s <= 0.0) throw std::invalid_argument("sample_polygon: s must be positive");
  if (j_max < j_min + 1) throw std::invalid_argument("sample_polygon: empty window");
  const InhomogeneityCase cls = classify(spec);
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(j_max - j_min + 1));
  for (long j = j_min; j <= j_max; ++j)
    out.push_back(eval_curve_full(spec, a + s * static_cast<double>(j), cls).pos);
  return Polygon::open_window(j_min, std::move(out));
}

/// The unique polygon through x_{j0} = u, x_{j0+1} = v carried onto itself by
/// (A, b) under the shortening map, extended over [j_min, j_max] by the
/// three-term recursion x_{j+1} = 2(2A - 1) x_j - x_{j-1} + 4b.
inline Polygon soliton_recursion(const AffineMap& map, const Vec& u, const Vec& v, long j0,
                                 long j_min, long j_max) {
  if (!(j_min <= j0 && j0 + 1 <= j_max))
    throw std::invalid_argument("soliton_recursion: j0, j0+1 must lie inside the window");
  const std::size_t n = u.size();
  const Mat C = 2.0 * (2.0 * map.A - Mat::identity(n));
  const Vec shift = 4.0 * map.b;

  std::vector<Vec> out(static_cast<std::size_t>(j_max - j_min + 1), Vec(n));
  auto slot = [&](long j) -> Vec& { return out[static_cast<std::size_t>(j - j_min)]; };
  slot(j0) = u;
  slot(j0 + 1) = v;
  for (long j = j0 + 1; j < j_max; ++j) slot(j + 1) = C * slot(j) - slot(j - 1) + shift;
  for (long j = j0; j > j_min; --j) slot(j - 1) = C * slot(j) - slot(j + 1) + shift;
  return Polygon::open_window(j_min, std::move(out));
}

/// Closed regular N-gon with vertices at angles 2 pi j k / N, the k-th
/// Fourier eigenvector of the shortening map; returns its eigenvalue
/// (1 + cos(2 pi k / N)) / 2 alongside.
inline std::pair<Polygon, double> eigenpolygon(long N, long k) {
  if (N < 3) throw std::invalid_argument("eigenpolygon: N must be >= 3");
  if (k < 0 || k >= N) throw std::invalid_argument("eigenpolygon: k out of range");
  std::vector<Vec> vs;
  vs.reserve(static_cast<std::size_t>(N));
  for (long j = 0; j < N; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(N);
    vs.push_back(Vec{std::cos(theta), std::sin(theta)});
  }
  const double mu = 0.5 * (1.0 + std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                          static_cast<double>(N)));
  return {Polygon::closed(std::move(vs)), mu};
}

namespace detail {
inline void require_closed(const Polygon& x, const char* who) {
  if (!x.is_closed()) throw std::invalid_argument(std::string(who) + ": closed polygon required");
}
}  // namespace detail

inline double length(const Polygon& x) {
  detail::require_closed(x, "length");
  double L = 0.0;
  const long n = static_cast<long>(x.count());
  for (long j = 0; j < n; ++j) L += norm(x.at(j + 1) - x.at(j));
  return L;
}

inline double f2_energy(const Polygon& x) {
  detail::require_closed(x, "f2_energy");
  double F = 0.0;
  const long n = static_cast<long>(x.count());
  for (long j = 0; j < n; ++j) {
    const Vec e = x.at(j + 1) - x.at(j);
    F += dot(e, e);
  }
  return 0.5 * F;
}

inline Polygon grad_f2(const Polygon& x) {
  detail::require_closed(x, "grad_f2");
  std::vector<Vec> out;
  const long n = static_cast<long>(x.count());
  out.reserve(x.count());
  for (long j = 0; j < n; ++j) out.push_back(-(x.at(j - 1) - 2.0 * x.at(j) + x.at(j + 1)));
  return Polygon::closed(std::move(out));
}

inline Vec center_of_mass(const Polygon& x) {
  detail::require_closed(x, "center_of_mass");
  Vec cm(x.dim());
  for (const Vec& v : x.vertices()) cm += v;
  return (1.0 / static_cast<double>(x.count())) * cm;
}

/// Residual report for the affine self-mapping test T(x)_j = A x_j + b.
struct SolitonReport {
  double max_residual = 0.0;
  long argmax_index = 0;
  AffineMap fitted_map;
  /// Set when the fit is non-unique (affinely degenerate vertices); the
  /// residual is still meaningful.
  bool degenerate_fit = false;
};

/// Check the polygon against a given affine map, or fit one by least squares
/// on the interior equations when none is given.
inline SolitonReport verify_soliton(const Polygon& x,
                                    const std::optional<AffineMap>& map = std::nullopt) {
  if (x.count() < 5) throw std::invalid_argument("verify_soliton: needs >= 5 vertices");
  const std::size_t n = x.dim();
  const Polygon tx = shorten_T(x);

  std::vector<long> interior;
  if (x.is_closed()) {
    for (long j = 0; j < static_cast<long>(x.count()); ++j) interior.push_back(j);
  } else {
    for (long j = tx.j_min(); j <= tx.j_max(); ++j) interior.push_back(j);
  }

  SolitonReport report;
  if (map) {
    report.fitted_map = *map;
  } else {
    std::vector<Vec> rows;
    rows.reserve(interior.size());
    for (long j : interior) {
      Vec r(n + 1);
      for (std::size_t i = 0; i < n; ++i) r[i] = x.at(j)[i];
      r[n] = 1.0;
      rows.push_back(std::move(r));
    }
    Mat A(n);
    Vec b(n);
    bool degenerate = false;
    for (std::size_t i = 0; i < n; ++i) {
      Vec rhs(interior.size());
      for (std::size_t r = 0; r < interior.size(); ++r) rhs[r] = tx.at(interior[r])[i];
      LeastSquaresResult ls = least_squares(rows, rhs);
      for (std::size_t j = 0; j < n; ++j) A(i, j) = ls.x[j];
      b[i] = ls.x[n];
      degenerate = degenerate || ls.rank_deficient;
    }
    report.fitted_map = {std::move(A), std::move(b)};
    report.degenerate_fit = degenerate;
  }

  report.argmax_index = interior.front();
  for (long j : interior) {
    const double r = norm(tx.at(j) - report.fitted_map(x.at(j)));
    if (r > report.max_residual) {
      report.max_residual = r;
      report.argmax_index = j;
    }
  }
  return report;
}

}  // namespace polysol
