#include <cmath>
#include <random>

#include "doctest.h"
#include "polysol/polysol.hpp"

using namespace polysol;

namespace {

Polygon unit_square() {
  return Polygon::closed({Vec{0, 0}, Vec{1, 0}, Vec{1, 1}, Vec{0, 1}});
}

Polygon random_closed(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Vec> vs;
  vs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vs.push_back(Vec{u(rng), u(rng)});
  return Polygon::closed(std::move(vs));
}

double vdist(const Vec& a, const Vec& b) { return inf_norm(a - b); }

}  // namespace

TEST_CASE("midpoint_map on the unit square") {
  const Polygon m = midpoint_map(unit_square());
  CHECK(m.at(0) == Vec{0.5, 0.0});
  CHECK(m.at(1) == Vec{1.0, 0.5});
  CHECK(m.at(2) == Vec{0.5, 1.0});
  CHECK(m.at(3) == Vec{0.0, 0.5});
}

TEST_CASE("midpoint_map fixes constant polygons") {
  const Polygon c = Polygon::closed({Vec{2, 3}, Vec{2, 3}, Vec{2, 3}});
  const Polygon m = midpoint_map(c);
  for (long j = 0; j < 3; ++j) CHECK(m.at(j) == Vec{2, 3});
}

TEST_CASE("midpoint_map never increases length") {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    const Polygon x = random_closed(rng, 3 + i % 14);
    CHECK(length(midpoint_map(x)) <= length(x) + 1e-12);
  }
}

TEST_CASE("shorten_T interior vertex by hand") {
  const Polygon x = Polygon::open_window(0, {Vec{0, 0}, Vec{1, 0}, Vec{0, 1}});
  const Polygon t = shorten_T(x);
  CHECK(t.j_min() == 1);
  CHECK(t.j_max() == 1);
  CHECK(t.at(1) == Vec{0.5, 0.25});
}

TEST_CASE("shorten_T fixes linear polygons") {
  // Integer data keeps every average exact, so fixed means bitwise fixed.
  const Vec u{1, 2}, v{0, 1};
  std::vector<Vec> vs;
  for (long j = -3; j <= 3; ++j) vs.push_back(static_cast<double>(j) * u + v);
  const Polygon x = Polygon::open_window(-3, vs);
  for (double alpha : {0.25, 0.3, -0.1}) {
    const Polygon t = shorten_T(x, alpha);
    for (long j = t.j_min(); j <= t.j_max(); ++j) CHECK(t.at(j) == x.at(j));
  }
}

TEST_CASE("shorten_T preserves the center of mass of closed polygons") {
  std::mt19937 rng(29);
  for (int i = 0; i < 20; ++i) {
    const Polygon x = random_closed(rng, 5 + i % 10);
    for (double alpha : {0.25, 0.4}) {
      CHECK(vdist(center_of_mass(shorten_T(x, alpha)), center_of_mass(x)) <= 1e-14);
    }
  }
}

TEST_CASE("shorten_T rejects degenerate inputs") {
  const Polygon x = Polygon::open_window(0, {Vec{0, 0}, Vec{1, 0}, Vec{0, 1}});
  CHECK_THROWS_AS(shorten_T(x, 0.0), std::invalid_argument);
  const Polygon tiny = Polygon::open_window(0, {Vec{0, 0}, Vec{1, 0}});
  CHECK_THROWS_AS(shorten_T(tiny), std::invalid_argument);
}

TEST_CASE("sample_polygon lands on the introductory curve") {
  const SolitonSpec spec{Mat::from_rows({{-4, 0}, {0, -9}}), Vec{0, 0}, Vec{1, 1}, Vec{0, 0}};
  const Polygon x = sample_polygon(spec, 0.0, 0.4, -8, 8);
  CHECK(x.j_min() == -8);
  CHECK(x.j_max() == 8);
  for (long j = -8; j <= 8; ++j) {
    const double t = 0.4 * static_cast<double>(j);
    CHECK(vdist(x.at(j), Vec{std::cos(2.0 * t), std::cos(3.0 * t)}) <= 1e-12);
  }
}

TEST_CASE("sample_polygon of a constant curve is constant") {
  const SolitonSpec spec{Mat(2), Vec{0, 0}, Vec{1, -1}, Vec{0, 0}};
  const Polygon x = sample_polygon(spec, 0.3, 0.9, 0, 6);
  for (long j = 0; j <= 6; ++j) CHECK(x.at(j) == Vec{1, -1});
}

TEST_CASE("shorten_T of a sample equals the quarter combination") {
  const SolitonSpec spec{Mat::from_rows({{-4, 0}, {0, -9}}), Vec{0, 0}, Vec{1, 1}, Vec{0, 0}};
  const Polygon x = sample_polygon(spec, 0.0, 0.4, -8, 8);
  const Polygon t = shorten_T(x);
  for (long j = t.j_min(); j <= t.j_max(); ++j) {
    const Vec q = 0.25 * (x.at(j - 1) + 2.0 * x.at(j) + x.at(j + 1));
    CHECK(vdist(t.at(j), q) <= 1e-12);
  }
}

TEST_CASE("soliton_recursion: identity map gives the linear polygon") {
  const Vec u{1, 2}, v{3, 5};
  const AffineMap id{Mat::identity(2), Vec{0, 0}};
  const Polygon x = soliton_recursion(id, u, v, 0, -5, 5);
  for (long j = -5; j <= 5; ++j) {
    const Vec expect = u + static_cast<double>(j) * (v - u);
    CHECK(vdist(x.at(j), expect) <= 1e-12);
  }
}

TEST_CASE("soliton_recursion matches the sampled curve") {
  const SolitonSpec spec{Mat::from_rows({{-4, 0}, {0, -9}}), Vec{0, 0}, Vec{1, 1}, Vec{0, 0}};
  const AffineMap map = affine_family(spec, 0.4);
  const Vec u = eval_curve(spec, 0.0);
  const Vec v = eval_curve(spec, 0.4);
  const Polygon rec = soliton_recursion(map, u, v, 0, -20, 20);
  const Polygon ref = sample_polygon(spec, 0.0, 0.4, -20, 20);
  for (long j = -20; j <= 20; ++j) CHECK(vdist(rec.at(j), ref.at(j)) <= 1e-6);
}

TEST_CASE("soliton_recursion is reversible") {
  const AffineMap map{Mat::from_rows({{0.9, 0.1}, {-0.2, 0.8}}), Vec{0.3, -0.1}};
  const Vec u{1, 0}, v{0.5, 0.5};
  const Polygon up = soliton_recursion(map, u, v, 0, 0, 12);
  // restart from the far end and come back
  const Polygon down = soliton_recursion(map, up.at(11), up.at(12), 11, 0, 12);
  CHECK(vdist(down.at(0), u) <= 1e-12);
  CHECK(vdist(down.at(1), v) <= 1e-12);
}

TEST_CASE("eigenpolygon eigenvalues") {
  CHECK(eigenpolygon(4, 1).second == doctest::Approx(0.5).epsilon(1e-15));
  const auto [constant, mu0] = eigenpolygon(7, 0);
  CHECK(mu0 == 1.0);
  for (long j = 0; j < 7; ++j) CHECK(vdist(constant.at(j), Vec{1, 0}) <= 1e-15);
}

TEST_CASE("eigenpolygon is an eigenvector of the shortening map") {
  const auto [z, mu] = eigenpolygon(12, 5);
  const Polygon t = shorten_T(z);
  for (long j = 0; j < 12; ++j) CHECK(vdist(t.at(j), mu * z.at(j)) <= 1e-12);
}

TEST_CASE("length and F2 of reference shapes") {
  CHECK(length(unit_square()) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(f2_energy(unit_square()) == doctest::Approx(2.0).epsilon(1e-15));
  const Polygon c = Polygon::closed({Vec{1, 1}, Vec{1, 1}, Vec{1, 1}});
  CHECK(length(c) == 0.0);
  CHECK(f2_energy(c) == 0.0);
  for (long j = 0; j < 3; ++j) CHECK(grad_f2(c).at(j) == Vec{0, 0});
}

TEST_CASE("grad_f2 is equivariant under the linear part of affine maps") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const Polygon x = random_closed(rng, 6 + i % 6);
    const Mat A = Mat::from_rows({{u(rng), u(rng)}, {u(rng), u(rng)}});
    const Vec b{u(rng), u(rng)};
    std::vector<Vec> mapped;
    for (const Vec& v : x.vertices()) mapped.push_back(A * v + b);
    const Polygon ax = Polygon::closed(std::move(mapped));
    const Polygon g = grad_f2(x);
    const Polygon ga = grad_f2(ax);
    for (long j = 0; j < static_cast<long>(x.count()); ++j)
      CHECK(vdist(ga.at(j), A * g.at(j)) <= 1e-13);
  }
}

TEST_CASE("verify_soliton accepts eigenpolygons with the homothety map") {
  const auto [z, mu] = eigenpolygon(12, 1);
  const SolitonReport r = verify_soliton(z, AffineMap{mu * Mat::identity(2), Vec{0, 0}});
  CHECK(r.max_residual <= 1e-12);
}

TEST_CASE("verify_soliton fits the map when none is given") {
  const auto [z, mu] = eigenpolygon(10, 1);
  const SolitonReport r = verify_soliton(z);
  CHECK(r.max_residual <= 1e-12);
  CHECK(inf_norm(r.fitted_map.A - mu * Mat::identity(2)) <= 1e-10);
  CHECK(inf_norm(r.fitted_map.b) <= 1e-10);
}

TEST_CASE("verify_soliton rejects a seeded random polygon") {
  std::mt19937 rng(424242);
  const Polygon x = random_closed(rng, 10);
  const SolitonReport r = verify_soliton(x);
  CHECK(r.max_residual > 1e-3);
}

TEST_CASE("verify_soliton gives residual zero on exact linear polygons") {
  const Vec u{1, 2}, v{0, 1};
  std::vector<Vec> vs;
  for (long j = 0; j < 7; ++j) vs.push_back(static_cast<double>(j) * u + v);
  const Polygon x = Polygon::open_window(0, vs);
  const SolitonReport r = verify_soliton(x, AffineMap{Mat::identity(2), Vec{0, 0}});
  CHECK(r.max_residual == 0.0);
}

TEST_CASE("verify_soliton needs enough vertices") {
  const Polygon x = Polygon::closed({Vec{0, 0}, Vec{1, 0}, Vec{0, 1}});
  CHECK_THROWS_AS(verify_soliton(x), std::invalid_argument);
}
