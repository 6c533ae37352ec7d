#include <cmath>
#include <random>

#include "doctest.h"
#include "polysol/polysol.hpp"

using namespace polysol;

namespace {

// Independent oracle: 40 explicit terms of the defining scalar series.
double series_cos(double b, double t) {
  double sum = 0.0, term = 1.0;
  for (int k = 0; k < 40; ++k) {
    sum += term;
    term *= b * t * t / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
  }
  return sum;
}

double series_sin(double b, double t) {
  double sum = 0.0, term = t;
  for (int k = 0; k < 40; ++k) {
    sum += term;
    term *= b * t * t / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return sum;
}

Mat random_mat(std::mt19937& rng, std::size_t n, double scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scale * u(rng);
  return m;
}

double mat_dist(const Mat& a, const Mat& b) { return inf_norm(a - b); }

}  // namespace

TEST_CASE("co_si of the zero matrix truncates to (I, tI)") {
  const Mat B(2);
  const MatPair p = co_si(B, 5.0);
  CHECK(p.co == Mat::identity(2));
  CHECK(p.si == 5.0 * Mat::identity(2));
}

TEST_CASE("co_si of the 2x2 nilpotent block is I + (t^2/2) N exactly") {
  const Mat N = Mat::from_rows({{0, 1}, {0, 0}});
  const double t = 0.7;
  const MatPair p = co_si(N, t);
  Mat expect_co = Mat::identity(2);
  expect_co(0, 1) = t * t / 2.0;
  CHECK(p.co == expect_co);
  Mat expect_si = t * Mat::identity(2);
  expect_si(0, 1) = t * t * t / 6.0;
  CHECK(p.si == expect_si);
}

TEST_CASE("co_si of -I at t = pi is the circular pair (-I, 0)") {
  const Mat B = -1.0 * Mat::identity(2);
  const MatPair p = co_si(B, std::numbers::pi);
  CHECK(mat_dist(p.co, -1.0 * Mat::identity(2)) <= tol_series);
  CHECK(inf_norm(p.si) <= tol_series);
}

TEST_CASE("scalar_cos_sin branch values") {
  CHECK(scalar_cos_sin(0.0, 7.0) == std::pair{1.0, 7.0});
  const auto [c, s] = scalar_cos_sin(4.0, 1.0);
  CHECK(c == doctest::Approx(std::cosh(2.0)).epsilon(1e-15));
  CHECK(s == doctest::Approx(std::sinh(2.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("scalar_cos_sin is continuous across b = 0") {
  const auto [c, s] = scalar_cos_sin(-1e-12, 1.0);
  CHECK(std::abs(c - 1.0) <= 1e-9);
  CHECK(std::abs(s - 1.0) <= 1e-9);
}

TEST_CASE("scalar_cos_sin matches the truncated series for small arguments") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ub(-2.0, 2.0), ut(-1.5, 1.5);
  for (int i = 0; i < 200; ++i) {
    const double b = ub(rng), t = ut(rng);
    const auto [c, s] = scalar_cos_sin(b, t);
    CHECK(std::abs(c - series_cos(b, t)) <= 1e-12 * (1.0 + std::abs(c)));
    CHECK(std::abs(s - series_sin(b, t)) <= 1e-12 * (1.0 + std::abs(s)));
  }
}

TEST_CASE("co_si on 1x1 matrices agrees with the scalar closed forms") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ub(-9.0, 9.0), ut(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double b = ub(rng), t = ut(rng);
    Mat B(1);
    B(0, 0) = b;
    const MatPair p = co_si(B, t);
    const auto [c, s] = scalar_cos_sin(b, t);
    CHECK(std::abs(p.co(0, 0) - c) <= 1e-11 * (1.0 + std::abs(c)));
    CHECK(std::abs(p.si(0, 0) - s) <= 1e-11 * (1.0 + std::abs(s)));
  }
}

TEST_CASE("Pythagorean identity co^2 - B si^2 = I") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> ut(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
    const Mat B = random_mat(rng, n, 1.0);
    const double t = ut(rng);
    const MatPair p = co_si(B, t);
    const Mat lhs = p.co * p.co - B * (p.si * p.si);
    CHECK(mat_dist(lhs, Mat::identity(n)) <= tol_series * (1.0 + inf_norm(p.co * p.co)));
  }
}

TEST_CASE("mat_exp basics") {
  CHECK(mat_exp(Mat(3)) == Mat::identity(3));

  const double theta = 1.234;
  const Mat J = Mat::from_rows({{0, -theta}, {theta, 0}});
  const Mat R = mat_exp(J);
  const Mat expect = Mat::from_rows({{std::cos(theta), -std::sin(theta)},
                                     {std::sin(theta), std::cos(theta)}});
  CHECK(mat_dist(R, expect) <= 1e-14);
}

TEST_CASE("exp of the companion block reproduces the co/si pair") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> ut(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    const Mat B = random_mat(rng, 2, 1.5);
    const double t = ut(rng);
    Mat M(4);
    for (std::size_t r = 0; r < 2; ++r) {
      M(r, r + 2) = t;
      for (std::size_t c = 0; c < 2; ++c) M(r + 2, c) = t * B(r, c);
    }
    const Mat E = mat_exp(M);
    const MatPair p = co_si(B, t);
    const Mat Bsi = B * p.si;
    double worst = 0.0;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        worst = std::max(worst, std::abs(E(r, c) - p.co(r, c)));
        worst = std::max(worst, std::abs(E(r, c + 2) - p.si(r, c)));
        worst = std::max(worst, std::abs(E(r + 2, c) - Bsi(r, c)));
        worst = std::max(worst, std::abs(E(r + 2, c + 2) - p.co(r, c)));
      }
    CHECK(worst <= tol_series * (1.0 + inf_norm(E)));
  }
}

TEST_CASE("phi1 basics and the defining identity") {
  CHECK(phi1(Mat(2)) == Mat::identity(2));

  Mat one(1);
  one(0, 0) = 1.0;
  CHECK(phi1(one)(0, 0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));

  std::mt19937 rng(19);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    Mat M = random_mat(rng, i % 2 ? n : n, 1.0);
    const double nrm = inf_norm(M);
    if (nrm > 3.0) M *= 3.0 / nrm;
    const Mat lhs = Mat::identity(n) + M * phi1(M);
    CHECK(mat_dist(lhs, mat_exp(M)) <= 1e-12 * (1.0 + inf_norm(lhs)));
  }
}

TEST_CASE("co_si rejects bad input") {
  CHECK_THROWS_AS(co_si(Mat::identity(2), 1e7), std::invalid_argument);
  Mat bad(2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(co_si(bad, 1.0), std::invalid_argument);
}
