#include <cmath>

#include "doctest.h"
#include "polysol/polysol.hpp"

using namespace polysol;
using jordan::Block;
using jordan::GridSpec;
using jordan::JordanSpec;

TEST_CASE("in_image: lone negative eigenvalue blocks an inverse") {
  CHECK_FALSE(jordan::in_image({{Block{-1, 0, 1}, Block{2, 0, 1}}}));
}

TEST_CASE("in_image: paired negative eigenvalues are fine") {
  CHECK(jordan::in_image({{Block{-1, 0, 1}, Block{-1, 0, 1}}}));
}

TEST_CASE("in_image: positive spectra are unconstrained") {
  CHECK(jordan::in_image({{Block{0.5, 0, 1}, Block{0.5, 0, 1}, Block{3, 0, 1}}}));
}

TEST_CASE("in_image: negative blocks must pair within each size") {
  CHECK_FALSE(jordan::in_image({{Block{-2, 0, 2}, Block{-2, 0, 1}, Block{-2, 0, 1}}}));
  CHECK(jordan::in_image({{Block{-2, 0, 2}, Block{-2, 0, 2}}}));
}

TEST_CASE("in_image: complex pairs are unconstrained") {
  CHECK(jordan::in_image({{Block{-1, 0.5, 1}}}));
}

TEST_CASE("in_image rejects singular targets") {
  CHECK_THROWS_AS(jordan::in_image({{Block{0, 0, 1}}}), std::invalid_argument);
}

TEST_CASE("invert_f_scalar: fixed values") {
  CHECK(jordan::invert_f_scalar(1.0) == 0.0);

  const double b9 = jordan::invert_f_scalar(0.9, 1.0);
  CHECK(b9 == doctest::Approx(-std::pow(std::acos(0.8), 2)).epsilon(1e-14));
  CHECK(0.5 * (1.0 + scalar_cos_sin(b9, 1.0).first) == doctest::Approx(0.9).epsilon(1e-14));

  const double b2 = jordan::invert_f_scalar(2.0, 1.0);
  CHECK(b2 == doctest::Approx(std::pow(std::acosh(3.0), 2)).epsilon(1e-14));
  CHECK(0.5 * (1.0 + scalar_cos_sin(b2, 1.0).first) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("invert_f_scalar round-trips over a lambda grid") {
  for (int i = 0; i < 100; ++i) {
    const double lambda = 10.0 * i / 99.0;
    const double b = jordan::invert_f_scalar(lambda, 1.0);
    const double back = 0.5 * (1.0 + scalar_cos_sin(b, 1.0).first);
    CHECK(std::abs(back - lambda) <= 1e-12 * (1.0 + lambda));
  }
}

TEST_CASE("invert_f_scalar rejects out-of-range input") {
  CHECK_THROWS_AS(jordan::invert_f_scalar(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(jordan::invert_f_scalar(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("brute-force scan agrees with the predicate on diagonal targets") {
  const GridSpec b_wide{-1.0, 4.0, 2001};
  const GridSpec s_grid{0.5, 2.0, 50};

  // reachable: both entries nonnegative
  CHECK(jordan::brute_force_image_scan(0.9, 2.0, b_wide, s_grid) < 1e-3);
  CHECK(jordan::in_image({{Block{0.9, 0, 1}, Block{2, 0, 1}}}));

  // unreachable: (1 + cos_b)/2 >= 0 keeps -1 at distance >= 1
  CHECK(jordan::brute_force_image_scan(-1.0, 2.0, b_wide, s_grid) >= 0.5);
  CHECK_FALSE(jordan::in_image({{Block{-1, 0, 1}, Block{2, 0, 1}}}));

  // identity: hit exactly at b = 0
  const GridSpec b_sym{-2.0, 2.0, 401};
  CHECK(jordan::brute_force_image_scan(1.0, 1.0, b_sym, s_grid) == 0.0);
}
