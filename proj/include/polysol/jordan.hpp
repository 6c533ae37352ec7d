#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polysol/matfun.hpp"

namespace polysol::jordan {

/// One Jordan block of a matrix given up to conjugacy. A nonzero imaginary
/// part marks the conjugate pair of complex blocks (total dimension 2*size).
struct Block {
  double re = 0.0;
  double im = 0.0;
  int size = 1;
};

/// Multiset of Jordan blocks describing a matrix up to conjugacy.
struct JordanSpec {
  std::vector<Block> blocks;
};

/// Decide whether an invertible matrix with this Jordan data can be written
/// as (1 + co_B(s)) / 2 for a real B: every negative real eigenvalue must
/// contribute an even number of blocks of each size. Complex pairs and
/// nonnegative real eigenvalues are unconstrained.
inline bool in_image(const JordanSpec& target) {
  std::map<std::pair<double, int>, int> negative_counts;
  for (const Block& b : target.blocks) {
    if (b.size < 1) throw std::invalid_argument("in_image: block size must be >= 1");
    if (b.re == 0.0 && b.im == 0.0)
      throw std::invalid_argument("in_image: zero eigenvalue (matrix must be invertible)");
    if (b.im == 0.0 && b.re < 0.0) ++negative_counts[{b.re, b.size}];
  }
  for (const auto& [key, count] : negative_counts)
    if (count % 2 != 0) return false;
  return true;
}

/// Constructive scalar inverse: the b with (1 + cos_b(s)) / 2 = lambda.
/// Only lambda >= 0 is representable by a 1x1 block.
inline double invert_f_scalar(double lambda, double s = 1.0) {
  if (s == 0.0) throw std::invalid_argument("invert_f_scalar: s must be nonzero");
  if (lambda < 0.0)
    throw std::invalid_argument("invert_f_scalar: negative values are not representable");
  const double y = 2.0 * lambda - 1.0;
  if (y >= 1.0) {
    const double a = std::acosh(y);
    return (a * a) / (s * s);
  }
  const double a = std::acos(y);
  return -(a * a) / (s * s);
}

/// Uniform grid description for the brute-force scan.
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;

  double at(int i) const {
    if (count < 2) return lo;
    if (i == count - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

/// Independent oracle for 2x2 diagonal targets: minimize the distance of
/// diag((1+cos_{b1}(s))/2, (1+cos_{b2}(s))/2) to diag(d1, d2) over the grids.
inline double brute_force_image_scan(double d1, double d2, const GridSpec& b_grid,
                                     const GridSpec& s_grid) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> f1(b_grid.count), f2(b_grid.count);
  for (int is = 0; is < s_grid.count; ++is) {
    const double s = s_grid.at(is);
    for (int ib = 0; ib < b_grid.count; ++ib) {
      const double f = 0.5 * (1.0 + scalar_cos_sin(b_grid.at(ib), s).first);
      f1[ib] = std::abs(f - d1);
      f2[ib] = std::abs(f - d2);
    }
    double best1 = f1[0], best2 = f2[0];
    for (int ib = 1; ib < b_grid.count; ++ib) {
      best1 = std::min(best1, f1[ib]);
      best2 = std::min(best2, f2[ib]);
    }
    best = std::min(best, std::max(best1, best2));
  }
  return best;
}

}  // namespace polysol::jordan
