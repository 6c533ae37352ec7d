#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polysol {

/// Dense real vector, the arena for all curve and polygon formulas.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : e_(n, 0.0) {}
  Vec(std::initializer_list<double> xs) : e_(xs) {}
  explicit Vec(std::vector<double> xs) : e_(std::move(xs)) {}

  std::size_t size() const { return e_.size(); }
  double& operator[](std::size_t i) { return e_[i]; }
  double operator[](std::size_t i) const { return e_[i]; }

  const std::vector<double>& data() const { return e_; }

  Vec& operator+=(const Vec& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (double& x : e_) x *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }

  friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }

 private:
  void check_same(const Vec& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("vector size mismatch");
  }
  std::vector<double> e_;
};

inline double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double inf_norm(const Vec& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

inline bool all_finite(const Vec& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!std::isfinite(a[i])) return false;
  return true;
}

/// Dense real square matrix, row-major. Dimensions 1..16 supported.
class Mat {
 public:
  static constexpr std::size_t max_dim = 16;

  Mat() = default;
  explicit Mat(std::size_t n) : n_(n), a_(n * n, 0.0) { check_dim(n); }

  static Mat identity(std::size_t n) {
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Mat from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Mat m(rows.size());
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != m.n_) throw std::invalid_argument("matrix must be square");
      std::size_t j = 0;
      for (double x : r) m(i, j++) = x;
      ++i;
    }
    return m;
  }

  std::size_t dim() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  const std::vector<double>& data() const { return a_; }

  Mat& operator+=(const Mat& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Mat& operator*=(double s) {
    for (double& x : a_) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(double s, Mat a) { return a *= s; }
  friend Mat operator*(Mat a, double s) { return a *= s; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    a.check_same(b);
    Mat c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vec operator*(const Mat& a, const Vec& v) {
    if (v.size() != a.n_) throw std::invalid_argument("matrix/vector size mismatch");
    Vec r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < a.n_; ++j) s += a(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](double x) { return x == 0.0; });
  }

  /// Exact zero/one pattern of the nilpotent single Jordan block with
  /// eigenvalue zero: ones on the superdiagonal, zeros elsewhere.
  bool is_nilpotent_block() const {
    if (n_ < 2) return false;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const double want = (j == i + 1) ? 1.0 : 0.0;
        if ((*this)(i, j) != want) return false;
      }
    return true;
  }

 private:
  void check_dim(std::size_t n) const {
    if (n < 1 || n > max_dim) throw std::invalid_argument("matrix dimension out of range");
  }
  void check_same(const Mat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  }
  std::size_t n_ = 0;
  std::vector<double> a_;
};

inline double inf_norm(const Mat& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

inline bool all_finite(const Mat& m) {
  for (double x : m.data())
    if (!std::isfinite(x)) return false;
  return true;
}

/// Affine map x -> Ax + b.
struct AffineMap {
  Mat A;
  Vec b;

  Vec operator()(const Vec& x) const { return A * x + b; }
};

struct LeastSquaresResult {
  Vec x;
  double residual = 0.0;
  bool rank_deficient = false;
};

/// Minimum-residual solution of an overdetermined (or square) system by
/// Householder QR with column pivoting. Rank-deficient systems get the
/// basic solution with free variables set to zero.
inline LeastSquaresResult least_squares(const std::vector<Vec>& rows, const Vec& rhs,
                                        double rank_tol = 1e-12) {
  const std::size_t m = rows.size();
  if (m == 0 || rhs.size() != m) throw std::invalid_argument("least_squares: bad shapes");
  const std::size_t k = rows[0].size();

  std::vector<std::vector<double>> a(m, std::vector<double>(k));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != k) throw std::invalid_argument("least_squares: ragged rows");
    for (std::size_t j = 0; j < k; ++j) a[i][j] = rows[i][j];
  }
  std::vector<double> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = rhs[i];

  std::vector<std::size_t> piv(k);
  for (std::size_t j = 0; j < k; ++j) piv[j] = j;

  const std::size_t steps = std::min(m, k);
  std::vector<double> diag(steps, 0.0);

  for (std::size_t p = 0; p < steps; ++p) {
    // column pivot: largest remaining column norm
    std::size_t best = p;
    double best_norm = -1.0;
    for (std::size_t j = p; j < k; ++j) {
      double s = 0.0;
      for (std::size_t i = p; i < m; ++i) s += a[i][j] * a[i][j];
      if (s > best_norm) {
        best_norm = s;
        best = j;
      }
    }
    if (best != p) {
      for (std::size_t i = 0; i < m; ++i) std::swap(a[i][p], a[i][best]);
      std::swap(piv[p], piv[best]);
    }

    double alpha = std::sqrt(best_norm);
    if (alpha == 0.0) {
      diag[p] = 0.0;
      continue;
    }
    if (a[p][p] > 0.0) alpha = -alpha;
    std::vector<double> v(m, 0.0);
    v[p] = a[p][p] - alpha;
    for (std::size_t i = p + 1; i < m; ++i) v[i] = a[i][p];
    double vtv = 0.0;
    for (std::size_t i = p; i < m; ++i) vtv += v[i] * v[i];
    if (vtv > 0.0) {
      for (std::size_t j = p; j < k; ++j) {
        double s = 0.0;
        for (std::size_t i = p; i < m; ++i) s += v[i] * a[i][j];
        s *= 2.0 / vtv;
        for (std::size_t i = p; i < m; ++i) a[i][j] -= s * v[i];
      }
      double s = 0.0;
      for (std::size_t i = p; i < m; ++i) s += v[i] * b[i];
      s *= 2.0 / vtv;
      for (std::size_t i = p; i < m; ++i) b[i] -= s * v[i];
    }
    a[p][p] = alpha;
    diag[p] = alpha;
  }

  const double scale = std::abs(diag.empty() ? 0.0 : diag[0]);
  std::size_t rank = 0;
  for (std::size_t p = 0; p < steps; ++p) {
    if (std::abs(diag[p]) > rank_tol * std::max(scale, 1.0)) ++rank;
    else break;
  }

  Vec x(k);
  // back substitution on the leading rank x rank block
  for (std::size_t ii = rank; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < rank; ++j) s -= a[ii][j] * x[piv[j]];
    x[piv[ii]] = s / a[ii][ii];
  }

  double res2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double s = -rhs[i];
    for (std::size_t j = 0; j < k; ++j) s += rows[i][j] * x[j];
    res2 += s * s;
  }

  LeastSquaresResult out;
  out.x = std::move(x);
  out.residual = std::sqrt(res2);
  out.rank_deficient = rank < k;
  return out;
}

}  // namespace polysol
