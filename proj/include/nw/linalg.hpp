#pragma once
// Sparse matrices over Rational or Real, exact Gaussian elimination over
// the rationals, and numeric rank via one-sided Jacobi SVD.

#include "nw/numeric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace nw {

template <class T>
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<int, T>>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, T(1));
    return m;
  }
  static SparseMatrix diagonal(const std::vector<T>& d) {
    const int n = static_cast<int>(d.size());
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      if (d[i] != 0) m.data_[i].emplace_back(i, d[i]);
    return m;
  }
  static SparseMatrix from_dense(const std::vector<std::vector<T>>& a) {
    const int r = static_cast<int>(a.size()), c = r ? static_cast<int>(a[0].size()) : 0;
    SparseMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (a[i][j] != 0) m.data_[i].emplace_back(j, a[i][j]);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Row& row(int i) const { return data_[i]; }

  /// Adds v to entry (i, j).
  void add(int i, int j, const T& v) {
    if (v == 0) return;
    Row& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      it->second += v;
      if (it->second == 0) r.erase(it);
    } else {
      r.insert(it, {j, v});
    }
  }

  T get(int i, int j) const {
    const Row& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, int c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? it->second : T(0);
  }

  std::size_t nnz() const {
    std::size_t s = 0;
    for (const auto& r : data_) s += r.size();
    return s;
  }

  bool is_zero() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  SparseMatrix operator+(const SparseMatrix& o) const {
    check_same(o);
    SparseMatrix m = *this;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : o.data_[i]) m.add(i, j, v);
    return m;
  }
  SparseMatrix operator-(const SparseMatrix& o) const { return *this + o.scaled(T(-1)); }

  SparseMatrix scaled(const T& c) const {
    SparseMatrix m(rows_, cols_);
    if (c == 0) return m;
    for (int i = 0; i < rows_; ++i) {
      m.data_[i].reserve(data_[i].size());
      for (const auto& [j, v] : data_[i]) m.data_[i].emplace_back(j, v * c);
    }
    return m;
  }

  SparseMatrix operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    SparseMatrix m(rows_, o.cols_);
    std::vector<T> acc(o.cols_);
    std::vector<char> used(o.cols_, 0);
    std::vector<int> touched;
    for (int i = 0; i < rows_; ++i) {
      touched.clear();
      for (const auto& [k, a] : data_[i]) {
        for (const auto& [j, b] : o.data_[k]) {
          if (!used[j]) {
            used[j] = 1;
            touched.push_back(j);
            acc[j] = a * b;
          } else {
            acc[j] += a * b;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      for (int j : touched) {
        if (acc[j] != 0) m.data_[i].emplace_back(j, acc[j]);
        used[j] = 0;
      }
    }
    return m;
  }

  SparseMatrix transpose() const {
    SparseMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) m.data_[j].emplace_back(i, v);
    return m;
  }

  /// Largest absolute entry.
  T max_abs() const {
    T best = 0;
    for (const auto& r : data_)
      for (const auto& e : r) {
        T a = abs(e.second);
        if (a > best) best = a;
      }
    return best;
  }

  /// Frobenius norm for Real (an upper bound on the operator norm);
  /// largest absolute entry for exact scalars.
  T norm() const {
    if constexpr (std::is_same_v<T, Real>) {
      Real s = 0;
      for (const auto& r : data_)
        for (const auto& e : r) s += e.second * e.second;
      return sqrt(s);
    } else {
      return max_abs();
    }
  }

  std::vector<std::vector<T>> dense() const {
    std::vector<std::vector<T>> a(rows_, std::vector<T>(cols_, T(0)));
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) a[i][j] = v;
    return a;
  }

  bool operator==(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return (*this - o).is_zero();
  }

 private:
  void check_same(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  int rows_ = 0, cols_ = 0;
  std::vector<Row> data_;
};

template <class T>
SparseMatrix<T> mat_pow(const SparseMatrix<T>& m, int e) {
  SparseMatrix<T> r = SparseMatrix<T>::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

template <class To>
SparseMatrix<To> convert(const SparseMatrix<Rational>& m) {
  SparseMatrix<To> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) {
      if constexpr (std::is_same_v<To, Real>)
        out.add(i, j, to_real(v));
      else
        out.add(i, j, To(v));
    }
  return out;
}

using QMatrix = std::vector<std::vector<Rational>>;

/// Exact rank by Gaussian elimination.
int exact_rank(QMatrix a);
Rational exact_det(QMatrix a);
/// Inverse of a square matrix; throws std::domain_error if singular.
QMatrix exact_inverse(QMatrix a);

/// Incremental row-echelon basis over Q for sparse vectors keyed by column.
class ExactSpan {
 public:
  explicit ExactSpan(int dim) : dim_(dim), pivot_row_(dim, -1) {}
  using SparseVec = std::map<int, Rational>;
  /// Reduces v against the basis; returns true (and stores it) if independent.
  bool insert(SparseVec v);
  /// Reduces v against the basis without storing it.
  SparseVec reduce(SparseVec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

 private:
  int dim_;
  std::vector<int> pivot_row_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;
};

/// Singular values (descending) of a dense real matrix by one-sided Jacobi.
std::vector<Real> singular_values(std::vector<std::vector<Real>> a);

struct NumericRank {
  int rank = 0;
  Real threshold;
  std::vector<Real> spectrum;
};
/// Rank counting singular values above rel_threshold * sigma_max.
NumericRank numeric_rank(const std::vector<std::vector<Real>>& a, const Real& rel_threshold);

/// Rank by Gaussian elimination with complete pivoting; entries below
/// abs_threshold are treated as zero.
int numeric_rank_elimination(std::vector<std::vector<Real>> a, const Real& abs_threshold);

}  // namespace nw
