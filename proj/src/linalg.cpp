#include "nw/linalg.hpp"

#include <cmath>

namespace nw {

namespace {

// Row-reduces a in place; returns the rank and the sign/scale product of pivots.
int eliminate(QMatrix& a, Rational* det) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  Rational d = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      d = 0;
      continue;
    }
    if (piv != rank) {
      std::swap(a[piv], a[rank]);
      d = -d;
    }
    d *= a[rank][c];
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[rank][c];
      for (int j = c; j < cols; ++j)
        if (a[rank][j] != 0) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  if (det) *det = (rank == rows && rows == cols) ? d : Rational(0);
  return rank;
}

}  // namespace

int exact_rank(QMatrix a) { return eliminate(a, nullptr); }

Rational exact_det(QMatrix a) {
  if (!a.empty() && a.size() != a[0].size()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.empty()) return 1;
  Rational d;
  eliminate(a, &d);
  return d;
}

QMatrix exact_inverse(QMatrix a) {
  const int n = static_cast<int>(a.size());
  for (auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("inverse of a non-square matrix");
    row.resize(2 * n);
  }
  for (int i = 0; i < n; ++i) a[i][n + i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("matrix is singular");
    std::swap(a[piv], a[c]);
    Rational inv = Rational(1) / a[c][c];
    for (int j = 0; j < 2 * n; ++j)
      if (a[c][j] != 0) a[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = 0; j < 2 * n; ++j)
        if (a[c][j] != 0) a[i][j] -= f * a[c][j];
    }
  }
  QMatrix out(n);
  for (int i = 0; i < n; ++i) out[i].assign(a[i].begin() + n, a[i].end());
  return out;
}

ExactSpan::SparseVec ExactSpan::reduce(SparseVec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    auto it = v.find(pivots_[k]);
    if (it == v.end()) continue;
    Rational f = it->second;
    for (const auto& [j, x] : rows_[k]) {
      Rational& slot = v[j];
      slot -= f * x;
      if (slot == 0) v.erase(j);
    }
  }
  return v;
}

bool ExactSpan::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const int p = v.begin()->first;
  Rational inv = Rational(1) / v.begin()->second;
  for (auto& [j, x] : v) x *= inv;
  pivot_row_[p] = static_cast<int>(rows_.size());
  pivots_.push_back(p);
  rows_.push_back(std::move(v));
  return true;
}

std::vector<Real> singular_values(std::vector<std::vector<Real>> a) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  if (m == 0 || n == 0) return {};
  // Work on columns of the orientation with fewer columns.
  std::vector<std::vector<Real>> cols;
  if (n <= m) {
    cols.assign(n, std::vector<Real>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) cols[j][i] = a[i][j];
  } else {
    cols = std::move(a);
  }
  const int nc = static_cast<int>(cols.size());
  const int len = static_cast<int>(cols[0].size());
  const Real eps = pow2_neg(static_cast<int>(current_precision_bits()) - 8);
  for (int sweep = 0; sweep < 200; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < nc; ++p)
      for (int q = p + 1; q < nc; ++q) {
        Real alpha = 0, beta = 0, gamma = 0;
        for (int i = 0; i < len; ++i) {
          alpha += cols[p][i] * cols[p][i];
          beta += cols[q][i] * cols[q][i];
          gamma += cols[p][i] * cols[q][i];
        }
        if (gamma == 0 || abs(gamma) <= eps * sqrt(alpha * beta)) continue;
        rotated = true;
        Real zeta = (beta - alpha) / (2 * gamma);
        Real t = (zeta >= 0 ? Real(1) : Real(-1)) / (abs(zeta) + sqrt(1 + zeta * zeta));
        Real c = 1 / sqrt(1 + t * t);
        Real s = c * t;
        for (int i = 0; i < len; ++i) {
          Real ap = cols[p][i], aq = cols[q][i];
          cols[p][i] = c * ap - s * aq;
          cols[q][i] = s * ap + c * aq;
        }
      }
    if (!rotated) break;
  }
  std::vector<Real> sv;
  for (const auto& col : cols) {
    Real s = 0;
    for (const auto& x : col) s += x * x;
    sv.push_back(sqrt(s));
  }
  std::sort(sv.begin(), sv.end(), [](const Real& x, const Real& y) { return x > y; });
  return sv;
}

NumericRank numeric_rank(const std::vector<std::vector<Real>>& a, const Real& rel_threshold) {
  NumericRank res;
  res.spectrum = singular_values(a);
  if (res.spectrum.empty()) {
    res.threshold = 0;
    return res;
  }
  res.threshold = rel_threshold * res.spectrum.front();
  for (const auto& s : res.spectrum)
    if (s > res.threshold) ++res.rank;
  return res;
}

int numeric_rank_elimination(std::vector<std::vector<Real>> a, const Real& abs_threshold) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> colperm(n);
  for (int j = 0; j < n; ++j) colperm[j] = j;
  int rank = 0;
  for (; rank < std::min(m, n); ++rank) {
    int bi = -1, bj = -1;
    Real best = abs_threshold;
    for (int i = rank; i < m; ++i)
      for (int j = rank; j < n; ++j) {
        Real v = abs(a[i][colperm[j]]);
        if (v > best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    std::swap(a[bi], a[rank]);
    std::swap(colperm[bj], colperm[rank]);
    const int pc = colperm[rank];
    for (int i = rank + 1; i < m; ++i) {
      if (a[i][pc] == 0) continue;
      Real f = a[i][pc] / a[rank][pc];
      for (int j = rank; j < n; ++j) a[i][colperm[j]] -= f * a[rank][colperm[j]];
    }
  }
  return rank;
}

}  // namespace nw
