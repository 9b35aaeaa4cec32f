#include "nw/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nw {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm perm_simple(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple transposition index out of range");
  Perm p = perm_identity(n);
  std::swap(p[i - 1], p[i]);
  return p;
}

Perm perm_mul(const Perm& x, const Perm& y) {
  if (x.size() != y.size()) throw std::invalid_argument("permutation size mismatch");
  Perm z(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) z[j] = y[x[j] - 1];
  return z;
}

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) q[p[j] - 1] = static_cast<int>(j) + 1;
  return q;
}

bool perm_is_valid(const Perm& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] != static_cast<int>(j) + 1) return false;
  return true;
}

int perm_length(const Perm& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Perm& p) {
  Perm w = p;
  const int n = static_cast<int>(w.size());
  std::vector<int> word;
  while (!perm_is_identity(w)) {
    std::vector<int> pos(n + 1);
    for (int j = 0; j < n; ++j) pos[w[j]] = j;
    int i = 1;
    while (pos[i + 1] > pos[i]) ++i;
    // w = (w s_i) s_i and w s_i has one inversion fewer.
    std::swap(w[pos[i]], w[pos[i + 1]]);
    word.insert(word.begin(), i);
  }
  return word;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace nw
