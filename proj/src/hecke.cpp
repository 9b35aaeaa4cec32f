#include "nw/hecke.hpp"

#include "nw/params.hpp"
#include "nw/seminormal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace nw {

using Element = HeckeAlgebra::Element;

HeckeAlgebra::HeckeAlgebra(int r, int n, std::vector<Rational> u) : r_(r), n_(n), u_(std::move(u)) {
  if (r < 1 || n < 1) throw std::invalid_argument("Hecke algebra needs r >= 1 and n >= 1");
  if (static_cast<int>(u_.size()) != r) throw std::invalid_argument("u must have r entries");
  perms_ = all_perms(n);
  nfact_ = static_cast<long>(perms_.size());
  for (int j = 0; j < n; ++j) alpha_count_ *= r;
  words_.reserve(perms_.size());
  inverse_.reserve(perms_.size());
  for (const Perm& w : perms_) {
    words_.push_back(reduced_word(w));
    inverse_.push_back(perm_index(perm_inverse(w)));
  }
  left_simple_.assign(n - 1, std::vector<int>(perms_.size()));
  for (int i = 1; i < n; ++i) {
    const Perm s = perm_simple(i, n);
    for (size_t w = 0; w < perms_.size(); ++w) left_simple_[i - 1][w] = perm_index(perm_mul(s, perms_[w]));
  }
  power_cache_.resize(n + 1);
}

int HeckeAlgebra::perm_index(const Perm& w) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), w);
  if (it == perms_.end() || *it != w) throw std::invalid_argument("not a permutation of the right size");
  return static_cast<int>(it - perms_.begin());
}

long HeckeAlgebra::key(const std::vector<int>& alpha, int perm_idx) const {
  if (static_cast<int>(alpha.size()) != n_) throw std::invalid_argument("exponent vector has wrong length");
  long a = 0;
  for (int j = n_ - 1; j >= 0; --j) {
    if (alpha[j] < 0 || alpha[j] >= r_) throw std::invalid_argument("exponent out of range");
    a = a * r_ + alpha[j];
  }
  return a * nfact_ + perm_idx;
}

std::pair<std::vector<int>, int> HeckeAlgebra::decode(long k) const {
  int w = static_cast<int>(k % nfact_);
  long a = k / nfact_;
  std::vector<int> alpha(n_);
  for (int j = 0; j < n_; ++j) {
    alpha[j] = static_cast<int>(a % r_);
    a /= r_;
  }
  return {alpha, w};
}

Element HeckeAlgebra::one() const { return {{key(std::vector<int>(n_, 0), 0), Rational(1)}}; }

Element HeckeAlgebra::T(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("T_i index out of range");
  return {{key(std::vector<int>(n_, 0), perm_index(perm_simple(i, n_))), Rational(1)}};
}

Element HeckeAlgebra::Tw(const Perm& w) const { return {{key(std::vector<int>(n_, 0), perm_index(w)), Rational(1)}}; }

Element HeckeAlgebra::Y(int j) const {
  if (j < 1 || j > n_) throw std::invalid_argument("Y_j index out of range");
  return left_Y(j, one());
}

Element HeckeAlgebra::monomial(const std::vector<int>& alpha, const Perm& w) const {
  return {{key(alpha, perm_index(w)), Rational(1)}};
}

void HeckeAlgebra::accumulate(Element& into, long k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

Element HeckeAlgebra::add(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [k, c] : b) accumulate(out, k, c);
  return out;
}

Element HeckeAlgebra::sub(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [k, c] : b) accumulate(out, k, -c);
  return out;
}

Element HeckeAlgebra::scale(const Element& a, const Rational& c) {
  Element out;
  if (c == 0) return out;
  for (const auto& [k, v] : a) out.emplace(k, v * c);
  return out;
}

Element HeckeAlgebra::left_T(int i, const Element& a) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("T_i index out of range");
  Element out;
  for (const auto& [k, c] : a) {
    auto [alpha, w] = decode(k);
    const int x = alpha[i - 1], y = alpha[i];
    std::vector<int> swapped = alpha;
    std::swap(swapped[i - 1], swapped[i]);
    accumulate(out, key(swapped, left_simple_[i - 1][w]), c);
    // T_i f = (s_i f) T_i - (f - s_i f)/(Y_i - Y_{i+1})
    if (x == y) continue;
    std::vector<int> beta = alpha;
    if (x > y) {
      for (int p = 0; p < x - y; ++p) {
        beta[i - 1] = y + p;
        beta[i] = x - 1 - p;
        accumulate(out, key(beta, w), -c);
      }
    } else {
      for (int p = 0; p < y - x; ++p) {
        beta[i - 1] = x + p;
        beta[i] = y - 1 - p;
        accumulate(out, key(beta, w), c);
      }
    }
  }
  return out;
}

void HeckeAlgebra::add_left_Y(int j, long k, const Rational& c, Element& out) const {
  auto [alpha, w] = decode(k);
  if (alpha[j - 1] + 1 < r_) {
    ++alpha[j - 1];
    accumulate(out, key(alpha, w), c);
    return;
  }
  Element x = right_Tw(power_r(j), w);
  for (int l = 1; l <= n_; ++l) {
    if (l == j) continue;
    for (int e = 0; e < alpha[l - 1]; ++e) x = left_Y(l, x);
  }
  for (const auto& [kk, v] : x) accumulate(out, kk, c * v);
}

Element HeckeAlgebra::left_Y(int j, const Element& a) const {
  if (j < 1 || j > n_) throw std::invalid_argument("Y_j index out of range");
  Element out;
  for (const auto& [k, c] : a) add_left_Y(j, k, c, out);
  return out;
}

const Element& HeckeAlgebra::power_r(int j) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (power_cache_[j]) return *power_cache_[j];
  }
  Element result;
  if (j == 1) {
    // prod (y - u_i) = sum p_k y^k
    std::vector<Rational> p{Rational(1)};
    for (const Rational& ui : u_) {
      std::vector<Rational> q(p.size() + 1, Rational(0));
      for (size_t k = 0; k < p.size(); ++k) {
        q[k + 1] += p[k];
        q[k] -= ui * p[k];
      }
      p = std::move(q);
    }
    std::vector<int> alpha(n_, 0);
    for (int k = 0; k < r_; ++k) {
      alpha[0] = k;
      accumulate(result, key(alpha, 0), -p[k]);
    }
  } else {
    // Y_j^r = (T Y_{j-1} T + T) Y_j^(r-1) with T = T_{j-1}
    std::vector<int> alpha(n_, 0);
    alpha[j - 1] = r_ - 1;
    Element z{{key(alpha, 0), Rational(1)}};
    Element tz = left_T(j - 1, z);
    result = add(left_T(j - 1, left_Y(j - 1, tz)), tz);
  }
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (!power_cache_[j]) power_cache_[j] = std::move(result);
  return *power_cache_[j];
}

Element HeckeAlgebra::right_Tw(const Element& a, int perm_idx) const {
  Element out;
  const Perm& v = perms_[perm_idx];
  for (const auto& [k, c] : a) {
    auto [alpha, w] = decode(k);
    accumulate(out, key(alpha, perm_index(perm_mul(perms_[w], v))), c);
  }
  return out;
}

Element HeckeAlgebra::mul(const Element& a, const Element& b) const {
  std::map<int, std::vector<std::pair<std::vector<int>, Rational>>> by_perm;
  for (const auto& [k, c] : a) {
    auto [alpha, w] = decode(k);
    by_perm[w].emplace_back(std::move(alpha), c);
  }
  Element out;
  for (const auto& [w, terms] : by_perm) {
    Element tb = b;
    const auto& word = words_[w];
    for (auto it = word.rbegin(); it != word.rend(); ++it) tb = left_T(*it, tb);
    for (const auto& [alpha, c] : terms) {
      Element x = tb;
      for (int j = 1; j <= n_; ++j)
        for (int e = 0; e < alpha[j - 1]; ++e) x = left_Y(j, x);
      for (const auto& [k, v] : x) accumulate(out, k, c * v);
    }
  }
  return out;
}

Element HeckeAlgebra::star(const Element& a) const {
  Element out;
  for (const auto& [k, c] : a) {
    auto [alpha, w] = decode(k);
    Element y{{key(alpha, 0), c}};
    Element x = y;
    const auto& word = words_[inverse_[w]];
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_T(*it, x);
    for (const auto& [kk, v] : x) accumulate(out, kk, v);
  }
  return out;
}

nlohmann::json HeckeAlgebra::to_json(const Element& a) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : a) {
    auto [alpha, w] = decode(k);
    out.push_back({{"alpha", alpha}, {"w", perms_[w]}, {"coeff", nw::to_string(c)}});
  }
  return out;
}

namespace {

std::vector<int> block_ends(const Multipartition& lambda) {
  std::vector<int> a;
  int acc = 0;
  for (const auto& p : lambda.comps) {
    for (int part : p) acc += part;
    a.push_back(acc);
  }
  return a;
}

Element apply_left_word(const HeckeAlgebra& H, const std::vector<int>& word, Element x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = H.left_T(*it, x);
  return x;
}

}  // namespace

Element murphy_m(const HeckeAlgebra& H, const Multipartition& lambda, const UpDownTableau& s, const UpDownTableau& t) {
  if (lambda.r() != H.r() || lambda.size() != H.n()) throw std::invalid_argument("shape does not match the algebra");
  if (!is_standard(s) || !is_standard(t) || s.shape() != lambda || t.shape() != lambda)
    throw std::invalid_argument("m_st needs standard tableaux of shape lambda");
  const int n = H.n();
  Element x;
  for (const Perm& w : row_stabilizer(lambda)) HeckeAlgebra::accumulate(x, H.key(std::vector<int>(n, 0), H.perm_index(w)), 1);
  const std::vector<int> a = block_ends(lambda);
  for (int i = 1; i < H.r(); ++i) {
    for (int k = 1; k <= a[i - 1]; ++k) {
      Element yx = H.left_Y(k, x);
      x = HeckeAlgebra::sub(yx, HeckeAlgebra::scale(x, H.u()[i]));
    }
  }
  x = H.right_Tw(x, H.perm_index(tableau_perm(t)));
  return apply_left_word(H, reduced_word(perm_inverse(tableau_perm(s))), x);
}

int MurphyBasis::index_of(const Multipartition& lambda, int s, int t) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].lambda == lambda && labels[i].s == s && labels[i].t == t) return static_cast<int>(i);
  throw std::out_of_range("no such Murphy label");
}

std::vector<Rational> coordinates(const HeckeAlgebra& H, const Element& a) {
  std::vector<Rational> v(H.dim(), Rational(0));
  for (const auto& [k, c] : a) v[k] = c;
  return v;
}

MurphyBasis build_murphy_basis(const HeckeAlgebra& H) {
  MurphyBasis mb;
  for (const Multipartition& lambda : multipartitions_of(H.r(), H.n())) {
    auto std_t = standard_tableaux(lambda);
    for (int s = 0; s < static_cast<int>(std_t.size()); ++s)
      for (int t = 0; t < static_cast<int>(std_t.size()); ++t) {
        mb.labels.push_back({lambda, s, t});
        mb.elements.push_back(murphy_m(H, lambda, std_t[s], std_t[t]));
      }
    mb.tableaux.emplace(lambda, std::move(std_t));
  }
  QMatrix m;
  m.reserve(mb.elements.size());
  for (const Element& e : mb.elements) m.push_back(coordinates(H, e));
  mb.rank = exact_rank(m);
  if (mb.rank == static_cast<int>(m.size()) && mb.rank == H.dim()) mb.inverse = exact_inverse(m);
  return mb;
}

std::vector<Rational> murphy_coordinates(const HeckeAlgebra& H, const MurphyBasis& mb, const Element& a) {
  if (mb.inverse.empty()) throw std::domain_error("Murphy family is not a basis");
  // a = c M  =>  c = a M^-1 (row vectors)
  std::vector<Rational> c(mb.inverse.size(), Rational(0));
  for (const auto& [k, v] : a) {
    const auto& row = mb.inverse[k];
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) c[j] += v * row[j];
  }
  (void)H;
  return c;
}

bool yk_spectral_check(const HeckeAlgebra& H, const MurphyBasis& mb, const Multipartition& lambda) {
  const auto& std_t = mb.tableaux.at(lambda);
  const int f = static_cast<int>(std_t.size());
  for (int s = 0; s < f; ++s) {
    const std::vector<Rational> cs = content_sequence(std_t[s], H.u());
    for (int t = 0; t < f; ++t) {
      const Element& m = mb.elements[mb.index_of(lambda, s, t)];
      for (int k = 1; k <= H.n(); ++k) {
        auto c = murphy_coordinates(H, mb, H.left_Y(k, m));
        for (size_t i = 0; i < c.size(); ++i) {
          if (c[i] == 0) continue;
          const MurphyLabel& l = mb.labels[i];
          if (l.lambda != lambda) {
            if (!dominates(l.lambda, lambda)) return false;
            continue;
          }
          if (l.t != t) return false;
          if (l.s == s) {
            if (c[i] != cs[k - 1]) return false;
          } else if (!tableau_dominates(std_t[l.s], std_t[s])) {
            return false;
          }
        }
        if (c[mb.index_of(lambda, s, t)] != cs[k - 1]) return false;
      }
    }
  }
  return true;
}

QMatrix gram_matrix(const HeckeAlgebra& H, const MurphyBasis& mb, const Multipartition& lambda) {
  const auto& std_t = mb.tableaux.at(lambda);
  const int f = static_cast<int>(std_t.size());
  const int top = static_cast<int>(std::find(std_t.begin(), std_t.end(), top_tableau(lambda)) - std_t.begin());
  const int target = mb.index_of(lambda, top, top);
  QMatrix g(f, std::vector<Rational>(f, Rational(0)));
  for (int s = 0; s < f; ++s)
    for (int t = 0; t < f; ++t) {
      Element prod = H.mul(mb.elements[mb.index_of(lambda, top, s)], mb.elements[mb.index_of(lambda, t, top)]);
      g[s][t] = murphy_coordinates(H, mb, prod)[target];
    }
  return g;
}

Rational gamma_top(const Multipartition& lambda, const std::vector<Rational>& u) {
  if (static_cast<int>(u.size()) != lambda.r()) throw std::invalid_argument("u must have r entries");
  Rational g(1);
  for (const auto& p : lambda.comps)
    for (int part : p) g *= Rational(factorial(part));
  for (int s = 1; s <= lambda.r(); ++s)
    for (int t = s + 1; t <= lambda.r(); ++t) {
      const auto& p = lambda.comps[s - 1];
      for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        for (int j = 1; j <= p[i - 1]; ++j) g *= Rational(j - i) + u[s - 1] - u[t - 1];
    }
  return g;
}

GammaResult gammas(const Multipartition& lambda, const std::vector<Rational>& u) {
  const int n = lambda.size();
  if (!is_semisimple(lambda.r(), n, u)) throw std::domain_error("u is not generic for the Hecke algebra");
  const auto std_t = standard_tableaux(lambda);
  std::map<UpDownTableau, int> pos;
  for (size_t i = 0; i < std_t.size(); ++i) pos[std_t[i]] = static_cast<int>(i);
  GammaResult res;
  std::vector<std::optional<Rational>> val(std_t.size());
  const int top = pos.at(top_tableau(lambda));
  val[top] = gamma_top(lambda, u);
  std::deque<int> queue{top};
  while (!queue.empty()) {
    const int si = queue.front();
    queue.pop_front();
    const UpDownTableau& s = std_t[si];
    for (int k = 1; k < n; ++k) {
      auto t = sk_action(s, k);
      if (!t || !tableau_dominates(s, *t) || *t == s) continue;
      const int ti = pos.at(*t);
      const Rational d = content(s, k, u) - content(*t, k, u);
      const Rational g = (d + 1) * (d - 1) / (d * d) * *val[si];
      if (val[ti]) {
        ++res.edges_checked;
        if (*val[ti] != g) res.path_independent = false;
      } else {
        val[ti] = g;
        queue.push_back(ti);
      }
    }
  }
  for (size_t i = 0; i < val.size(); ++i) {
    if (!val[i]) throw std::logic_error("tableau not reached by descending steps");
    res.values.push_back(*val[i]);
  }
  return res;
}

Rational gram_det(const Multipartition& lambda, const std::vector<Rational>& u) {
  Rational g(1);
  for (const Rational& v : gammas(lambda, u).values) g *= v;
  return g;
}

bool is_semisimple(int r, int n, const std::vector<Rational>& u) {
  if (static_cast<int>(u.size()) != r) throw std::invalid_argument("u must have r entries");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const Rational d = u[i] - u[j];
      if (denominator(d) == 1 && abs(d) < n) return false;
    }
  return true;
}

Rational m_lambda_square_scalar(int n, const std::vector<Rational>& u) {
  Rational c(factorial(n));
  for (size_t t = 1; t < u.size(); ++t)
    for (int d = 0; d < n; ++d) c *= u[0] + Rational(d) - u[t];
  return c;
}

int closure_dimension(const HeckeAlgebra& H) {
  ExactSpan span(static_cast<int>(H.dim()));
  std::deque<Element> queue;
  auto offer = [&](const Element& e) {
    ExactSpan::SparseVec v(e.begin(), e.end());
    if (span.insert(v)) queue.push_back(e);
  };
  offer(H.one());
  while (!queue.empty()) {
    Element e = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < H.n(); ++i) offer(H.left_T(i, e));
    for (int j = 1; j <= H.n(); ++j) offer(H.left_Y(j, e));
  }
  return span.rank();
}

HeckeRealization build_hecke_realization(const HeckeAlgebra& H) {
  const int n = H.n();
  ParamSet ps = ParamSet::from_u(H.u(), default_truncation(H.r(), n), current_precision_bits());
  std::vector<SeminormalRep> reps;
  HeckeRealization R;
  R.n = n;
  int total = 0;
  for (const Multipartition& lambda : multipartitions_of(H.r(), n)) {
    reps.push_back(build_rep(lambda, n, ps));
    R.blocks.emplace_back(total, reps.back().dim());
    total += reps.back().dim();
  }
  auto assemble = [&](auto pick) {
    SparseMatrix<Real> m(total, total);
    for (size_t b = 0; b < reps.size(); ++b) {
      const SparseMatrix<Real>& blk = pick(reps[b].mats);
      const int off = R.blocks[b].first;
      for (int i = 0; i < blk.rows(); ++i)
        for (const auto& [j, v] : blk.row(i)) m.add(off + i, off + j, v);
    }
    return m;
  };
  for (int i = 1; i < n; ++i) R.T.push_back(assemble([&](const GeneratorMatrices<Real>& g) -> const SparseMatrix<Real>& { return g.S[i - 1]; }));
  for (int j = 1; j <= n; ++j) R.Y.push_back(assemble([&](const GeneratorMatrices<Real>& g) -> const SparseMatrix<Real>& { return g.X[j - 1]; }));
  for (const Perm& w : H.perms()) {
    SparseMatrix<Real> m = SparseMatrix<Real>::identity(total);
    for (int i : reduced_word(w)) m = m * R.T[i - 1];
    R.Tw.push_back(std::move(m));
  }
  return R;
}

SparseMatrix<Real> HeckeRealization::evaluate(const HeckeAlgebra& H, const Element& a) const {
  const int total = Y.empty() ? 0 : Y[0].rows();
  SparseMatrix<Real> out(total, total);
  for (const auto& [k, c] : a) {
    auto [alpha, w] = H.decode(k);
    SparseMatrix<Real> m = SparseMatrix<Real>::identity(total);
    for (int j = 1; j <= n; ++j)
      if (alpha[j - 1] > 0) m = m * mat_pow(Y[j - 1], alpha[j - 1]);
    m = m * Tw[w];
    out = out + m.scaled(to_real(c));
  }
  return out;
}

std::vector<Real> HeckeRealization::vectorize(const SparseMatrix<Real>& m) const {
  std::vector<Real> v;
  for (auto [off, size] : blocks)
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) v.push_back(m.get(off + i, off + j));
  return v;
}

}  // namespace nw
