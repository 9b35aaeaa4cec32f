#include "nw/wcell.hpp"

#include "nw/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace nw {

using Value = Realization::Value;

GeneratorWord RegularMonomial::word() const {
  GeneratorWord w;
  for (size_t j = 0; j < alpha.size(); ++j)
    if (alpha[j] > 0) w.push_back(X_(static_cast<int>(j) + 1, alpha[j]));
  for (const Letter& l : word_for_diagram(gamma)) w.push_back(l);
  for (size_t j = 0; j < beta.size(); ++j)
    if (beta[j] > 0) w.push_back(X_(static_cast<int>(j) + 1, beta[j]));
  return w;
}

nlohmann::json RegularMonomial::to_json() const {
  return {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma.to_json()}, {"word", word_to_string(word())}};
}

namespace {

// All vectors of length n with entries in [0, r) where allowed[j], else 0.
std::vector<std::vector<int>> exponent_vectors(int r, const std::vector<bool>& allowed) {
  std::vector<std::vector<int>> out{std::vector<int>(allowed.size(), 0)};
  for (size_t j = 0; j < allowed.size(); ++j) {
    if (!allowed[j]) continue;
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int e = 0; e < r; ++e) {
        auto w = v;
        w[j] = e;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<RegularMonomial> enumerate_r_regular(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("need r >= 1 and n >= 0");
  std::vector<RegularMonomial> out;
  for (const BrauerDiagram& g : enumerate_diagrams(n)) {
    std::vector<bool> top(n, true), bottom(n, false);
    for (auto [l, rr] : g.top_arcs()) top[l - 1] = false;
    for (auto [l, rr] : g.bottom_arcs()) bottom[l - 1] = true;
    auto alphas = exponent_vectors(r, top);
    auto betas = exponent_vectors(r, bottom);
    for (const auto& a : alphas)
      for (const auto& b : betas) out.push_back({a, b, g});
  }
  return out;
}

bool is_r_regular(const RegularMonomial& m, int r) {
  const int n = m.gamma.n();
  if (static_cast<int>(m.alpha.size()) != n || static_cast<int>(m.beta.size()) != n) return false;
  for (int j = 0; j < n; ++j)
    if (m.alpha[j] < 0 || m.alpha[j] >= r || m.beta[j] < 0 || m.beta[j] >= r) return false;
  for (auto [l, rr] : m.gamma.top_arcs())
    if (m.alpha[l - 1] != 0) return false;
  std::vector<bool> bottom(n, false);
  for (auto [l, rr] : m.gamma.bottom_arcs()) bottom[l - 1] = true;
  for (int j = 0; j < n; ++j)
    if (m.beta[j] != 0 && !bottom[j]) return false;
  return true;
}

int degree(const RegularMonomial& m) {
  int d = 0;
  for (int a : m.alpha) d += a;
  for (int b : m.beta) d += b;
  return d;
}

Realization::Realization(int n, const ParamSet& ps) : n_(n), ps_(ps) {
  for (const Multipartition& lambda : updown_shapes(ps.r, n)) reps_.push_back(build_rep(lambda, n, ps));
}

int Realization::total_dim() const {
  int d = 0;
  for (const auto& rep : reps_) d += rep.dim();
  return d;
}

int Realization::vector_dim() const {
  int d = 0;
  for (const auto& rep : reps_) d += rep.dim() * rep.dim();
  return d;
}

Value Realization::identity() const {
  Value v;
  for (const auto& rep : reps_) v.push_back(SparseMatrix<Real>::identity(rep.dim()));
  return v;
}

Value Realization::zero() const {
  Value v;
  for (const auto& rep : reps_) v.emplace_back(rep.dim(), rep.dim());
  return v;
}

Value Realization::letter(const Letter& l) const {
  validate_word({l}, n_);
  Value v;
  for (const auto& rep : reps_) {
    switch (l.kind) {
      case Letter::Kind::S: v.push_back(rep.mats.S[l.index - 1]); break;
      case Letter::Kind::E: v.push_back(rep.mats.E[l.index - 1]); break;
      case Letter::Kind::X: v.push_back(mat_pow(rep.mats.X[l.index - 1], l.pow)); break;
    }
  }
  return v;
}

Value Realization::evaluate(const GeneratorWord& w) const {
  validate_word(w, n_);
  Value v = identity();
  for (const Letter& l : w) v = value_mul(v, letter(l));
  return v;
}

Value Realization::evaluate(const WordProduct& p) const {
  Value v = identity();
  for (const auto& factor : p.factors) {
    Value f = zero();
    for (const auto& [c, w] : factor) f = value_axpy(f, to_real(c), evaluate(w));
    v = value_mul(v, f);
  }
  return v;
}

std::vector<Real> Realization::vectorize(const Value& v) const {
  std::vector<Real> out;
  out.reserve(vector_dim());
  for (const auto& m : v)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out.push_back(m.get(i, j));
  return out;
}

Value value_mul(const Value& a, const Value& b) {
  if (a.size() != b.size()) throw std::invalid_argument("block count mismatch");
  Value out;
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

Value value_axpy(const Value& a, const Real& c, const Value& b) {
  if (a.size() != b.size()) throw std::invalid_argument("block count mismatch");
  Value out;
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i].scaled(c));
  return out;
}

Value value_transpose(const Value& a) {
  Value out;
  for (const auto& m : a) out.push_back(m.transpose());
  return out;
}

Real value_norm(const Value& a) {
  Real s = 0;
  for (const auto& m : a) {
    Real f = m.norm();
    s += f * f;
  }
  return sqrt(s);
}

NumericRank rank_of_vectors(const std::vector<std::vector<Real>>& rows) {
  return numeric_rank(rows, pow2_neg(static_cast<long>(current_precision_bits() / 2)));
}

NumericRank rank_of(const std::vector<GeneratorWord>& words, const Realization& R) {
  std::vector<std::vector<Real>> rows;
  for (const auto& w : words) rows.push_back(R.vectorize(R.evaluate(w)));
  return rank_of_vectors(rows);
}

NumericRank rank_of(const std::vector<WordProduct>& products, const Realization& R) {
  std::vector<std::vector<Real>> rows;
  for (const auto& p : products) rows.push_back(R.vectorize(R.evaluate(p)));
  return rank_of_vectors(rows);
}

nlohmann::json rank_report(int count, const NumericRank& nr) {
  nlohmann::json head = nlohmann::json::array();
  for (size_t i = 0; i < nr.spectrum.size() && i < 4; ++i) head.push_back(to_string(nr.spectrum[i]));
  nlohmann::json tail = nlohmann::json::array();
  if (nr.rank > 0 && nr.rank <= static_cast<int>(nr.spectrum.size())) tail.push_back(to_string(nr.spectrum[nr.rank - 1]));
  if (nr.rank < static_cast<int>(nr.spectrum.size())) tail.push_back(to_string(nr.spectrum[nr.rank]));
  return {{"count", count}, {"rank", nr.rank}, {"threshold", to_string(nr.threshold)}, {"spectrum_head", head},
          {"spectrum_gap", tail}};
}

nlohmann::json CellIndex::to_json() const {
  return {{"t", t.to_json()}, {"kappa", kappa}, {"d", d}};
}

GeneratorWord ef_word(int n, int f) {
  if (f < 0 || 2 * f > n) throw std::invalid_argument("arc count out of range");
  GeneratorWord w;
  for (int i = 0; i < f; ++i) w.push_back(E_(n - 1 - 2 * i));
  return w;
}

GeneratorWord kappa_word(const std::vector<int>& kappa) {
  GeneratorWord w;
  for (int j = static_cast<int>(kappa.size()); j >= 1; --j)
    if (kappa[j - 1] > 0) w.push_back(X_(j, kappa[j - 1]));
  return w;
}

std::vector<std::vector<int>> kappa_set(int r, int n, int f) {
  std::vector<bool> allowed(n, false);
  for (int i = 0; i < f; ++i) allowed[n - 2 - 2 * i] = true;
  return exponent_vectors(r, allowed);
}

std::vector<CellIndex> delta_set(int r, int n, int f, const Multipartition& lambda) {
  if (lambda.r() != r || lambda.size() != n - 2 * f) throw std::invalid_argument("shape does not match n - 2f");
  std::vector<CellIndex> out;
  const auto kappas = kappa_set(r, n, f);
  const auto ds = coset_reps(n, f);
  for (const UpDownTableau& t : standard_tableaux(lambda))
    for (const auto& k : kappas)
      for (const Perm& d : ds) out.push_back({t, k, d});
  return out;
}

BigInt delta_count(int r, int n, int f, const Multipartition& lambda) {
  if (lambda.size() != n - 2 * f) throw std::invalid_argument("shape does not match n - 2f");
  BigInt c = count_standard(lambda) * ipow(BigInt(r), f) * factorial(n);
  c /= factorial(n - 2 * f) * ipow(BigInt(2), f) * factorial(f);
  return c;
}

BigInt cellular_count(int r, int n) {
  BigInt total = 0;
  for (int f = 0; 2 * f <= n; ++f)
    for (const Multipartition& lambda : multipartitions_of(r, n - 2 * f)) {
      BigInt c = delta_count(r, n, f, lambda);
      total += c * c;
    }
  return total;
}

namespace {

Perm embed(const Perm& p, int n) {
  Perm q = perm_identity(n);
  for (size_t j = 0; j < p.size(); ++j) q[j] = p[j];
  return q;
}

}  // namespace

WordProduct m_word(int n, const Multipartition& lambda, const UpDownTableau& s, const UpDownTableau& t,
                   const std::vector<Rational>& u) {
  const int m = lambda.size();
  if (m > n) throw std::invalid_argument("shape larger than n");
  if (static_cast<int>(u.size()) != lambda.r()) throw std::invalid_argument("u must have r entries");
  WordProduct p;
  if (m == 0) return p;
  if (!is_standard(s) || !is_standard(t) || s.shape() != lambda || t.shape() != lambda)
    throw std::invalid_argument("M_st needs standard tableaux of shape lambda");
  p.times(word_for_perm(embed(perm_inverse(tableau_perm(s)), n)));
  int a = 0;
  for (int c = 2; c <= lambda.r(); ++c) {
    for (int part : lambda.comps[c - 2]) a += part;
    for (int i = 1; i <= a; ++i) p.times(WordProduct::Factor{{Rational(1), {X_(i)}}, {-u[c - 1], {}}});
  }
  WordProduct::Factor sym;
  for (const Perm& w : row_stabilizer(lambda)) sym.emplace_back(Rational(1), word_for_perm(embed(w, n)));
  p.times(std::move(sym));
  p.times(word_for_perm(embed(tableau_perm(t), n)));
  return p;
}

WordProduct cellular_element(int n, int f, const Multipartition& lambda, const CellIndex& left, const CellIndex& right,
                             const std::vector<Rational>& u) {
  if (lambda.size() != n - 2 * f) throw std::invalid_argument("shape does not match n - 2f");
  for (const CellIndex* c : {&left, &right}) {
    if (static_cast<int>(c->kappa.size()) != n || static_cast<int>(c->d.size()) != n)
      throw std::invalid_argument("malformed cell index");
    for (int j = 1; j <= n; ++j) {
      const bool allowed = j <= n - 1 && j >= n - 2 * f + 1 && (n - j) % 2 == 1;
      if (c->kappa[j - 1] != 0 && !allowed) throw std::invalid_argument("kappa outside its support");
    }
  }
  WordProduct p;
  p.times(word_star(word_for_perm(left.d)));
  p.times(word_star(kappa_word(left.kappa)));
  p.times(ef_word(n, f));
  for (auto& factor : m_word(n, lambda, left.t, right.t, u).factors) p.times(std::move(factor));
  p.times(kappa_word(right.kappa));
  p.times(word_for_perm(right.d));
  return p;
}

std::vector<CellularWord> all_cellular_words(int r, int n, const std::vector<Rational>& u) {
  std::vector<CellularWord> out;
  for (int f = 0; 2 * f <= n; ++f)
    for (const Multipartition& lambda : multipartitions_of(r, n - 2 * f)) {
      const auto delta = delta_set(r, n, f, lambda);
      for (size_t i = 0; i < delta.size(); ++i)
        for (size_t j = 0; j < delta.size(); ++j)
          out.push_back({f, lambda, static_cast<int>(i), static_cast<int>(j),
                         cellular_element(n, f, lambda, delta[i], delta[j], u)});
    }
  return out;
}

bool CellularRankReport::pass() const { return count == target && rank.rank == words && BigInt(words) == target; }

nlohmann::json CellularRankReport::to_json() const {
  nlohmann::json j = rank_report(words, rank);
  j["count_formula"] = to_string(count);
  j["target"] = to_string(target);
  j["pass"] = pass();
  return j;
}

CellularRankReport cellular_rank_check(int r, int n, const ParamSet& ps) {
  CellularRankReport rep;
  rep.count = cellular_count(r, n);
  rep.target = ipow(BigInt(r), n) * odd_double_factorial(n);
  Realization R(n, ps);
  auto words = all_cellular_words(r, n, ps.u);
  std::vector<WordProduct> products;
  for (auto& w : words) products.push_back(std::move(w.product));
  rep.words = static_cast<int>(products.size());
  rep.rank = rank_of(products, R);
  return rep;
}

StarReport cellular_star_check(const Realization& R, const std::vector<CellularWord>& words) {
  StarReport rep{Real(0), Real(0), Real(0)};
  std::map<std::tuple<int, Multipartition, int, int>, const CellularWord*> index;
  for (const auto& w : words) index[{w.f, w.lambda, w.left, w.right}] = &w;
  const int n = R.n();
  for (const auto& w : words) {
    Value v = R.evaluate(w.product);
    Value vt = value_transpose(v);
    Value vs = R.evaluate(w.product.star());
    rep.word_transpose = max(rep.word_transpose, value_norm(value_axpy(vs, Real(-1), vt)));
    Value swapped = R.evaluate(index.at({w.f, w.lambda, w.right, w.left})->product);
    Value diff = value_axpy(vt, Real(-1), swapped);
    rep.swapped_pairs = max(rep.swapped_pairs, value_norm(diff));
    for (size_t b = 0; b < diff.size(); ++b)
      if (R.blocks()[b].lambda.size() >= n - 2 * w.f) rep.swapped_pairs_top = max(rep.swapped_pairs_top, diff[b].norm());
  }
  return rep;
}

Real ef_commutation_residual(const Realization& R) {
  const int n = R.n(), r = R.params().r;
  Real worst = 0;
  for (int f = 1; 2 * f <= n; ++f) {
    Value e = R.evaluate(ef_word(n, f));
    for (const Multipartition& lambda : multipartitions_of(r, n - 2 * f)) {
      auto tabs = standard_tableaux(lambda);
      for (const auto& s : tabs)
        for (const auto& t : tabs) {
          Value m = R.evaluate(m_word(n, lambda, s, t, R.params().u));
          worst = max(worst, value_norm(value_axpy(value_mul(e, m), Real(-1), value_mul(m, e))));
        }
    }
  }
  return worst;
}

Real hecke_compatibility_residual(const Realization& R, int fmax) {
  const int n = R.n(), r = R.params().r;
  const Real omega0 = to_real(R.params().omega_at(0));
  Real worst = 0;
  for (int f = 0; 2 * f <= n && f <= fmax; ++f) {
    const int m = n - 2 * f;
    Real wf = 1;
    for (int i = 0; i < f; ++i) wf *= omega0;
    for (const Multipartition& lambda : multipartitions_of(r, m)) {
      size_t b = 0;
      while (b < R.blocks().size() && R.blocks()[b].lambda != lambda) ++b;
      if (b == R.blocks().size()) throw std::logic_error("missing block");
      auto tabs = standard_tableaux(lambda);
      const int k = static_cast<int>(tabs.size());
      QMatrix gram(k, std::vector<Rational>(k, Rational(m == 0 ? 1 : 0)));
      if (m > 0) {
        HeckeAlgebra H(r, m, R.params().u);
        MurphyBasis mb = build_murphy_basis(H);
        gram = gram_matrix(H, mb, lambda);
      }
      std::vector<int> trivial_kappa(n, 0);
      const Perm id = perm_identity(n);
      std::vector<std::vector<SparseMatrix<Real>>> c(k, std::vector<SparseMatrix<Real>>(k));
      for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t)
          c[s][t] = R.evaluate(cellular_element(n, f, lambda, {tabs[s], trivial_kappa, id},
                                                {tabs[t], trivial_kappa, id}, R.params().u))[b];
      for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t)
          for (int v = 0; v < k; ++v) {
            SparseMatrix<Real> lhs = c[s][t] * c[v][s];
            SparseMatrix<Real> rhs = c[s][s].scaled(wf * to_real(gram[t][v]));
            worst = max(worst, (lhs - rhs).norm());
          }
    }
  }
  return worst;
}

}  // namespace nw
