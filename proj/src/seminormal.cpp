#include "nw/seminormal.hpp"

#include <algorithm>
#include <stdexcept>

namespace nw {

int SeminormalRep::index_of(const UpDownTableau& t) const {
  auto it = std::find(basis.begin(), basis.end(), t);
  return it == basis.end() ? -1 : static_cast<int>(it - basis.begin());
}

nlohmann::json SeminormalRep::to_json() const {
  nlohmann::json j;
  j["lambda"] = lambda.to_json();
  j["n"] = n;
  j["dim"] = dim();
  j["precision_bits"] = precision_bits;
  j["basis"] = nlohmann::json::array();
  for (const auto& t : basis) j["basis"].push_back(t.to_json());
  auto dump = [](const SparseMatrix<Real>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i)
      for (const auto& [c, v] : m.row(i)) rows.push_back({i, c, to_string(v)});
    return rows;
  };
  for (std::size_t k = 0; k < mats.S.size(); ++k) {
    j["S"].push_back(dump(mats.S[k]));
    j["E"].push_back(dump(mats.E[k]));
  }
  for (const auto& x : mats.X) j["X"].push_back(dump(x));
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t k = 0; k < coeffs.e_diag.size(); ++k)
    for (int i = 0; i < dim(); ++i) {
      nlohmann::json e{{"k", k + 1}, {"t", i}};
      if (coeffs.e_diag[k][i]) e["e"] = to_string(*coeffs.e_diag[k][i]);
      if (coeffs.a[k][i]) e["a"] = to_string(*coeffs.a[k][i]);
      if (coeffs.b_sq[k][i]) e["b_sq"] = to_string(*coeffs.b_sq[k][i]);
      table.push_back(e);
    }
  j["coefficients"] = table;
  return j;
}

Rational e_diag(const UpDownTableau& t, int k, const ParamSet& ps) {
  if (k < 1 || k >= t.n()) throw std::invalid_argument("k out of range");
  if (t.at(k - 1) != t.at(k + 1)) throw std::domain_error("e_tt(k) requires t_{k-1} = t_{k+1}");
  const Rational c = content(t, k, ps.u);
  Rational e = 2 * c - sign_pow(ps.r);
  for (const Rational& ca : node_contents_before(t, k, ps.u)) {
    if (ca == c) continue;
    if (c == -ca) throw std::domain_error("content collision: parameters are not generic");
    e *= (c + ca) / (c - ca);
  }
  return e;
}

void require_real_regime(const ParamSet& ps, int n) {
  if (!is_w_generic(ps.u, n)) throw std::domain_error("u is not generic: some u_i +- u_j or 2u_i is an integer below 2n");
  if (auto why = real_regime_violation(ps.u, n)) throw std::domain_error("u outside the real regime: " + *why);
}

SeminormalRep build_rep(const Multipartition& lambda, int n, const ParamSet& ps) {
  if (lambda.r() != ps.r) throw std::invalid_argument("shape and parameters have different r");
  require_real_regime(ps, n);
  SeminormalRep rep;
  rep.lambda = lambda;
  rep.n = n;
  rep.precision_bits = current_precision_bits();
  rep.basis = enumerate_updown(n, lambda);
  const int d = rep.dim();
  for (const auto& t : rep.basis) rep.contents.push_back(content_sequence(t, ps.u));

  std::map<UpDownTableau, int> index;
  for (int i = 0; i < d; ++i) index[rep.basis[i]] = i;

  SemiCoeffs& co = rep.coeffs;
  const int K = std::max(n - 1, 0);
  co.e_diag.assign(K, std::vector<std::optional<Rational>>(d));
  co.a.assign(K, std::vector<std::optional<Rational>>(d));
  co.b_sq.assign(K, std::vector<std::optional<Rational>>(d));
  co.partner.assign(K, std::vector<int>(d, -1));
  co.klass.assign(K, std::vector<std::vector<int>>(d));

  GeneratorMatrices<Real>& m = rep.mats;
  m.n = n;
  for (int k = 1; k <= K; ++k) {
    SparseMatrix<Real> S(d, d), E(d, d);
    for (int i = 0; i < d; ++i) {
      const UpDownTableau& t = rep.basis[i];
      if (t.at(k - 1) == t.at(k + 1)) {
        co.e_diag[k - 1][i] = e_diag(t, k, ps);
        for (const auto& u : k_neighbors(t, k)) co.klass[k - 1][i].push_back(index.at(u));
      } else {
        const Rational& ck = rep.contents[i][k - 1];
        const Rational& ck1 = rep.contents[i][k];
        Rational a = Rational(1) / (ck1 - ck);
        co.a[k - 1][i] = a;
        auto p = sk_action(t, k);
        co.b_sq[k - 1][i] = p ? Rational(1) - a * a : Rational(0);
        if (p) co.partner[k - 1][i] = index.at(*p);
      }
    }
    for (int i = 0; i < d; ++i) {
      if (co.e_diag[k - 1][i]) {
        const Rational& ci = rep.contents[i][k - 1];
        Real si = sqrt(to_real(*co.e_diag[k - 1][i]));
        for (int j : co.klass[k - 1][i]) {
          const Rational& cj = rep.contents[j][k - 1];
          Real e = si * sqrt(to_real(*co.e_diag[k - 1][j]));
          E.add(j, i, e);
          Real s = (e - (i == j ? 1 : 0)) / to_real(ci + cj);
          S.add(j, i, s);
        }
      } else {
        S.add(i, i, to_real(*co.a[k - 1][i]));
        if (co.partner[k - 1][i] >= 0) S.add(co.partner[k - 1][i], i, sqrt(to_real(*co.b_sq[k - 1][i])));
      }
    }
    m.S.push_back(std::move(S));
    m.E.push_back(std::move(E));
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<Real> diag;
    for (int i = 0; i < d; ++i) diag.push_back(to_real(rep.contents[i][j - 1]));
    m.X.push_back(SparseMatrix<Real>::diagonal(diag));
  }
  return rep;
}

namespace {

template <class T>
void record(RelationResiduals<T>& r, const std::string& fam, const SparseMatrix<T>& diff) {
  T v = diff.norm();
  auto it = r.family.find(fam);
  if (it == r.family.end()) r.family.emplace(fam, v);
  else if (v > it->second) it->second = v;
}

template <class T>
void touch(RelationResiduals<T>& r, const std::string& fam) {
  r.family.emplace(fam, T(0));
}

}  // namespace

template <class T>
RelationResiduals<T> relation_residuals(const GeneratorMatrices<T>& m, const ParamSet& ps, int unwrap_max) {
  const int n = m.n;
  const int d = m.dim();
  if (static_cast<int>(m.X.size()) != n || static_cast<int>(m.S.size()) != std::max(n - 1, 0) ||
      static_cast<int>(m.E.size()) != std::max(n - 1, 0))
    throw std::invalid_argument("generator count does not match n");
  auto check_shape = [&](const SparseMatrix<T>& a) {
    if (a.rows() != d || a.cols() != d) throw std::invalid_argument("generator matrices must be square of equal size");
  };
  for (const auto& a : m.S) check_shape(a);
  for (const auto& a : m.E) check_shape(a);
  for (const auto& a : m.X) check_shape(a);

  RelationResiduals<T> r;
  const auto I = SparseMatrix<T>::identity(d);
  const auto& S = m.S;
  const auto& E = m.E;
  const auto& X = m.X;
  const T w0 = from_rational<T>(ps.omega_at(0));
  for (const char* fam : {"involutions", "braid", "idempotent", "commutation", "skein", "unwrapping", "tangle",
                          "untwisting", "anti-symmetry", "cyclotomic"})
    touch(r, fam);

  for (int i = 0; i + 1 < n; ++i) {
    record(r, "involutions", S[i] * S[i] - I);
    record(r, "idempotent", E[i] * E[i] - E[i].scaled(w0));
    record(r, "skein", S[i] * X[i] - X[i + 1] * S[i] - (E[i] - I));
    record(r, "skein", X[i] * S[i] - S[i] * X[i + 1] - (E[i] - I));
    record(r, "tangle", E[i] * S[i] - E[i]);
    record(r, "tangle", S[i] * E[i] - E[i]);
    record(r, "anti-symmetry", E[i] * (X[i] + X[i + 1]));
    record(r, "anti-symmetry", (X[i] + X[i + 1]) * E[i]);
    for (int j = 0; j + 1 < n; ++j) {
      if (std::abs(i - j) <= 1) continue;
      record(r, "braid", S[i] * S[j] - S[j] * S[i]);
      record(r, "commutation", S[i] * E[j] - E[j] * S[i]);
      record(r, "commutation", E[i] * E[j] - E[j] * E[i]);
    }
    for (int j = 0; j < n; ++j) {
      if (j == i || j == i + 1) continue;
      record(r, "braid", S[i] * X[j] - X[j] * S[i]);
      record(r, "commutation", E[i] * X[j] - X[j] * E[i]);
    }
  }
  for (int i = 0; i + 2 < n; ++i) {
    record(r, "braid", S[i] * S[i + 1] * S[i] - S[i + 1] * S[i] * S[i + 1]);
    record(r, "tangle", S[i] * E[i + 1] * E[i] - S[i + 1] * E[i]);
    record(r, "tangle", E[i + 1] * E[i] * S[i + 1] - E[i + 1] * S[i]);
    record(r, "untwisting", E[i + 1] * E[i] * E[i + 1] - E[i + 1]);
    record(r, "untwisting", E[i] * E[i + 1] * E[i] - E[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) record(r, "commutation", X[i] * X[j] - X[j] * X[i]);
  if (n >= 2) {
    SparseMatrix<T> xp = I;
    for (int a = 1; a <= unwrap_max; ++a) {
      xp = xp * X[0];
      record(r, "unwrapping", E[0] * xp * E[0] - E[0].scaled(from_rational<T>(ps.omega_at(a))));
    }
  }
  if (n >= 1) {
    SparseMatrix<T> p = I;
    for (const Rational& ui : ps.u) p = p * (X[0] - I.scaled(from_rational<T>(ui)));
    record(r, "cyclotomic", p);
  }
  return r;
}

template RelationResiduals<Rational> relation_residuals(const GeneratorMatrices<Rational>&, const ParamSet&, int);
template RelationResiduals<Real> relation_residuals(const GeneratorMatrices<Real>&, const ParamSet&, int);

template <class T>
RelationResiduals<T> check_module(const GeneratorMatrices<T>& m, const ParamSet& ps) {
  return relation_residuals(m, ps, std::min(2 * ps.r, ps.truncation()));
}

template RelationResiduals<Rational> check_module(const GeneratorMatrices<Rational>&, const ParamSet&);
template RelationResiduals<Real> check_module(const GeneratorMatrices<Real>&, const ParamSet&);

RelationResiduals<Real> exe_residuals(const SeminormalRep& rep, const ParamSet& ps, int amax) {
  RelationResiduals<Real> r;
  touch(r, std::string("exe"));
  const int d = rep.dim();
  for (int k = 1; k < rep.n; ++k) {
    std::vector<TruncatedSeries> series(d);
    for (int i = 0; i < d; ++i)
      if (rep.coeffs.e_diag[k - 1][i]) series[i] = wk_recursive(rep.basis[i], k, ps, amax);
    SparseMatrix<Real> xp = SparseMatrix<Real>::identity(d);
    const auto& E = rep.mats.E[k - 1];
    for (int a = 0; a <= amax; ++a) {
      if (a > 0) xp = xp * rep.mats.X[k - 1];
      std::vector<Real> diag(d, Real(0));
      for (int i = 0; i < d; ++i)
        if (rep.coeffs.e_diag[k - 1][i]) diag[i] = to_real(series[i].coeff(a));
      record(r, "exe", E * xp * E - SparseMatrix<Real>::diagonal(diag) * E);
    }
  }
  return r;
}

Real relation_tolerance(unsigned precision_bits) { return pow2_neg(static_cast<int>(precision_bits) - 40); }

bool RelationReport::all_pass() const {
  for (const auto& [k, v] : families)
    if (!v.pass) return false;
  return true;
}

RelationReport verify_relations(const std::vector<SeminormalRep>& reps, const ParamSet& ps) {
  RelationReport report;
  for (const auto& rep : reps) {
    const Real tol = relation_tolerance(rep.precision_bits) * std::max(rep.dim(), 1);
    auto merge = [&](const RelationResiduals<Real>& res) {
      for (const auto& [fam, v] : res.family) {
        auto it = report.families.find(fam);
        if (it == report.families.end()) it = report.families.emplace(fam, FamilyVerdict{Real(0), tol, true}).first;
        if (v > it->second.max_residual) it->second.max_residual = v;
        if (tol > it->second.tolerance) it->second.tolerance = tol;
        if (!(v < tol)) it->second.pass = false;
      }
    };
    merge(relation_residuals(rep.mats, ps, std::min(2 * ps.r, ps.truncation())));
    merge(exe_residuals(rep, ps, std::min(2 * ps.r, ps.truncation())));
  }
  return report;
}

bool IdentityReport::all_ok() const {
  for (const auto& [k, v] : checks)
    if (v.failures != 0) return false;
  return true;
}

IdentityReport check_identities(const Multipartition& lambda, int n, const ParamSet& ps) {
  if (!is_w_generic(ps.u, n)) throw std::domain_error("identity checks need generic u");
  IdentityReport rep;
  auto tally = [&](const std::string& name, bool ok) {
    Tally& t = rep.checks[name];
    ++t.instances;
    if (!ok) ++t.failures;
  };
  for (const char* name : {"e-residue", "w-residue", "partial-fractions", "identity-a", "identity-b", "identity-c",
                           "ees", "be-equality", "x-equal-a", "x-equal-b", "w-tilde-series", "w-tilde-rational",
                           "cancellation", "e-positive", "a-bounded"})
    rep.checks[name];

  const auto basis = enumerate_updown(n, lambda);
  const int N = ps.truncation();
  auto conn = [](const UpDownTableau& t, int k) { return t.at(k - 1) == t.at(k + 1); };
  auto bsq = [&](const UpDownTableau& t, int k) {
    Rational a = Rational(1) / (content(t, k + 1, ps.u) - content(t, k, ps.u));
    return Rational(1) - a * a;
  };

  for (const auto& s : basis) {
    for (int k = 1; k <= n; ++k) {
      tally("partial-fractions", wk_partial_fraction_check(s, k, ps));
      RationalFunction w = wk_rational(s, k, ps);
      tally("w-tilde-rational", wk_recursive_rational(s, k, ps) == w);
      tally("w-tilde-series", wk_recursive(s, k, ps, N).agrees_with(TruncatedSeries::from_rational(w, N + 1), N + 1));
      for (const Rational& c : node_contents_before(s, k, ps.u))
        tally("cancellation", step_factor(c) * step_factor(-c) == RationalFunction(Poly(Rational(1))));
    }
    for (int k = 1; k < n; ++k) {
      const Rational cs = content(s, k, ps.u);
      if (conn(s, k)) {
        const Rational ess = e_diag(s, k, ps);
        tally("e-positive", ess > 0);
        tally("e-residue", ess == wk_residue(s, k, ps, cs));
        const auto klass = k_neighbors(s, k);
        // W_k/y as a sum over the class
        RationalFunction sum;
        std::vector<std::pair<Rational, Rational>> ec;  // (e_tt, c_t)
        for (const auto& t : klass) {
          Rational ct = content(t, k, ps.u), et = e_diag(t, k, ps);
          ec.emplace_back(et, ct);
          sum = sum + RationalFunction(Poly(et), Poly::linear(ct));
        }
        tally("w-residue", sum == wk_rational(s, k, ps) / RationalFunction(Poly::y()));
        Rational a_sum = 0, b_sum = 0;
        for (auto& [et, ct] : ec) {
          a_sum += et / (cs + ct);
          b_sum += et / ((cs + ct) * (cs + ct));
        }
        tally("identity-a", a_sum == 1 + Rational(1) / (2 * cs));
        tally("identity-b", b_sum == (1 - Rational(1) / (4 * cs * cs)) / ess + Rational(1) / (2 * cs * cs));
        for (const auto& tp : klass) {
          if (tp == s) continue;
          const Rational ctp = content(tp, k, ps.u);
          Rational c_sum = 0;
          for (auto& [et, ct] : ec) c_sum += et / ((cs + ct) * (ct + ctp));
          tally("identity-c", c_sum == Rational(1) / (2 * cs * ctp));
        }
        if (k + 1 < n && s.at(k) == s.at(k + 2)) {
          tally("ees", ess * e_diag(s, k + 1, ps) == 1);
          // be-equality over t ~(k+1) s and u ~k s with S_k t = S_{k+1} u
          for (const auto& t : k_neighbors(s, k + 1)) {
            if (conn(t, k)) continue;
            auto skt = sk_action(t, k);
            if (!skt) continue;
            for (const auto& u : k_neighbors(s, k)) {
              if (conn(u, k + 1)) continue;
              auto sku = sk_action(u, k + 1);
              if (!sku || *sku != *skt) continue;
              tally("be-equality", bsq(t, k) * e_diag(t, k + 1, ps) == bsq(u, k + 1) * e_diag(u, k, ps));
            }
          }
        }
      } else {
        const Rational a = Rational(1) / (content(s, k + 1, ps.u) - cs);
        tally("a-bounded", abs(a) <= 1);
        auto p = sk_action(s, k);
        if (p) {
          const Rational ap = Rational(1) / (content(*p, k + 1, ps.u) - content(*p, k, ps.u));
          tally("x-equal-a", content(*p, k, ps.u) == content(s, k + 1, ps.u) &&
                                 content(*p, k + 1, ps.u) == cs && ap == -a);
        } else {
          tally("x-equal-b", abs(a) == 1);
        }
      }
    }
  }
  return rep;
}

BranchingReport branching_blocks(const SeminormalRep& rep, const ParamSet& ps) {
  if (rep.n < 2) throw std::invalid_argument("branching needs n > 1");
  BranchingReport br;
  const int n = rep.n;
  std::vector<Multipartition> label(rep.dim());
  for (int i = 0; i < rep.dim(); ++i) {
    label[i] = rep.basis[i].at(n - 1);
    br.blocks[label[i]].push_back(i);
  }
  std::vector<const SparseMatrix<Real>*> gens;
  for (int k = 1; k < n - 1; ++k) {
    gens.push_back(&rep.mats.S[k - 1]);
    gens.push_back(&rep.mats.E[k - 1]);
  }
  for (int j = 1; j <= n - 1; ++j) gens.push_back(&rep.mats.X[j - 1]);

  br.off_block_residual = 0;
  for (const auto* g : gens)
    for (int i = 0; i < g->rows(); ++i)
      for (const auto& [j, v] : g->row(i))
        if (label[i] != label[j] && abs(v) > br.off_block_residual) br.off_block_residual = abs(v);

  br.block_residual = 0;
  for (const auto& [mu, idx] : br.blocks) {
    if (BigInt(static_cast<long>(idx.size())) != count_updown(n - 1, mu)) br.sizes_match = false;
    SeminormalRep sub = build_rep(mu, n - 1, ps);
    if (sub.dim() != static_cast<int>(idx.size())) {
      br.sizes_match = false;
      continue;
    }
    std::vector<int> to_sub(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      UpDownTableau t = rep.basis[idx[a]];
      t.steps.pop_back();
      to_sub[a] = sub.index_of(t);
    }
    auto compare = [&](const SparseMatrix<Real>& big, const SparseMatrix<Real>& small) {
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) {
          Real diff = abs(big.get(idx[a], idx[b]) - small.get(to_sub[a], to_sub[b]));
          if (diff > br.block_residual) br.block_residual = diff;
        }
    };
    for (int k = 1; k < n - 1; ++k) {
      compare(rep.mats.S[k - 1], sub.mats.S[k - 1]);
      compare(rep.mats.E[k - 1], sub.mats.E[k - 1]);
    }
    for (int j = 1; j <= n - 1; ++j) compare(rep.mats.X[j - 1], sub.mats.X[j - 1]);
  }
  return br;
}

int commutant_dimension(const SeminormalRep& rep) {
  const int d = rep.dim();
  std::vector<const SparseMatrix<Real>*> gens;
  for (const auto& m : rep.mats.S) gens.push_back(&m);
  for (const auto& m : rep.mats.E) gens.push_back(&m);
  for (const auto& m : rep.mats.X) gens.push_back(&m);
  // Unknown C (d x d, index p*d+q); each generator G contributes GC - CG = 0.
  std::vector<std::vector<Real>> rows;
  for (const auto* g : gens) {
    auto dense = g->dense();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<Real> row(d * d, Real(0));
        for (int p = 0; p < d; ++p) {
          row[p * d + j] += dense[i][p];
          row[i * d + p] -= dense[p][j];
        }
        rows.push_back(std::move(row));
      }
  }
  const Real thresh = pow2_neg(static_cast<int>(rep.precision_bits) / 2);
  return d * d - numeric_rank_elimination(std::move(rows), thresh);
}

}  // namespace nw
