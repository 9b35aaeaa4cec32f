// Acceptance run: one PASS/FAIL line per criterion.

#include "fixtures.hpp"
#include "nw/combinat.hpp"
#include "nw/diagrams.hpp"
#include "nw/hecke.hpp"
#include "nw/params.hpp"
#include "nw/seminormal.hpp"
#include "nw/wcell.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace nw;

namespace {

// Tolerances: relation and branching residuals are compared against 2^-216
// (times the block dimension for relations) at 256 bits.
constexpr unsigned kPrecision = 256;
constexpr int kResidualExponent = 216;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::string key(int r, int n) { return "r=" + std::to_string(r) + " n=" + std::to_string(n); }

void counting_identity(Outcome& o) {
  for (int n = 0; n <= 6; ++n) {
    const BigInt diagrams(enumerate_diagrams(n).size());
    o.require(diagrams == odd_double_factorial(n), "diagram count n=" + std::to_string(n));
    for (int r = 1; r <= 3; ++r) {
      BigInt sum = 0;
      for (const auto& lambda : updown_shapes(r, n)) {
        const BigInt f = count_updown(n, lambda);
        sum += f * f;
      }
      o.require(sum == ipow(BigInt(r), n) * diagrams, key(r, n));
    }
  }
  o.detail << "r<=3 n<=6, sum f^2 against r^n times the enumerated diagram count";
}

void updown_formula(Outcome& o) {
  long shapes = 0;
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 6; ++n)
      for (const auto& lambda : updown_shapes(r, n)) {
        ++shapes;
        o.require(count_updown(n, lambda) == BigInt(enumerate_updown(n, lambda).size()),
                  key(r, n) + " lambda=" + lambda.to_string());
      }
  o.detail << shapes << " (r, n, lambda) triples";
}

void regular_census(Outcome& o) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      const auto mons = enumerate_r_regular(r, n);
      o.require(BigInt(mons.size()) == ipow(BigInt(r), n) * odd_double_factorial(n), key(r, n));
      for (const auto& m : mons) o.require(is_r_regular(m, r), key(r, n) + " regularity");
    }
  o.detail << "r<=3 n<=4";
}

void relation_suite(Outcome& o) {
  PrecisionGuard guard(kPrecision);
  const Real tol = pow2_neg(kResidualExponent);
  o.require(relation_tolerance(kPrecision) <= tol, "tolerance");
  Real worst = 0;
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      const auto ps = ParamSet::from_u(default_u(r, n), default_truncation(r, n), kPrecision);
      std::vector<SeminormalRep> reps;
      int maxdim = 0;
      for (const auto& lambda : updown_shapes(r, n)) {
        reps.push_back(build_rep(lambda, n, ps));
        maxdim = std::max(maxdim, reps.back().dim());
      }
      const auto report = verify_relations(reps, ps);
      for (const auto& [fam, v] : report.families) {
        o.require(v.pass && v.max_residual < tol * maxdim, key(r, n) + " " + fam);
        if (v.max_residual > worst) worst = v.max_residual;
      }
    }
  o.detail << "r<=3 n<=4 at " << kPrecision << " bits, worst residual " << to_string(worst);
}

void identity_suite(Outcome& o) {
  long instances = 0;
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 4; ++n) {
      const auto ps = ParamSet::from_u(default_u(r, n), default_truncation(r, n));
      for (const auto& lambda : updown_shapes(r, n)) {
        const auto rep = check_identities(lambda, n, ps);
        for (const auto& [name, t] : rep.checks) {
          instances += t.instances;
          o.require(t.failures == 0, key(r, n) + " " + name);
        }
        for (const auto& t : enumerate_updown(n, lambda))
          for (int k = 1; k <= n; ++k) {
            o.require(wk_partial_fraction_check(t, k, ps), key(r, n) + " partial fractions");
            o.require(wk_recursive_rational(t, k, ps) == wk_rational(t, k, ps), key(r, n) + " W recursion");
          }
      }
    }
  o.detail << instances << " exact instances, r<=2 n<=4";
}

void admissibility(Outcome& o) {
  for (int r = 1; r <= 4; ++r) {
    const auto ps = ParamSet::from_u(default_u(r, 4), 25);
    const auto res = check_admissible(ps.omega);
    o.require(res.ok && res.checked_through >= 12, "derived omega r=" + std::to_string(r));
  }
  o.require(check_admissible(fixtures::recursive_omega(25)).ok, "recursive omega");
  for (const Rational& w : {Rational(3), Rational(-5, 2), Rational(7, 3)}) {
    const Rational u = (w - 1) / 2;
    for (int a = 0; a <= 10; ++a) o.require(omega_from_u({u}, a) == w * rpow(u, a), "single parameter a=" + std::to_string(a));
  }
  o.detail << "r<=4 through a=12, recursive omega, single-parameter specialization a<=10";
}

void fixtures_exact(Outcome& o) {
  const auto u = default_u(3, 2);
  const auto ps = ParamSet::from_u(u, default_truncation(3, 2));
  for (const Rational& ui : u)
    for (int eps : {-1, 1}) o.require(fixtures::all_zero(check_module(fixtures::one_dim(Rational(eps), ui), ps)), "one-dimensional");
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < u.size(); ++j)
      if (i != j) o.require(fixtures::all_zero(check_module(fixtures::two_dim(u[i], u[j], Rational(1)), ps)), "two-dimensional");
  const auto [nps, m] = fixtures::nilpotent_module();
  o.require(fixtures::all_zero(check_module(m, nps)), "nilpotent module");
  const auto shifted = m.X[0] - SparseMatrix<Rational>::identity(2).scaled(Rational(1, 4));
  o.require(!shifted.is_zero() && (shifted * shifted).is_zero(), "nilpotency of X_1 - 1/4");
  o.detail << "exact residual 0 on all three modules";
}

void hecke_dimension(Outcome& o) {
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 3; ++n) {
      const HeckeAlgebra H(r, n, default_u(r, n));
      const long target = static_cast<long>(ipow(BigInt(r), n) * factorial(n));
      o.require(H.dim() == target, key(r, n) + " dim");
      o.require(closure_dimension(H) == target, key(r, n) + " closure");
      const auto mb = build_murphy_basis(H);
      o.require(mb.rank == target, key(r, n) + " Murphy rank");
      for (const auto& [lambda, tabs] : mb.tableaux) o.require(yk_spectral_check(H, mb, lambda), key(r, n) + " spectral");
    }
  o.detail << "r<=2 n<=3";
}

void gram_factorization(Outcome& o) {
  int edges = 0;
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 3; ++n) {
      const auto u = default_u(r, n);
      const HeckeAlgebra H(r, n, u);
      const auto mb = build_murphy_basis(H);
      for (const auto& [lambda, tabs] : mb.tableaux)
        o.require(exact_det(gram_matrix(H, mb, lambda)) == gram_det(lambda, u), key(r, n) + " " + lambda.to_string());
    }
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 5; ++n)
      for (const auto& lambda : multipartitions_of(r, n)) {
        const auto g = gammas(lambda, default_u(r, n));
        edges += g.edges_checked;
        o.require(g.path_independent, key(r, n) + " path independence " + lambda.to_string());
      }
  o.require(edges > 0, "no redundant edges exercised");
  o.detail << "Gram matrices r<=2 n<=3; gamma paths r<=2 n<=5 with " << edges << " redundant edges";
}

void semisimplicity(Outcome& o) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n + 2; ++d) {
      const bool expect = d >= n;
      o.require(is_semisimple(2, n, {Rational(0), Rational(d)}) == expect, "flip n=" + std::to_string(n));
      o.require(is_semisimple(2, n, {Rational(d), Rational(0)}) == expect, "flip n=" + std::to_string(n));
    }
  for (int r = 2; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n) {
      auto gapped = default_u(r, n);
      gapped[r - 1] = gapped[0] + (n - 1);
      for (const auto& u : {default_u(r, n), gapped}) {
        const HeckeAlgebra H(r, n, u);
        std::vector<Partition> comps(r);
        comps[0] = Partition{n};
        const Multipartition lambda(comps);
        const auto t = top_tableau(lambda);
        const auto m = murphy_m(H, lambda, t, t);
        const Rational c = m_lambda_square_scalar(n, u);
        o.require(H.mul(m, m) == HeckeAlgebra::scale(m, c), key(r, n) + " square");
        if (u == gapped) o.require(c == 0 && H.mul(m, m).empty() && !m.empty(), key(r, n) + " nilpotent");
      }
    }
  o.detail << "flip at |u_1 - u_2| = n for n<=5; m_lambda^2 for r<=3 n<=3";
}

void cellular_rank(Outcome& o) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 5; ++n) o.require(cellular_count(r, n) == ipow(BigInt(r), n) * odd_double_factorial(n), key(r, n) + " count");
  PrecisionGuard guard(kPrecision);
  for (auto [r, n] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}}) {
    const auto rep = cellular_rank_check(r, n, ParamSet::from_u(default_u(r, n), default_truncation(r, n), kPrecision));
    o.require(rep.pass() && BigInt(rep.rank.rank) == rep.target, key(r, n) + " rank");
    o.detail << key(r, n) << " rank " << rep.rank.rank << "/" << rep.target << " ";
  }
  o.detail << "at " << kPrecision << " bits";
}

void branching(Outcome& o) {
  PrecisionGuard guard(kPrecision);
  const Real tol = pow2_neg(kResidualExponent);
  Real worst = 0;
  for (int r = 1; r <= 2; ++r)
    for (int n = 2; n <= 4; ++n) {
      const auto ps = ParamSet::from_u(default_u(r, n), default_truncation(r, n), kPrecision);
      for (const auto& lambda : updown_shapes(r, n)) {
        const auto rep = build_rep(lambda, n, ps);
        const auto br = branching_blocks(rep, ps);
        o.require(br.sizes_match, key(r, n) + " sizes " + lambda.to_string());
        o.require(br.off_block_residual < tol, key(r, n) + " off-block " + lambda.to_string());
        o.require(br.block_residual < tol, key(r, n) + " blocks " + lambda.to_string());
        if (br.off_block_residual > worst) worst = br.off_block_residual;
        for (const auto& [mu, idx] : br.blocks) {
          bool adjacent = false;
          for (const auto& c : addable_removable(mu, ps.u))
            adjacent |= (c.kind == NodeKind::Addable ? add_node(mu, c.node) : remove_node(mu, c.node)) == lambda;
          o.require(adjacent, key(r, n) + " adjacency " + mu.to_string());
        }
      }
    }
  o.detail << "r<=2 2<=n<=4, worst off-block residual " << to_string(worst);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"counting identity", counting_identity},
      {"updown count formula", updown_formula},
      {"r-regular monomial census", regular_census},
      {"seminormal relation suite", relation_suite},
      {"exact identity suite", identity_suite},
      {"admissibility", admissibility},
      {"explicit small modules", fixtures_exact},
      {"Hecke dimension and Murphy basis", hecke_dimension},
      {"Gram factorization", gram_factorization},
      {"semisimplicity boundary", semisimplicity},
      {"cellular rank", cellular_rank},
      {"branching", branching},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << o.detail.str()
              << ", " << secs << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
