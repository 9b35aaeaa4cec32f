#include "fixtures.hpp"
#include "nw/seminormal.hpp"

#include <doctest.h>

using namespace nw;

using namespace nw::fixtures;

TEST_SUITE("seminormal") {
  TEST_CASE("one-dimensional modules with E = 0 are exact") {
    const auto u = default_u(2, 2);
    const auto ps = ParamSet::from_u(u, default_truncation(2, 2));
    for (const Rational& ui : u)
      for (int eps : {-1, 1}) CHECK(all_zero(check_module(one_dim(Rational(eps), ui), ps)));
    // X_2 = u_i + 2 breaks the relations
    auto bad = one_dim(Rational(1), u[0]);
    bad.X[1] = QSparse::from_dense({{u[0] + 2}});
    CHECK_FALSE(all_zero(check_module(bad, ps)));
  }

  TEST_CASE("two-dimensional modules with E = 0 and bc = (u_i - u_j)^2 - 1 are exact") {
    const auto u = default_u(3, 2);
    const auto ps = ParamSet::from_u(u, default_truncation(3, 2));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const Rational d = u[i] - u[j];
        for (const Rational& b : {Rational(1), Rational(3, 7)}) {
          auto m = two_dim(u[i], u[j], b);
          const Rational c = (d * d - 1) / b;
          CHECK(all_zero(check_module(m, ps)));
          m.S = {dense2(-1 / d, b / d, (c + 1) / d, 1 / d)};
          CHECK_FALSE(all_zero(check_module(m, ps)));
        }
      }
  }

  TEST_CASE("the non-semisimple two-dimensional module is exact") {
    const auto [ps, m] = nilpotent_module();
    CHECK(all_zero(check_module(m, ps)));
    const QSparse shifted = m.X[0] - QSparse::identity(2).scaled(Rational(1, 4));
    CHECK_FALSE(shifted.is_zero());
    CHECK((shifted * shifted).is_zero());
  }

  TEST_CASE("dimensions and shape of the generator matrices") {
    PrecisionGuard guard(256);
    for (int r = 1; r <= 2; ++r)
      for (int n = 1; n <= 3; ++n) {
        const auto ps = ParamSet::from_u(default_u(r, n), default_truncation(r, n));
        for (const auto& lambda : updown_shapes(r, n)) {
          const auto rep = build_rep(lambda, n, ps);
          CHECK(BigInt(rep.dim()) == count_updown(n, lambda));
          for (int k = 0; k + 1 < n; ++k) {
            CHECK((rep.mats.S[k] - rep.mats.S[k].transpose()).is_zero());
            CHECK((rep.mats.E[k] - rep.mats.E[k].transpose()).is_zero());
          }
          for (int j = 0; j < n; ++j)
            for (int i = 0; i < rep.dim(); ++i) {
              for (const auto& [col, v] : rep.mats.X[j].row(i)) CHECK(col == i);
              CHECK(rep.mats.X[j].get(i, i) == to_real(rep.contents[i][j]));
            }
          for (int i = 0; i < rep.dim(); ++i) CHECK(rep.index_of(rep.basis[i]) == i);
        }
      }
  }

  TEST_CASE("small explicit representations") {
    PrecisionGuard guard(256);
    const auto u1 = default_u(1, 2);
    const auto ps1 = ParamSet::from_u(u1, default_truncation(1, 2));
    const auto rep = build_rep(Multipartition::empty(1), 2, ps1);
    REQUIRE(rep.dim() == 1);
    const Real tol = pow2_neg(200);
    CHECK(abs(rep.mats.S[0].get(0, 0) - 1) < tol);
    CHECK(abs(rep.mats.E[0].get(0, 0) - to_real(ps1.omega_at(0))) < tol);
    CHECK(rep.mats.X[0].get(0, 0) == to_real(u1[0]));
    CHECK(rep.mats.X[1].get(0, 0) == to_real(-u1[0]));

    const auto u2 = default_u(2, 2);
    const auto ps2 = ParamSet::from_u(u2, default_truncation(2, 2));
    const auto rep2 = build_rep(Multipartition::parse("1|1"), 2, ps2);
    REQUIRE(rep2.dim() == 2);
    const Real a = to_real(Rational(1) / (u2[1] - u2[0]));
    const Real s00 = rep2.mats.S[0].get(0, 0), s11 = rep2.mats.S[0].get(1, 1);
    CHECK(abs(abs(s00) - abs(a)) < pow2_neg(200));
    CHECK(abs(s00 + s11) < pow2_neg(200));
    const Real b = rep2.mats.S[0].get(0, 1);
    CHECK(abs(b * b + a * a - 1) < pow2_neg(200));
  }

  TEST_CASE("relation suite passes and catches sabotage") {
    PrecisionGuard guard(256);
    for (int r = 1; r <= 3; ++r)
      for (int n = 1; n <= 3; ++n) {
        const auto ps = ParamSet::from_u(default_u(r, n), default_truncation(r, n));
        std::vector<SeminormalRep> reps;
        for (const auto& lambda : updown_shapes(r, n)) reps.push_back(build_rep(lambda, n, ps));
        const auto report = verify_relations(reps, ps);
        CHECK(report.all_pass());
        if (n >= 2) {
          auto bad = ps;
          bad.omega[1] += Rational(1, 1000);
          CHECK_FALSE(verify_relations(reps, bad).all_pass());
        }
      }
  }

  TEST_CASE("verdicts agree between 64 and 256 bits") {
    for (unsigned bits : {64u, 256u}) {
      PrecisionGuard guard(bits);
      const auto ps = ParamSet::from_u(default_u(2, 3), default_truncation(2, 3), bits);
      std::vector<SeminormalRep> reps;
      for (const auto& lambda : updown_shapes(2, 3)) reps.push_back(build_rep(lambda, 3, ps));
      CHECK(verify_relations(reps, ps).all_pass());
    }
  }

  TEST_CASE("exact coefficient identities") {
    for (int r = 1; r <= 2; ++r)
      for (int n = 1; n <= 3; ++n) {
        const auto ps = ParamSet::from_u(default_u(r, n), default_truncation(r, n));
        for (const auto& lambda : updown_shapes(r, n)) {
          const auto rep = check_identities(lambda, n, ps);
          CHECK(rep.all_ok());
          for (const auto& [name, tally] : rep.checks) CHECK_MESSAGE(tally.failures == 0, name);
        }
      }
  }

  TEST_CASE("e coefficients on the t^{k-1} = t^{k+1} classes") {
    const auto ps = ParamSet::from_u(default_u(2, 3), default_truncation(2, 3));
    for (const auto& lambda : updown_shapes(2, 3))
      for (const auto& t : enumerate_updown(3, lambda))
        for (int k = 1; k < 3; ++k) {
          if (t.at(k - 1) != t.at(k + 1)) continue;
          Rational sum = 0;
          for (const auto& s : k_neighbors(t, k)) sum += e_diag(s, k, ps);
          CHECK(sum == ps.omega_at(0));
        }
  }

  TEST_CASE("branching to n-1") {
    PrecisionGuard guard(256);
    const auto ps = ParamSet::from_u(default_u(2, 3), default_truncation(2, 3));
    for (const auto& lambda : updown_shapes(2, 3)) {
      const auto rep = build_rep(lambda, 3, ps);
      const auto br = branching_blocks(rep, ps);
      CHECK(br.sizes_match);
      CHECK(br.off_block_residual < pow2_neg(216));
      CHECK(br.block_residual < pow2_neg(216));
      size_t total = 0;
      for (const auto& [mu, idx] : br.blocks) total += idx.size();
      CHECK(total == static_cast<size_t>(rep.dim()));
    }
  }

  TEST_CASE("seminormal representations are irreducible") {
    PrecisionGuard guard(128);
    const auto ps = ParamSet::from_u(default_u(2, 3), default_truncation(2, 3), 128);
    for (const auto& lambda : updown_shapes(2, 3)) CHECK(commutant_dimension(build_rep(lambda, 3, ps)) == 1);
  }

  TEST_CASE("regime violations are rejected") {
    const auto ps = ParamSet::from_u({Rational(1), Rational(1)}, 8);
    CHECK_THROWS_AS(require_real_regime(ps, 2), std::domain_error);
    CHECK_THROWS_AS(build_rep(Multipartition::parse("1|1"), 2, ps), std::domain_error);
  }
}
