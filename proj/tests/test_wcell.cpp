#include "nw/wcell.hpp"

#include <doctest.h>

using namespace nw;

namespace {

Real distance(const Realization::Value& a, const Realization::Value& b) {
  return value_norm(value_axpy(a, Real(-1), b));
}

ParamSet params_for(int r, int n, unsigned bits) { return ParamSet::from_u(default_u(r, n), default_truncation(r, n), bits); }

}  // namespace

TEST_SUITE("wcell") {
  TEST_CASE("r-regular census") {
    CHECK(enumerate_r_regular(1, 2).size() == 3);
    CHECK(enumerate_r_regular(2, 2).size() == 12);
    CHECK(enumerate_r_regular(2, 3).size() == 120);
    CHECK(enumerate_r_regular(1, 3).size() == 15);
    CHECK(enumerate_r_regular(3, 2).size() == 27);
    for (const auto& m : enumerate_r_regular(2, 3)) {
      CHECK(is_r_regular(m, 2));
      for (const auto& [l, rr] : m.gamma.top_arcs()) CHECK(m.alpha[l - 1] == 0);
      for (int j = 1; j <= 3; ++j) {
        bool left_end = false;
        for (const auto& [l, rr] : m.gamma.bottom_arcs()) left_end |= l == j;
        if (!left_end) CHECK(m.beta[j - 1] == 0);
      }
    }
  }

  TEST_CASE("degree counts X letters with powers") {
    RegularMonomial m{{1, 0}, {0, 2}, BrauerDiagram::e(1, 2)};
    CHECK(degree(m) == 3);
    const auto w = m.word();
    CHECK(w.front() == X_(1));
    CHECK(w.back() == X_(2, 2));
  }

  TEST_CASE("realization basics") {
    PrecisionGuard guard(128);
    const auto ps = params_for(2, 2, 128);
    const Realization R(2, ps);
    CHECK(R.vector_dim() == 12);
    CHECK(distance(R.evaluate(GeneratorWord{}), R.identity()) == 0);
    const Real tol = pow2_neg(100);
    for (int a = 0; a <= 4; ++a) {
      const auto lhs = R.evaluate(a == 0 ? GeneratorWord{E_(1), E_(1)} : GeneratorWord{E_(1), X_(1, a), E_(1)});
      const auto rhs = value_axpy(R.zero(), to_real(ps.omega_at(a)), R.evaluate(GeneratorWord{E_(1)}));
      CHECK(distance(lhs, rhs) < tol);
    }
    WordProduct cyc;
    for (const Rational& ui : ps.u) cyc.times(WordProduct::Factor{{Rational(1), {X_(1)}}, {-ui, {}}});
    CHECK(value_norm(R.evaluate(cyc)) < tol);
    const auto x1 = R.evaluate(GeneratorWord{X_(1)});
    const auto s1 = R.evaluate(GeneratorWord{S_(1)});
    CHECK(distance(value_mul(x1, s1), value_mul(s1, R.evaluate(GeneratorWord{X_(2)}))) > 1);
  }

  TEST_CASE("diagram words agree in the realization") {
    PrecisionGuard guard(128);
    const Realization R(3, params_for(2, 3, 128));
    for (const auto& g : enumerate_diagrams(3))
      CHECK(distance(R.evaluate(word_for_diagram(g)), R.evaluate(normal_form_word(g))) < pow2_neg(100));
  }

  TEST_CASE("r-regular monomials are linearly independent") {
    PrecisionGuard guard(128);
    for (auto [r, n] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}}) {
      const Realization R(n, params_for(r, n, 128));
      std::vector<GeneratorWord> words;
      for (const auto& m : enumerate_r_regular(r, n)) words.push_back(m.word());
      CHECK(static_cast<int>(words.size()) == R.vector_dim());
      CHECK(rank_of(words, R).rank == R.vector_dim());
    }
  }

  TEST_CASE("cellular index counts") {
    for (int r = 1; r <= 3; ++r)
      for (int n = 1; n <= 4; ++n) {
        CHECK(cellular_count(r, n) == ipow(BigInt(r), n) * odd_double_factorial(n));
        BigInt listed = 0;
        for (int f = 0; 2 * f <= n; ++f)
          for (const auto& lambda : multipartitions_of(r, n - 2 * f)) {
            const auto d = delta_set(r, n, f, lambda);
            CHECK(BigInt(d.size()) == delta_count(r, n, f, lambda));
            listed += BigInt(d.size()) * BigInt(d.size());
          }
        CHECK(listed == cellular_count(r, n));
      }
    CHECK(kappa_set(2, 4, 2).size() == 4);
    CHECK(ef_word(5, 2) == GeneratorWord{E_(4), E_(2)});
    CHECK(kappa_word({0, 1, 0, 2}) == GeneratorWord{X_(4, 2), X_(2)});
  }

  TEST_CASE("cellular word of the single arc") {
    PrecisionGuard guard(128);
    const auto ps = params_for(1, 2, 128);
    const Realization R(2, ps);
    int found = 0;
    for (const auto& cw : all_cellular_words(1, 2, ps.u)) {
      if (cw.f != 1) continue;
      ++found;
      CHECK(distance(R.evaluate(cw.product), R.evaluate(GeneratorWord{E_(1)})) < pow2_neg(100));
    }
    CHECK(found == 1);
  }

  TEST_CASE("cellular elements span") {
    PrecisionGuard guard(128);
    for (auto [r, n] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}}) {
      const auto report = cellular_rank_check(r, n, params_for(r, n, 128));
      CHECK(report.count == report.target);
      CHECK(report.pass());
    }
  }

  TEST_CASE("star and commutation properties") {
    PrecisionGuard guard(128);
    for (auto [r, n] : {std::pair{1, 3}, std::pair{2, 2}}) {
      const auto ps = params_for(r, n, 128);
      const Realization R(n, ps);
      const auto words = all_cellular_words(r, n, ps.u);
      const auto star = cellular_star_check(R, words);
      CHECK(star.word_transpose < pow2_neg(100));
      CHECK(star.swapped_pairs_top < pow2_neg(90));
      CHECK(ef_commutation_residual(R) < pow2_neg(100));
      CHECK(hecke_compatibility_residual(R, n / 2) < pow2_neg(90));
    }
  }
}
