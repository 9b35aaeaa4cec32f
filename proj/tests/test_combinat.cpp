#include "nw/combinat.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace nw;

namespace {

// Standard tableaux counted by peeling removable nodes, no hook lengths.
long standard_count_oracle(const Multipartition& lambda) {
  static std::map<Multipartition, long> memo;
  if (lambda.size() == 0) return 1;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  long total = 0;
  for (int c = 0; c < lambda.r(); ++c) {
    const auto& p = lambda.comps[c];
    for (size_t i = 0; i < p.size(); ++i) {
      if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
      auto comps = lambda.comps;
      --comps[c][i];
      total += standard_count_oracle(Multipartition(comps));
    }
  }
  memo[lambda] = total;
  return total;
}

// Updown walks counted by dynamic programming over shapes.
std::map<Multipartition, long> walk_counts(int r, int n) {
  std::map<Multipartition, long> cur{{Multipartition::empty(r), 1}};
  const std::vector<Rational> zero(r, Rational(0));
  for (int k = 0; k < n; ++k) {
    std::map<Multipartition, long> next;
    for (const auto& [mu, c] : cur)
      for (const CornerNode& x : addable_removable(mu, zero)) {
        Multipartition nu = x.kind == NodeKind::Addable ? add_node(mu, x.node) : remove_node(mu, x.node);
        next[nu] += c;
      }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST_SUITE("combinat") {
  TEST_CASE("multipartition text and validation") {
    Multipartition m = Multipartition::parse("2,1|1");
    CHECK(m.r() == 2);
    CHECK(m.size() == 4);
    CHECK(m.to_string() == "(2,1|1)");
    CHECK(Multipartition::parse("|1|").to_string() == "(|1|)");
    CHECK(Multipartition::from_json(m.to_json()) == m);
    CHECK_THROWS_AS(Multipartition(std::vector<Partition>{{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Multipartition::parse("2,x"), std::invalid_argument);
    CHECK(m.row(1, 2) == 1);
    CHECK(m.row(1, 3) == 0);
    CHECK(m.col_height(1, 1) == 2);
  }

  TEST_CASE("contents of nodes") {
    std::vector<Rational> u{Rational(5), Rational(-3)};
    CHECK(node_content({1, 1, 1}, u) == 5);
    CHECK(node_content({2, 1, 2}, u) == -4);
    CHECK(node_content({1, 3, 2}, u) == -1);
  }

  TEST_CASE("standard tableaux match the peeling recursion") {
    for (int r = 1; r <= 3; ++r)
      for (int m = 0; m <= 5; ++m)
        for (const auto& lambda : multipartitions_of(r, m)) {
          const auto tabs = standard_tableaux(lambda);
          CHECK(static_cast<long>(tabs.size()) == standard_count_oracle(lambda));
          CHECK(count_standard(lambda) == standard_count_oracle(lambda));
          for (const auto& t : tabs) CHECK(is_standard(t));
        }
  }

  TEST_CASE("updown counts: closed form, enumeration and walk recursion") {
    for (int r = 1; r <= 3; ++r)
      for (int n = 0; n <= 5; ++n) {
        const auto walks = walk_counts(r, n);
        BigInt sum_sq = 0;
        for (const auto& lambda : updown_shapes(r, n)) {
          const BigInt f = count_updown(n, lambda);
          CHECK(f == walks.at(lambda));
          if (r * n <= 10) CHECK(BigInt(enumerate_updown(n, lambda).size()) == f);
          sum_sq += f * f;
        }
        CHECK(walks.size() == updown_shapes(r, n).size());
        CHECK(sum_sq == ipow(BigInt(r), n) * odd_double_factorial(n));
      }
  }

  TEST_CASE("enumeration is valid, distinct and sorted by contents") {
    const int r = 2, n = 4;
    const auto u = default_u(r, n);
    for (const auto& lambda : updown_shapes(r, n)) {
      const auto all = enumerate_updown(n, lambda);
      std::set<UpDownTableau> seen(all.begin(), all.end());
      CHECK(seen.size() == all.size());
      for (size_t i = 0; i < all.size(); ++i) {
        CHECK(is_valid_updown(all[i]));
        CHECK(all[i].shape() == lambda);
        if (i > 0) CHECK(content_sequence(all[i - 1], u) < content_sequence(all[i], u));
      }
    }
    CHECK_THROWS_AS(enumerate_updown(3, Multipartition::parse("2|")), std::domain_error);
  }

  TEST_CASE("contents of updown steps") {
    const std::vector<Rational> u{Rational(10)};
    UpDownTableau t{1, {Multipartition::parse("1"), Multipartition::parse("2"), Multipartition::parse("1")}};
    CHECK(content(t, 1, u) == 10);
    CHECK(content(t, 2, u) == 11);
    CHECK(content(t, 3, u) == -11);
  }

  TEST_CASE("default parameters are generic and in the real regime") {
    for (int r = 1; r <= 4; ++r)
      for (int n = 1; n <= 6; ++n) {
        const auto u = default_u(r, n);
        CHECK(u.size() == static_cast<size_t>(r));
        CHECK(is_w_generic(u, n));
        CHECK_FALSE(real_regime_violation(u, n).has_value());
      }
    CHECK_FALSE(is_w_generic({Rational(1), Rational(1)}, 2));
    CHECK(real_regime_violation({Rational(1), Rational(1)}, 2).has_value());
  }

  TEST_CASE("tableau permutation relates the top tableau to t") {
    for (const auto& lambda : multipartitions_of(2, 4)) {
      std::map<Node, int> top;
      for (auto [node, k] : tableau_entries(top_tableau(lambda))) top[node] = k;
      for (const auto& t : standard_tableaux(lambda)) {
        const Perm d = tableau_perm(t);
        CHECK(perm_is_valid(d));
        for (auto [node, k] : tableau_entries(t)) CHECK(d[top.at(node) - 1] == k);
      }
      CHECK(perm_is_identity(tableau_perm(top_tableau(lambda))));
    }
  }

  TEST_CASE("row stabilizer order") {
    for (const auto& lambda : multipartitions_of(2, 4)) {
      BigInt expected = 1;
      for (const auto& p : lambda.comps)
        for (int part : p) expected *= factorial(part);
      CHECK(BigInt(row_stabilizer(lambda).size()) == expected);
    }
  }

  TEST_CASE("dominance") {
    CHECK(dominates(Multipartition::parse("2|"), Multipartition::parse("1,1|")));
    CHECK(dominates(Multipartition::parse("1,1|"), Multipartition::parse("1|1")));
    CHECK_FALSE(dominates(Multipartition::parse("|2"), Multipartition::parse("1|1")));
    for (const auto& a : multipartitions_of(2, 3)) {
      CHECK(dominates(a, a));
      for (const auto& b : multipartitions_of(2, 3))
        if (a != b && dominates(a, b)) CHECK_FALSE(dominates(b, a));
    }
    const auto top = top_tableau(Multipartition::parse("2,1|1"));
    for (const auto& t : standard_tableaux(Multipartition::parse("2,1|1"))) CHECK(tableau_dominates(top, t));
  }

  TEST_CASE("the operators ~k and S_k") {
    const int r = 2, n = 4;
    for (const auto& lambda : updown_shapes(r, n))
      for (const auto& t : enumerate_updown(n, lambda)) {
        CHECK(k_neighbors(t, n) == std::vector<UpDownTableau>{t});
        for (int k = 1; k < n; ++k) {
          auto nb = k_neighbors(t, k);
          CHECK(std::find(nb.begin(), nb.end(), t) != nb.end());
          for (const auto& s : nb) CHECK(is_valid_updown(s));
          if (t.at(k - 1) == t.at(k + 1)) {
            CHECK_THROWS_AS(sk_action(t, k), std::domain_error);
          } else {
            CHECK(nb.size() <= 2);
            auto s = sk_action(t, k);
            if (s) {
              CHECK(*s != t);
              CHECK(sk_action(*s, k) == t);
              CHECK(content(*s, k, default_u(r, n)) == content(t, k + 1, default_u(r, n)));
            }
          }
        }
      }
  }

  TEST_CASE("coset representatives form a transversal") {
    for (int n = 0; n <= 6; ++n)
      for (int f = 0; 2 * f <= n; ++f) {
        const auto reps = coset_reps(n, f);
        const BigInt expected = factorial(n) / (factorial(n - 2 * f) * ipow(BigInt(2), f) * factorial(f));
        CHECK(BigInt(reps.size()) == expected);
        // the coset of d is determined by the values on the free block and the set of pairs
        const int a = n - 2 * f;
        std::set<std::pair<std::vector<int>, std::set<std::pair<int, int>>>> invariants;
        for (const Perm& d : reps) {
          std::vector<int> free(d.begin(), d.begin() + a);
          std::sort(free.begin(), free.end());
          std::set<std::pair<int, int>> pairs;
          for (int i = 0; i < f; ++i) {
            int x = d[a + 2 * i], y = d[a + 2 * i + 1];
            pairs.emplace(std::min(x, y), std::max(x, y));
          }
          invariants.emplace(free, pairs);
        }
        CHECK(invariants.size() == reps.size());
      }
  }
}
