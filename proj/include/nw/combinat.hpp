#pragma once
// Multipartitions, nodes and contents, updown tableaux, the tableau
// operators t ~k s and S_k t, dominance, and coset representatives.

#include "nw/numeric.hpp"
#include "nw/perm.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nw {

using Partition = std::vector<int>;

struct Multipartition {
  std::vector<Partition> comps;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> c);
  static Multipartition empty(int r);

  int r() const { return static_cast<int>(comps.size()); }
  int size() const;
  /// Row length, 0 beyond the last row. Rows and components are 1-based.
  int row(int comp, int i) const;
  int col_height(int comp, int j) const;

  auto operator<=>(const Multipartition&) const = default;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static Multipartition from_json(const nlohmann::json& j);
  /// Parses "2,1|1|" style text: components separated by '|', parts by ','.
  static Multipartition parse(const std::string& text);
};

struct Node {
  int row;
  int col;
  int comp;
  auto operator<=>(const Node&) const = default;
};

enum class NodeKind { Addable, Removable };

struct CornerNode {
  Node node;
  Rational content;
  NodeKind kind;
};

/// u_comp + col - row.
Rational node_content(const Node& a, const std::vector<Rational>& u);

/// All addable nodes, then all removable nodes. A removable node carries
/// the negated content.
std::vector<CornerNode> addable_removable(const Multipartition& lambda, const std::vector<Rational>& u);

Multipartition add_node(const Multipartition& lambda, const Node& a);
Multipartition remove_node(const Multipartition& lambda, const Node& a);
bool is_partition_shape(const Multipartition& lambda);

/// A walk t_1..t_n in the multipartition lattice, with t_0 the empty multipartition.
struct UpDownTableau {
  int r = 1;
  std::vector<Multipartition> steps;

  int n() const { return static_cast<int>(steps.size()); }
  /// t_k for 0 <= k <= n.
  Multipartition at(int k) const;
  const Multipartition& shape() const { return steps.back(); }

  auto operator<=>(const UpDownTableau&) const = default;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

struct StepChange {
  Node node;
  bool added;
};

/// The node t_k (-) t_{k-1} and whether it was added.
StepChange step_change(const UpDownTableau& t, int k);
Rational content(const UpDownTableau& t, int k, const std::vector<Rational>& u);
std::vector<Rational> content_sequence(const UpDownTableau& t, const std::vector<Rational>& u);
bool is_valid_updown(const UpDownTableau& t);

/// u_t = (-1)^(t+1) (n + 2n(r - t)), t = 1..r.
std::vector<Rational> default_u(int r, int n);

/// Every updown lambda-tableau of length n, ordered lexicographically by
/// content sequence under default_u(r, n). Throws std::domain_error on a
/// size/parity mismatch.
std::vector<UpDownTableau> enumerate_updown(int n, const Multipartition& lambda);
/// Closed-form count r^m C(n,2m) (2m-1)!! #Std(lambda).
BigInt count_updown(int n, const Multipartition& lambda);
BigInt count_standard(const Multipartition& lambda);

std::vector<Partition> partitions_of(int m);
std::vector<Multipartition> multipartitions_of(int r, int m);
/// All lambda with |lambda| = n - 2f, ordered by f, then by multipartition.
std::vector<Multipartition> updown_shapes(int r, int n);

std::vector<UpDownTableau> standard_tableaux(const Multipartition& lambda);
/// Fills component 1 row by row, then component 2, and so on.
UpDownTableau top_tableau(const Multipartition& lambda);
bool is_standard(const UpDownTableau& t);
/// The entry of each node of a standard tableau (row, col, comp) -> k.
std::vector<std::pair<Node, int>> tableau_entries(const UpDownTableau& t);
/// d(t) with t = t^lambda d(t), i.e. d maps the entry of t^lambda at each node to the entry of t.
Perm tableau_perm(const UpDownTableau& t);
/// Row stabilizer of the top tableau: all w with t^lambda w row-equivalent.
std::vector<Perm> row_stabilizer(const Multipartition& lambda);

/// lambda dominates mu (both of the same size).
bool dominates(const Multipartition& lambda, const Multipartition& mu);
/// s dominates t stepwise.
bool tableau_dominates(const UpDownTableau& s, const UpDownTableau& t);

/// All u with u_j = t_j for every j != k, including t itself, sorted.
std::vector<UpDownTableau> k_neighbors(const UpDownTableau& t, int k);
/// S_k t when t_{k-1} != t_{k+1}; nullopt if the two nodes share a row or
/// column. Throws std::domain_error if t_{k-1} = t_{k+1}.
std::optional<UpDownTableau> sk_action(const UpDownTableau& t, int k);

/// Right coset representatives for S_{n-2f} x B_f in S_n, lexicographic.
std::vector<Perm> coset_reps(int n, int f);

/// Whether u is generic: every integer u_i +- u_j (i != j) or 2u_i has |d| >= 2n.
bool is_w_generic(const std::vector<Rational>& u, int n);
/// Empty if u satisfies the real-regime hypotheses (magnitudes, gaps, signs);
/// otherwise the violated clause.
std::optional<std::string> real_regime_violation(const std::vector<Rational>& u, int n);

}  // namespace nw
