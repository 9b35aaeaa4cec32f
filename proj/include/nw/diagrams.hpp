#pragma once
// Brauer diagrams on 2n vertices and generator words in S_i, E_i, X_j.
//
// Vertices are encoded 1..n for the top row and n+1..2n for the bottom row,
// so bottom vertex i-bar is n+i.

#include "nw/numeric.hpp"
#include "nw/perm.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace nw {

class BrauerDiagram {
 public:
  BrauerDiagram() = default;
  /// Throws std::invalid_argument unless the edges form a perfect matching.
  BrauerDiagram(int n, const std::vector<std::pair<int, int>>& edges);

  static BrauerDiagram identity(int n);
  /// gamma_i: arcs {i, i+1} on top and bottom, all other edges vertical.
  static BrauerDiagram e(int i, int n);
  /// gamma(i, i+1): the crossing of strands i and i+1.
  static BrauerDiagram s(int i, int n);
  static BrauerDiagram from_mates(int n, std::vector<int> mates);

  int n() const { return n_; }
  int mate(int v) const { return mate_[v]; }
  const std::vector<int>& mates() const { return mate_; }
  /// Edges (v, w) with v < w, sorted by v.
  std::vector<std::pair<int, int>> edges() const;
  /// Number of horizontal edges in the top row (equal to that in the bottom row).
  int arc_count() const;
  /// Top arcs as (left, right) pairs of top indices, sorted by left endpoint.
  std::vector<std::pair<int, int>> top_arcs() const;
  /// Bottom arcs as (left, right) pairs of bottom indices 1..n, sorted.
  std::vector<std::pair<int, int>> bottom_arcs() const;
  bool is_permutation() const { return arc_count() == 0; }

  std::strong_ordering operator<=>(const BrauerDiagram& o) const;
  bool operator==(const BrauerDiagram& o) const { return n_ == o.n_ && mate_ == o.mate_; }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static BrauerDiagram from_json(const nlohmann::json& j);

 private:
  int n_ = 0;
  std::vector<int> mate_{0};  // index 0 unused
};

struct Composition {
  BrauerDiagram diagram;
  int loops = 0;
};

/// Stacks g on top of h, identifying the bottom of g with the top of h.
Composition compose(const BrauerDiagram& g, const BrauerDiagram& h);

/// All (2n-1)!! diagrams, lexicographic on the sorted edge list.
std::vector<BrauerDiagram> enumerate_diagrams(int n);

/// Edges {i, n + (i)w}.
BrauerDiagram permutation_diagram(const Perm& w);

struct Letter {
  enum class Kind { S, E, X };
  Kind kind;
  int index;
  int pow = 1;
  bool operator==(const Letter&) const = default;
};

using GeneratorWord = std::vector<Letter>;

inline Letter S_(int i) { return {Letter::Kind::S, i, 1}; }
inline Letter E_(int i) { return {Letter::Kind::E, i, 1}; }
inline Letter X_(int j, int pow = 1) { return {Letter::Kind::X, j, pow}; }

std::string word_to_string(const GeneratorWord& w);
nlohmann::json word_to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const nlohmann::json& j);
/// Throws std::invalid_argument on an index outside the range for n.
void validate_word(const GeneratorWord& w, int n);
/// Reverses the letters; this is the anti-involution fixing every generator.
GeneratorWord word_star(const GeneratorWord& w);
GeneratorWord word_for_perm(const Perm& w);

/// Multiplies out a word in S_i and E_i in the Brauer monoid.
Composition evaluate_word_diagram(const GeneratorWord& w, int n);

/// A deterministic loop-free word composing to g. For n <= 6 this is the
/// shortlex-least word over S_1 < ... < S_{n-1} < E_1 < ... < E_{n-1}.
GeneratorWord word_for_diagram(const BrauerDiagram& g);
/// Normal form sigma_1 * E_1 E_3 ... E_{2f-1} * sigma_2, valid for every n.
GeneratorWord normal_form_word(const BrauerDiagram& g);

/// A product of linear combinations of words: (sum c w)(sum c w)...
struct WordProduct {
  using Term = std::pair<Rational, GeneratorWord>;
  using Factor = std::vector<Term>;
  std::vector<Factor> factors;

  WordProduct& times(const GeneratorWord& w);
  WordProduct& times(Factor f);
  WordProduct star() const;
  /// Number of words after full expansion.
  std::size_t expanded_size() const;
};

}  // namespace nw
