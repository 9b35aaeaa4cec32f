#include "nw/diagrams.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nw {

BrauerDiagram::BrauerDiagram(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative diagram size");
  if (static_cast<int>(edges.size()) != n) throw std::invalid_argument("diagram needs exactly n edges");
  mate_.assign(2 * n + 1, 0);
  for (auto [v, w] : edges) {
    if (v < 1 || v > 2 * n || w < 1 || w > 2 * n || v == w)
      throw std::invalid_argument("diagram vertex out of range");
    if (mate_[v] != 0 || mate_[w] != 0) throw std::invalid_argument("vertex on two edges");
    mate_[v] = w;
    mate_[w] = v;
  }
}

BrauerDiagram BrauerDiagram::from_mates(int n, std::vector<int> mates) {
  if (static_cast<int>(mates.size()) != 2 * n + 1) throw std::invalid_argument("mate array size");
  for (int v = 1; v <= 2 * n; ++v) {
    int w = mates[v];
    if (w < 1 || w > 2 * n || w == v || mates[w] != v) throw std::invalid_argument("mate array is not a matching");
  }
  BrauerDiagram d;
  d.n_ = n;
  d.mate_ = std::move(mates);
  return d;
}

BrauerDiagram BrauerDiagram::identity(int n) { return permutation_diagram(perm_identity(n)); }

BrauerDiagram BrauerDiagram::e(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("E index out of range");
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k <= n; ++k)
    if (k != i && k != i + 1) edges.emplace_back(k, n + k);
  edges.emplace_back(i, i + 1);
  edges.emplace_back(n + i, n + i + 1);
  return BrauerDiagram(n, edges);
}

BrauerDiagram BrauerDiagram::s(int i, int n) { return permutation_diagram(perm_simple(i, n)); }

std::vector<std::pair<int, int>> BrauerDiagram::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= 2 * n_; ++v)
    if (v < mate_[v]) out.emplace_back(v, mate_[v]);
  return out;
}

int BrauerDiagram::arc_count() const {
  int f = 0;
  for (int v = 1; v <= n_; ++v)
    if (mate_[v] <= n_ && v < mate_[v]) ++f;
  return f;
}

std::vector<std::pair<int, int>> BrauerDiagram::top_arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= n_; ++v)
    if (mate_[v] <= n_ && v < mate_[v]) out.emplace_back(v, mate_[v]);
  return out;
}

std::vector<std::pair<int, int>> BrauerDiagram::bottom_arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int v = n_ + 1; v <= 2 * n_; ++v)
    if (mate_[v] > n_ && v < mate_[v]) out.emplace_back(v - n_, mate_[v] - n_);
  return out;
}

std::strong_ordering BrauerDiagram::operator<=>(const BrauerDiagram& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  return edges() <=> o.edges();
}

std::string BrauerDiagram::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [v, w] : edges()) {
    if (!first) os << ",";
    first = false;
    auto name = [&](int x) { return x <= n_ ? std::to_string(x) : std::to_string(x - n_) + "'"; };
    os << "{" << name(v) << "," << name(w) << "}";
  }
  os << "}";
  return os.str();
}

nlohmann::json BrauerDiagram::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (auto [v, w] : edges()) j.push_back({v, w});
  return j;
}

BrauerDiagram BrauerDiagram::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("diagram JSON must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("diagram edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return BrauerDiagram(static_cast<int>(edges.size()), edges);
}

Composition compose(const BrauerDiagram& g, const BrauerDiagram& h) {
  if (g.n() != h.n()) throw std::invalid_argument("compose: diagram size mismatch");
  const int n = g.n();
  std::vector<bool> visited(n + 1, false);
  std::vector<int> mates(2 * n + 1, 0);

  // Follows a strand through the middle row until it exits at the top of g
  // (result vertex 1..n) or the bottom of h (result vertex n+1..2n).
  auto walk = [&](int v) {
    bool in_g = v <= n;
    int x = in_g ? g.mate(v) : h.mate(v);
    while (true) {
      if (in_g) {
        if (x <= n) return x;
        int m = x - n;
        visited[m] = true;
        x = h.mate(m);
        in_g = false;
      } else {
        if (x > n) return x;
        int m = x;
        visited[m] = true;
        x = g.mate(n + m);
        in_g = true;
      }
    }
  };

  for (int v = 1; v <= 2 * n; ++v) {
    if (mates[v] != 0) continue;
    int w = walk(v);
    mates[v] = w;
    mates[w] = v;
  }

  int loops = 0;
  for (int m = 1; m <= n; ++m) {
    if (visited[m]) continue;
    ++loops;
    int cur = m;
    do {
      visited[cur] = true;
      int below = g.mate(n + cur) - n;  // stays in the middle row
      visited[below] = true;
      cur = h.mate(below);
    } while (cur != m);
  }
  return {BrauerDiagram::from_mates(n, std::move(mates)), loops};
}

namespace {

void enumerate_rec(int n, std::vector<int>& mates, std::vector<BrauerDiagram>& out) {
  int v = 1;
  while (v <= 2 * n && mates[v] != 0) ++v;
  if (v > 2 * n) {
    out.push_back(BrauerDiagram::from_mates(n, mates));
    return;
  }
  for (int w = v + 1; w <= 2 * n; ++w) {
    if (mates[w] != 0) continue;
    mates[v] = w;
    mates[w] = v;
    enumerate_rec(n, mates, out);
    mates[v] = 0;
    mates[w] = 0;
  }
}

}  // namespace

std::vector<BrauerDiagram> enumerate_diagrams(int n) {
  if (n < 0) throw std::invalid_argument("negative diagram size");
  std::vector<BrauerDiagram> out;
  std::vector<int> mates(2 * n + 1, 0);
  enumerate_rec(n, mates, out);
  return out;
}

BrauerDiagram permutation_diagram(const Perm& w) {
  if (!perm_is_valid(w)) throw std::invalid_argument("not a permutation");
  const int n = static_cast<int>(w.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + w[i - 1]);
  return BrauerDiagram(n, edges);
}

std::string word_to_string(const GeneratorWord& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << " ";
    const Letter& l = w[k];
    switch (l.kind) {
      case Letter::Kind::S: os << "S_" << l.index; break;
      case Letter::Kind::E: os << "E_" << l.index; break;
      case Letter::Kind::X:
        os << "X_" << l.index;
        if (l.pow != 1) os << "^" << l.pow;
        break;
    }
  }
  return os.str();
}

nlohmann::json word_to_json(const GeneratorWord& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const Letter& l : w) {
    switch (l.kind) {
      case Letter::Kind::S: j.push_back({{"S", l.index}}); break;
      case Letter::Kind::E: j.push_back({{"E", l.index}}); break;
      case Letter::Kind::X: j.push_back({{"X", l.index}, {"pow", l.pow}}); break;
    }
  }
  return j;
}

GeneratorWord word_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("word JSON must be an array");
  GeneratorWord w;
  for (const auto& l : j) {
    if (l.contains("S")) w.push_back(S_(l["S"].get<int>()));
    else if (l.contains("E")) w.push_back(E_(l["E"].get<int>()));
    else if (l.contains("X")) w.push_back(X_(l["X"].get<int>(), l.value("pow", 1)));
    else throw std::invalid_argument("unknown letter in word JSON");
  }
  return w;
}

void validate_word(const GeneratorWord& w, int n) {
  for (const Letter& l : w) {
    if (l.kind == Letter::Kind::X) {
      if (l.index < 1 || l.index > n) throw std::invalid_argument("X index out of range");
      if (l.pow < 1) throw std::invalid_argument("X exponent must be positive");
    } else if (l.index < 1 || l.index >= n) {
      throw std::invalid_argument("S/E index out of range");
    }
  }
}

GeneratorWord word_star(const GeneratorWord& w) { return GeneratorWord(w.rbegin(), w.rend()); }

GeneratorWord word_for_perm(const Perm& w) {
  GeneratorWord out;
  for (int i : reduced_word(w)) out.push_back(S_(i));
  return out;
}

Composition evaluate_word_diagram(const GeneratorWord& w, int n) {
  validate_word(w, n);
  Composition acc{BrauerDiagram::identity(n), 0};
  for (const Letter& l : w) {
    if (l.kind == Letter::Kind::X) throw std::invalid_argument("X letters have no diagram");
    BrauerDiagram g = l.kind == Letter::Kind::S ? BrauerDiagram::s(l.index, n) : BrauerDiagram::e(l.index, n);
    Composition c = compose(acc.diagram, g);
    acc = {c.diagram, acc.loops + c.loops};
  }
  return acc;
}

namespace {

constexpr int kShortlexMax = 6;

const std::map<std::vector<int>, GeneratorWord>& shortlex_table(int n) {
  static std::mutex mu;
  static std::map<int, std::map<std::vector<int>, GeneratorWord>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<std::pair<Letter, BrauerDiagram>> gens;
  for (int i = 1; i < n; ++i) gens.emplace_back(S_(i), BrauerDiagram::s(i, n));
  for (int i = 1; i < n; ++i) gens.emplace_back(E_(i), BrauerDiagram::e(i, n));

  std::map<std::vector<int>, GeneratorWord> table;
  std::deque<BrauerDiagram> queue;
  BrauerDiagram id = BrauerDiagram::identity(n);
  table[id.mates()] = {};
  queue.push_back(id);
  while (!queue.empty()) {
    BrauerDiagram cur = queue.front();
    queue.pop_front();
    const GeneratorWord base = table[cur.mates()];
    for (const auto& [letter, g] : gens) {
      Composition c = compose(cur, g);
      if (c.loops != 0 || table.count(c.diagram.mates())) continue;
      GeneratorWord w = base;
      w.push_back(letter);
      table[c.diagram.mates()] = std::move(w);
      queue.push_back(c.diagram);
    }
  }
  return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace

GeneratorWord normal_form_word(const BrauerDiagram& g) {
  const int n = g.n();
  auto tops = g.top_arcs();
  auto bottoms = g.bottom_arcs();
  const int f = static_cast<int>(tops.size());

  Perm sigma1(n), sigma2(n);
  for (int k = 0; k < f; ++k) {
    sigma1[tops[k].first - 1] = 2 * k + 1;
    sigma1[tops[k].second - 1] = 2 * k + 2;
    sigma2[2 * k] = bottoms[k].first;
    sigma2[2 * k + 1] = bottoms[k].second;
  }
  int next = 2 * f + 1;
  for (int v = 1; v <= n; ++v) {
    if (g.mate(v) <= n) continue;
    sigma1[v - 1] = next;
    sigma2[next - 1] = g.mate(v) - n;
    ++next;
  }
  GeneratorWord w = word_for_perm(sigma1);
  for (int k = 0; k < f; ++k) w.push_back(E_(2 * k + 1));
  for (const Letter& l : word_for_perm(sigma2)) w.push_back(l);
  return w;
}

GeneratorWord word_for_diagram(const BrauerDiagram& g) {
  if (g.n() <= kShortlexMax) return shortlex_table(g.n()).at(g.mates());
  return normal_form_word(g);
}

WordProduct& WordProduct::times(const GeneratorWord& w) {
  factors.push_back({{Rational(1), w}});
  return *this;
}

WordProduct& WordProduct::times(Factor f) {
  factors.push_back(std::move(f));
  return *this;
}

WordProduct WordProduct::star() const {
  WordProduct out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    Factor f;
    for (const auto& [c, w] : *it) f.emplace_back(c, word_star(w));
    out.factors.push_back(std::move(f));
  }
  return out;
}

std::size_t WordProduct::expanded_size() const {
  std::size_t s = 1;
  for (const auto& f : factors) s *= f.size();
  return s;
}

}  // namespace nw
