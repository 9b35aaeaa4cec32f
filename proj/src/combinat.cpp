#include "nw/combinat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nw {

Multipartition::Multipartition(std::vector<Partition> c) : comps(std::move(c)) {
  for (auto& p : comps) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0) throw std::invalid_argument("negative part");
      if (i > 0 && p[i] > p[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
  }
}

Multipartition Multipartition::empty(int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  return Multipartition(std::vector<Partition>(r));
}

int Multipartition::size() const {
  int s = 0;
  for (const auto& p : comps)
    for (int x : p) s += x;
  return s;
}

int Multipartition::row(int comp, int i) const {
  const Partition& p = comps[comp - 1];
  return i >= 1 && i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

int Multipartition::col_height(int comp, int j) const {
  int h = 0;
  for (int x : comps[comp - 1])
    if (x >= j) ++h;
  return h;
}

std::string Multipartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t s = 0; s < comps.size(); ++s) {
    if (s) os << "|";
    for (std::size_t i = 0; i < comps[s].size(); ++i) {
      if (i) os << ",";
      os << comps[s][i];
    }
  }
  os << ")";
  return os.str();
}

nlohmann::json Multipartition::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : comps) j.push_back(p);
  return j;
}

Multipartition Multipartition::from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("multipartition JSON must be a nonempty array");
  std::vector<Partition> comps;
  for (const auto& p : j) comps.push_back(p.get<Partition>());
  return Multipartition(comps);
}

Multipartition Multipartition::parse(const std::string& text) {
  std::vector<Partition> comps(1);
  std::string num;
  auto flush = [&]() {
    if (num.empty()) return;
    comps.back().push_back(std::stoi(num));
    num.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num.push_back(c);
    } else if (c == ',') {
      flush();
    } else if (c == '|') {
      flush();
      comps.emplace_back();
    } else if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      throw std::invalid_argument("malformed multipartition: " + text);
    }
  }
  flush();
  return Multipartition(comps);
}

Rational node_content(const Node& a, const std::vector<Rational>& u) {
  return u.at(a.comp - 1) + a.col - a.row;
}

std::vector<CornerNode> addable_removable(const Multipartition& lambda, const std::vector<Rational>& u) {
  if (static_cast<int>(u.size()) != lambda.r()) throw std::invalid_argument("u has the wrong length");
  std::vector<CornerNode> add, rem;
  for (int s = 1; s <= lambda.r(); ++s) {
    const int len = static_cast<int>(lambda.comps[s - 1].size());
    for (int i = 1; i <= len + 1; ++i) {
      if (i == 1 || lambda.row(s, i - 1) > lambda.row(s, i)) {
        Node a{i, lambda.row(s, i) + 1, s};
        add.push_back({a, node_content(a, u), NodeKind::Addable});
      }
    }
    for (int i = 1; i <= len; ++i) {
      if (lambda.row(s, i) > lambda.row(s, i + 1)) {
        Node a{i, lambda.row(s, i), s};
        rem.push_back({a, -node_content(a, u), NodeKind::Removable});
      }
    }
  }
  add.insert(add.end(), rem.begin(), rem.end());
  return add;
}

bool is_partition_shape(const Multipartition& lambda) {
  for (const auto& p : lambda.comps)
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] < 0 || (i > 0 && p[i] > p[i - 1])) return false;
  return true;
}

Multipartition add_node(const Multipartition& lambda, const Node& a) {
  Multipartition mu = lambda;
  Partition& p = mu.comps.at(a.comp - 1);
  if (a.row == static_cast<int>(p.size()) + 1) p.push_back(0);
  if (a.row < 1 || a.row > static_cast<int>(p.size()) || p[a.row - 1] + 1 != a.col)
    throw std::invalid_argument("node is not addable");
  p[a.row - 1] += 1;
  if (!is_partition_shape(mu)) throw std::invalid_argument("node is not addable");
  return mu;
}

Multipartition remove_node(const Multipartition& lambda, const Node& a) {
  Multipartition mu = lambda;
  Partition& p = mu.comps.at(a.comp - 1);
  if (a.row < 1 || a.row > static_cast<int>(p.size()) || p[a.row - 1] != a.col)
    throw std::invalid_argument("node is not removable");
  p[a.row - 1] -= 1;
  if (!is_partition_shape(mu)) throw std::invalid_argument("node is not removable");
  while (!p.empty() && p.back() == 0) p.pop_back();
  return mu;
}

Multipartition UpDownTableau::at(int k) const {
  if (k == 0) return Multipartition::empty(r);
  return steps.at(k - 1);
}

std::string UpDownTableau::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (k) os << " ";
    os << steps[k].to_string();
  }
  os << "]";
  return os.str();
}

nlohmann::json UpDownTableau::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& m : steps) j.push_back(m.to_json());
  return j;
}

namespace {

int distance(const Multipartition& a, const Multipartition& b) {
  int d = 0;
  for (int s = 1; s <= a.r(); ++s) {
    int rows = std::max(a.comps[s - 1].size(), b.comps[s - 1].size());
    for (int i = 1; i <= rows; ++i) d += std::abs(a.row(s, i) - b.row(s, i));
  }
  return d;
}

}  // namespace

StepChange step_change(const UpDownTableau& t, int k) {
  Multipartition prev = t.at(k - 1);
  const Multipartition& cur = t.at(k);
  for (int s = 1; s <= t.r; ++s) {
    int rows = std::max(prev.comps[s - 1].size(), cur.comps[s - 1].size());
    for (int i = 1; i <= rows; ++i) {
      int a = prev.row(s, i), b = cur.row(s, i);
      if (a == b) continue;
      if (b == a + 1) return {{i, b, s}, true};
      if (b == a - 1) return {{i, a, s}, false};
    }
  }
  throw std::invalid_argument("consecutive steps do not differ by one node");
}

Rational content(const UpDownTableau& t, int k, const std::vector<Rational>& u) {
  StepChange c = step_change(t, k);
  Rational x = node_content(c.node, u);
  return c.added ? x : Rational(-x);
}

std::vector<Rational> content_sequence(const UpDownTableau& t, const std::vector<Rational>& u) {
  std::vector<Rational> out;
  for (int k = 1; k <= t.n(); ++k) out.push_back(content(t, k, u));
  return out;
}

bool is_valid_updown(const UpDownTableau& t) {
  for (int k = 1; k <= t.n(); ++k) {
    const Multipartition& m = t.steps[k - 1];
    if (m.r() != t.r || !is_partition_shape(m)) return false;
    if (distance(t.at(k - 1), m) != 1) return false;
  }
  return true;
}

std::vector<Rational> default_u(int r, int n) {
  std::vector<Rational> u;
  for (int t = 1; t <= r; ++t) u.push_back(Rational(sign_pow(t + 1) * (n + 2 * n * (r - t))));
  return u;
}

namespace {

void updown_rec(int n, const Multipartition& target, UpDownTableau& cur, std::vector<UpDownTableau>& out) {
  const int k = cur.n();
  const Multipartition here = cur.at(k);
  if (k == n) {
    if (here == target) out.push_back(cur);
    return;
  }
  std::vector<Rational> zero(cur.r, Rational(0));
  for (const CornerNode& c : addable_removable(here, zero)) {
    Multipartition next = c.kind == NodeKind::Addable ? add_node(here, c.node) : remove_node(here, c.node);
    int d = distance(next, target);
    int left = n - k - 1;
    if (d > left || (left - d) % 2 != 0) continue;
    cur.steps.push_back(next);
    updown_rec(n, target, cur, out);
    cur.steps.pop_back();
  }
}

void check_updown_shape(int n, const Multipartition& lambda) {
  if (n < 0) throw std::domain_error("negative length");
  const int s = lambda.size();
  if (s > n || (n - s) % 2 != 0) throw std::domain_error("shape size and length have different parity or shape too large");
}

}  // namespace

std::vector<UpDownTableau> enumerate_updown(int n, const Multipartition& lambda) {
  check_updown_shape(n, lambda);
  UpDownTableau cur{lambda.r(), {}};
  std::vector<UpDownTableau> out;
  updown_rec(n, lambda, cur, out);
  const auto u = default_u(lambda.r(), n);
  std::vector<std::pair<std::vector<Rational>, UpDownTableau>> keyed;
  for (auto& t : out) keyed.emplace_back(content_sequence(t, u), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [key, t] : keyed) out.push_back(std::move(t));
  return out;
}

BigInt count_standard(const Multipartition& lambda) {
  BigInt hooks = 1;
  for (int s = 1; s <= lambda.r(); ++s) {
    const Partition& p = lambda.comps[s - 1];
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
      for (int j = 1; j <= p[i - 1]; ++j) hooks *= (p[i - 1] - j) + (lambda.col_height(s, j) - i) + 1;
  }
  return factorial(lambda.size()) / hooks;
}

BigInt count_updown(int n, const Multipartition& lambda) {
  check_updown_shape(n, lambda);
  const int m = (n - lambda.size()) / 2;
  return ipow(BigInt(lambda.r()), m) * binomial(n, 2 * m) * odd_double_factorial(m) * count_standard(lambda);
}

namespace {

void partitions_rec(int m, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(m, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(m - p, p, cur, out);
    cur.pop_back();
  }
}

void multi_rec(int r, int m, std::vector<Partition>& cur, std::vector<Multipartition>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    for (const auto& p : partitions_of(m)) {
      cur.push_back(p);
      out.emplace_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int k = m; k >= 0; --k) {
    for (const auto& p : partitions_of(k)) {
      cur.push_back(p);
      multi_rec(r, m - k, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(m, m, cur, out);
  return out;
}

std::vector<Multipartition> multipartitions_of(int r, int m) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  multi_rec(r, m, cur, out);
  return out;
}

std::vector<Multipartition> updown_shapes(int r, int n) {
  std::vector<Multipartition> out;
  for (int f = 0; 2 * f <= n; ++f)
    for (auto& m : multipartitions_of(r, n - 2 * f)) out.push_back(std::move(m));
  return out;
}

std::vector<UpDownTableau> standard_tableaux(const Multipartition& lambda) {
  return enumerate_updown(lambda.size(), lambda);
}

UpDownTableau top_tableau(const Multipartition& lambda) {
  UpDownTableau t{lambda.r(), {}};
  Multipartition cur = Multipartition::empty(lambda.r());
  for (int s = 1; s <= lambda.r(); ++s) {
    const Partition& p = lambda.comps[s - 1];
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
      for (int j = 1; j <= p[i - 1]; ++j) {
        cur = add_node(cur, {i, j, s});
        t.steps.push_back(cur);
      }
  }
  return t;
}

bool is_standard(const UpDownTableau& t) {
  for (int k = 1; k <= t.n(); ++k)
    if (t.at(k).size() != k) return false;
  return true;
}

std::vector<std::pair<Node, int>> tableau_entries(const UpDownTableau& t) {
  if (!is_standard(t)) throw std::invalid_argument("tableau is not standard");
  std::vector<std::pair<Node, int>> out;
  for (int k = 1; k <= t.n(); ++k) out.emplace_back(step_change(t, k).node, k);
  return out;
}

Perm tableau_perm(const UpDownTableau& t) {
  std::map<Node, int> top;
  for (auto [node, k] : tableau_entries(top_tableau(t.shape()))) top[node] = k;
  Perm d(t.n());
  for (auto [node, k] : tableau_entries(t)) d[top.at(node) - 1] = k;
  return d;
}

std::vector<Perm> row_stabilizer(const Multipartition& lambda) {
  const int n = lambda.size();
  std::vector<int> block(n + 1);
  int entry = 1, b = 0;
  for (const auto& p : lambda.comps)
    for (int len : p) {
      for (int j = 0; j < len; ++j) block[entry++] = b;
      ++b;
    }
  std::vector<Perm> out;
  for (const Perm& w : all_perms(n)) {
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j) ok = block[w[j - 1]] == block[j];
    if (ok) out.push_back(w);
  }
  return out;
}

bool dominates(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda.r() != mu.r()) throw std::invalid_argument("dominance: different r");
  int before_l = 0, before_m = 0;
  for (int s = 1; s <= lambda.r(); ++s) {
    int rows = std::max(lambda.comps[s - 1].size(), mu.comps[s - 1].size());
    int acc_l = before_l, acc_m = before_m;
    for (int k = 1; k <= rows; ++k) {
      acc_l += lambda.row(s, k);
      acc_m += mu.row(s, k);
      if (acc_l < acc_m) return false;
    }
    if (acc_l < acc_m) return false;
    before_l = acc_l;
    before_m = acc_m;
  }
  return true;
}

bool tableau_dominates(const UpDownTableau& s, const UpDownTableau& t) {
  if (s.n() != t.n()) throw std::invalid_argument("dominance: different lengths");
  for (int k = 1; k <= s.n(); ++k)
    if (!dominates(s.at(k), t.at(k))) return false;
  return true;
}

std::vector<UpDownTableau> k_neighbors(const UpDownTableau& t, int k) {
  if (k < 1 || k > t.n()) throw std::invalid_argument("k out of range");
  if (k == t.n()) return {t};
  const Multipartition prev = t.at(k - 1);
  const Multipartition& next = t.at(k + 1);
  std::vector<Rational> zero(t.r, Rational(0));
  std::vector<UpDownTableau> out;
  for (const CornerNode& c : addable_removable(prev, zero)) {
    Multipartition mid = c.kind == NodeKind::Addable ? add_node(prev, c.node) : remove_node(prev, c.node);
    if (distance(mid, next) != 1) continue;
    UpDownTableau u = t;
    u.steps[k - 1] = mid;
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<UpDownTableau> sk_action(const UpDownTableau& t, int k) {
  if (k < 1 || k >= t.n()) throw std::invalid_argument("k out of range");
  if (t.at(k - 1) == t.at(k + 1)) throw std::domain_error("S_k t requires t_{k-1} != t_{k+1}");
  StepChange alpha = step_change(t, k), beta = step_change(t, k + 1);
  if (alpha.node.comp == beta.node.comp && (alpha.node.row == beta.node.row || alpha.node.col == beta.node.col))
    return std::nullopt;
  const Multipartition prev = t.at(k - 1);
  Multipartition mid = beta.added ? add_node(prev, beta.node) : remove_node(prev, beta.node);
  UpDownTableau u = t;
  u.steps[k - 1] = mid;
  if (!is_valid_updown(u)) throw std::logic_error("S_k t produced an invalid tableau");
  return u;
}

std::vector<Perm> coset_reps(int n, int f) {
  if (f < 0 || 2 * f > n) throw std::invalid_argument("arc count out of range");
  const int a = n - 2 * f;
  std::vector<Perm> out;
  for (const Perm& d : all_perms(n)) {
    bool ok = true;
    for (int j = 1; j < a && ok; ++j) ok = d[j - 1] < d[j];
    for (int i = 0; i < f && ok; ++i) ok = d[a + 2 * i] < d[a + 2 * i + 1];
    for (int i = 0; i + 1 < f && ok; ++i) ok = d[a + 2 * i] < d[a + 2 * i + 2];
    if (ok) out.push_back(d);
  }
  return out;
}

bool is_w_generic(const std::vector<Rational>& u, int n) {
  auto bad = [&](const Rational& x) {
    return denominator(x) == 1 && abs(x) < 2 * n;
  };
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (bad(2 * u[i])) return false;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (i == j) continue;
      if (bad(u[i] + u[j]) || bad(u[i] - u[j])) return false;
    }
  }
  return true;
}

std::optional<std::string> real_regime_violation(const std::vector<Rational>& u, int n) {
  const std::size_t r = u.size();
  for (std::size_t i = 0; i < r; ++i) {
    const bool odd = (i % 2 == 0);  // 1-based index i+1
    if (odd && u[i] <= 0) return "u_" + std::to_string(i + 1) + " must be positive";
    if (!odd && u[i] >= 0) return "u_" + std::to_string(i + 1) + " must be negative";
  }
  if (abs(u[r - 1]) < n) return "|u_r| must be at least n";
  for (std::size_t i = 0; i + 1 < r; ++i)
    if (abs(u[i]) - abs(u[i + 1]) < 2 * n)
      return "|u_" + std::to_string(i + 1) + "| - |u_" + std::to_string(i + 2) + "| must be at least 2n";
  return std::nullopt;
}

}  // namespace nw
