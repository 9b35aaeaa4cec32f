#include "nw/params.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nw {

// ---- Poly ----

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
Poly::Poly(const Rational& c) : c_{c} { trim(); }
Poly Poly::y() { return Poly(std::vector<Rational>{0, 1}); }
Poly Poly::linear(const Rational& c) { return Poly(std::vector<Rational>{-c, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : Rational(0); }

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<int>(i));
  return Poly(d);
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(r);
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x = -x;
  return Poly(r);
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(r);
}

Poly Poly::scaled(const Rational& c) const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= c;
  return Poly(r);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  for (int d = a.degree(); d >= db; --d) {
    Rational f = rem[d] / b.lead();
    q[d - db] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.c_[i];
  }
  return {Poly(q), Poly(rem)};
}

Poly Poly::monic() const { return is_zero() ? *this : scaled(Rational(1) / lead()); }

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    if (c_[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[d] << ")";
    if (d >= 1) os << "*y";
    if (d >= 2) os << "^" << d;
  }
  return os.str();
}

// ---- RationalFunction ----

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num, den);
  num = Poly::divmod(num, g).first;
  den = Poly::divmod(den, g).first;
  Rational l = den.lead();
  num_ = num.scaled(Rational(1) / l);
  den_ = den.scaled(Rational(1) / l);
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_.eval(x) / d;
}

Rational RationalFunction::residue_simple(const Rational& c) const {
  if (den_.eval(c) != 0) return 0;
  Rational dd = den_.derivative().eval(c);
  if (dd == 0) throw std::domain_error("pole is not simple");
  return num_.eval(c) / dd;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}
RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunction::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

// ---- TruncatedSeries ----

TruncatedSeries::TruncatedSeries(int valuation, std::vector<Rational> coeffs, int order)
    : val_(valuation), order_(order), c_(std::move(coeffs)) {
  if (order_ < val_) order_ = val_;
  c_.resize(order_ - val_);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) { return TruncatedSeries(0, {c}, order); }

TruncatedSeries TruncatedSeries::y(int order) { return TruncatedSeries(-1, {Rational(1)}, order); }

Rational TruncatedSeries::coeff(int a) const {
  if (a < val_) return 0;
  if (a >= order_) throw std::out_of_range("series coefficient beyond known order");
  return c_[a - val_];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  int v = std::min(val_, o.val_), ord = std::min(order_, o.order_);
  std::vector<Rational> c(std::max(ord - v, 0));
  for (int a = v; a < ord; ++a) c[a - v] = coeff(a) + o.coeff(a);
  return TruncatedSeries(v, c, ord);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + o.scaled(Rational(-1)); }

TruncatedSeries TruncatedSeries::scaled(const Rational& k) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= k;
  return TruncatedSeries(val_, c, order_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  int v = val_ + o.val_;
  int ord = std::min(order_ + o.val_, o.order_ + val_);
  std::vector<Rational> c(std::max(ord - v, 0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size() && static_cast<int>(i + j) < ord - v; ++j)
      c[i + j] += c_[i] * o.c_[j];
  }
  return TruncatedSeries(v, c, ord);
}

TruncatedSeries TruncatedSeries::inverse() const {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) throw std::domain_error("series is not invertible to the known order");
  const int v = val_ + static_cast<int>(lead);
  const int rel = order_ - v;  // relative precision
  std::vector<Rational> a(c_.begin() + lead, c_.end());
  std::vector<Rational> b(rel);
  b[0] = Rational(1) / a[0];
  for (int k = 1; k < rel; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += a[j] * b[k - j];
    b[k] = -s * b[0];
  }
  return TruncatedSeries(-v, b, -v + rel);
}

TruncatedSeries TruncatedSeries::negate_variable() const {
  std::vector<Rational> c = c_;
  for (std::size_t i = 0; i < c.size(); ++i)
    if ((val_ + static_cast<int>(i)) % 2 != 0) c[i] = -c[i];
  return TruncatedSeries(val_, c, order_);
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& o, int limit) const {
  int hi = std::min({order_, o.order_, limit});
  for (int a = std::min(val_, o.val_); a < hi; ++a)
    if (coeff(a) != o.coeff(a)) return false;
  return true;
}

TruncatedSeries TruncatedSeries::from_rational(const RationalFunction& f, int order) {
  const int dn = f.num().degree(), dd = f.den().degree();
  if (dn < 0) return TruncatedSeries(0, {}, order);
  const int slack = order + 2 * (dn + dd) + 4;
  auto poly_series = [&](const Poly& p) {
    std::vector<Rational> c;
    for (int i = p.degree(); i >= 0; --i) c.push_back(p.coeff(i));
    return TruncatedSeries(-p.degree(), c, slack);
  };
  TruncatedSeries s = poly_series(f.num()) * poly_series(f.den()).inverse();
  std::vector<Rational> c;
  for (int a = s.val_; a < order; ++a) c.push_back(s.coeff(a));
  return TruncatedSeries(s.val_, c, order);
}

// ---- ParamSet ----

const Rational& ParamSet::omega_at(int a) const {
  if (a < 0 || a >= static_cast<int>(omega.size())) throw std::out_of_range("omega index beyond truncation");
  return omega[a];
}

ParamSet ParamSet::from_u(std::vector<Rational> u, int N, unsigned precision_bits) {
  if (u.empty()) throw std::invalid_argument("u must be nonempty");
  if (N < 1) throw std::invalid_argument("truncation must be at least 1");
  ParamSet ps;
  ps.r = static_cast<int>(u.size());
  ps.u = std::move(u);
  for (int a = 0; a <= N; ++a) ps.omega.push_back(omega_from_u(ps.u, a));
  ps.mode = OmegaMode::Derived;
  ps.precision_bits = precision_bits;
  return ps;
}

ParamSet ParamSet::user_supplied(std::vector<Rational> u, std::vector<Rational> omega, unsigned precision_bits) {
  if (u.empty()) throw std::invalid_argument("u must be nonempty");
  if (omega.empty()) throw std::invalid_argument("omega must be nonempty");
  ParamSet ps;
  ps.r = static_cast<int>(u.size());
  ps.u = std::move(u);
  ps.omega = std::move(omega);
  ps.mode = OmegaMode::UserSupplied;
  ps.precision_bits = precision_bits;
  return ps;
}

nlohmann::json ParamSet::to_json() const {
  nlohmann::json j;
  j["r"] = r;
  j["u"] = nlohmann::json::array();
  for (const auto& x : u) j["u"].push_back(to_string(x));
  j["N"] = truncation();
  j["omega"] = nlohmann::json::array();
  for (const auto& x : omega) j["omega"].push_back(to_string(x));
  j["mode"] = mode == OmegaMode::Derived ? "u-admissible-derived" : "user-supplied";
  j["precision_bits"] = precision_bits;
  return j;
}

int default_truncation(int r, int n) { return 2 * r + 4 * n; }

Rational schur_q(int a, const std::vector<Rational>& x) {
  if (a < 0) throw std::invalid_argument("negative degree");
  std::vector<Rational> e(a + 1), h(a + 1);
  e[0] = 1;
  h[0] = 1;
  for (const Rational& xi : x) {
    for (int k = a; k >= 1; --k) e[k] += xi * e[k - 1];
    for (int k = 1; k <= a; ++k) h[k] += xi * h[k - 1];
  }
  Rational q = 0;
  for (int k = 0; k <= a; ++k) q += e[k] * h[a - k];
  return q;
}

Rational omega_from_u(const std::vector<Rational>& u, int a) {
  const int r = static_cast<int>(u.size());
  Rational w = schur_q(a + 1, u) - Rational(sign_pow(r), 2) * schur_q(a, u);
  if (a == 0) w += Rational(1, 2);
  return w;
}

Rational omega_from_u(const ParamSet& ps, int a) {
  if (a > ps.truncation()) throw std::out_of_range("omega index beyond truncation");
  return omega_from_u(ps.u, a);
}

AdmissibilityResult check_admissible(const std::vector<Rational>& omega) {
  if (omega.size() < 2) throw std::invalid_argument("admissibility needs omega_0 and omega_1");
  AdmissibilityResult res;
  for (int a = 0; 2 * a + 1 < static_cast<int>(omega.size()); ++a) {
    Rational s = -omega[2 * a];
    for (int b = 1; b <= 2 * a + 1; ++b) s += sign_pow(b - 1) * omega[b - 1] * omega[2 * a + 1 - b];
    res.checked_through = a;
    if (omega[2 * a + 1] != s / 2) {
      res.ok = false;
      res.first_failure = a;
      return res;
    }
  }
  return res;
}

namespace {

Rational half_sign(int r) { return Rational(sign_pow(r), 2); }

// prod_i (1 + u_i z)/(1 - u_i z) = prod_i (1 + 2 sum_k u_i^k z^k).
TruncatedSeries cayley_product(const std::vector<Rational>& u, int order) {
  TruncatedSeries acc = TruncatedSeries::constant(1, order);
  for (const Rational& ui : u) {
    std::vector<Rational> c(order);
    Rational p = 1;
    for (int k = 0; k < order; ++k) {
      c[k] = k == 0 ? Rational(1) : 2 * p;
      p *= ui;
    }
    acc = acc * TruncatedSeries(0, c, order);
  }
  return acc;
}

}  // namespace

TruncatedSeries w1_series(const ParamSet& ps, int N) {
  if (N > ps.truncation()) throw std::out_of_range("requested order exceeds the stored omega");
  std::vector<Rational> c(ps.omega.begin(), ps.omega.begin() + N + 1);
  return TruncatedSeries(0, c, N + 1);
}

bool w1_identity_check(const ParamSet& ps, int N) {
  const int order = N + 1;
  TruncatedSeries lhs = w1_series(ps, N) + TruncatedSeries::y(order + 2) - TruncatedSeries::constant(Rational(1, 2), order + 2);
  TruncatedSeries lin = TruncatedSeries::y(order + 2) - TruncatedSeries::constant(half_sign(ps.r), order + 2);
  TruncatedSeries rhs = lin * cayley_product(ps.u, order + 2);
  return lhs.agrees_with(rhs, order);
}

bool w1_product_identity_check(const ParamSet& ps, int N) {
  const int order = N + 1;
  const auto half = TruncatedSeries::constant(Rational(1, 2), order + 4);
  const auto y = TruncatedSeries::y(order + 4);
  TruncatedSeries w = w1_series(ps, N);
  TruncatedSeries a = w + y - half;
  TruncatedSeries b = w.negate_variable() - y - half;
  TruncatedSeries rhs = (half - y) * (half + y);
  // a and b each have valuation -1, so the product is known through z^(order-1).
  return (a * b).agrees_with(rhs, order - 1);
}

std::vector<Rational> node_contents_before(const UpDownTableau& t, int k, const std::vector<Rational>& u) {
  if (k < 1 || k > t.n()) throw std::invalid_argument("k out of range");
  std::vector<Rational> out;
  for (const CornerNode& c : addable_removable(t.at(k - 1), u)) out.push_back(c.content);
  return out;
}

RationalFunction wk_rational(const UpDownTableau& t, int k, const ParamSet& ps) {
  std::vector<Rational> cs = node_contents_before(t, k, ps.u);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (cs[i] == cs[j]) throw std::domain_error("content collision: parameters are not generic");
  Poly num(Rational(1)), den(Rational(1));
  for (const Rational& c : cs) {
    num = num * Poly::linear(-c);
    den = den * Poly::linear(c);
  }
  RationalFunction lin(Poly::y() - Poly(half_sign(ps.r)));
  RationalFunction base(Poly(Rational(1, 2)) - Poly::y());
  return base + lin * RationalFunction(num, den);
}

Rational wk_residue(const UpDownTableau& t, int k, const ParamSet& ps, const Rational& c) {
  RationalFunction f = wk_rational(t, k, ps) / RationalFunction(Poly::y());
  return f.residue_simple(c);
}

bool wk_partial_fraction_check(const UpDownTableau& t, int k, const ParamSet& ps) {
  RationalFunction f = wk_rational(t, k, ps) / RationalFunction(Poly::y());
  if (f.den().eval(0) == 0) return false;
  if (f.num().degree() >= f.den().degree()) return false;
  RationalFunction sum;
  for (const Rational& c : node_contents_before(t, k, ps.u)) {
    Rational res = f.residue_simple(c);
    if (res != 0) sum = sum + RationalFunction(Poly(res), Poly::linear(c));
  }
  return sum == f;
}

RationalFunction step_factor(const Rational& c) {
  Poly yp = Poly::y() + Poly(c), ym = Poly::y() - Poly(c);
  Poly one(Rational(1));
  return RationalFunction(yp * yp - one, ym * ym - one) * RationalFunction(ym * ym, yp * yp);
}

TruncatedSeries wk_recursive(const UpDownTableau& t, int k, const ParamSet& ps, int N) {
  if (k < 1 || k > t.n()) throw std::invalid_argument("k out of range");
  const int order = N + 1;
  TruncatedSeries w = w1_series(ps, N);
  const auto half = TruncatedSeries::constant(Rational(1, 2), order + 2);
  const auto y = TruncatedSeries::y(order + 2);
  for (int i = 1; i < k; ++i) {
    TruncatedSeries f = TruncatedSeries::from_rational(step_factor(content(t, i, ps.u)), order + 2);
    w = half - y + f * (w + y - half);
  }
  return w;
}

RationalFunction wk_recursive_rational(const UpDownTableau& t, int k, const ParamSet& ps) {
  if (k < 1 || k > t.n()) throw std::invalid_argument("k out of range");
  Poly num(Rational(1)), den(Rational(1));
  for (const Rational& ui : ps.u) {
    num = num * Poly::linear(-ui);
    den = den * Poly::linear(ui);
  }
  const RationalFunction shift(Poly::y() - Poly(Rational(1, 2)));
  RationalFunction w = RationalFunction(Poly(Rational(1, 2)) - Poly::y()) +
                       RationalFunction(Poly::y() - Poly(half_sign(ps.r))) * RationalFunction(num, den);
  for (int i = 1; i < k; ++i) {
    RationalFunction f = step_factor(content(t, i, ps.u));
    w = RationalFunction(Poly(Rational(1, 2)) - Poly::y()) + f * (w + shift);
  }
  return w;
}

}  // namespace nw
