#pragma once
// Parameter sets, Schur q-functions, the parameters omega_a, truncated
// series in 1/y, and the rational functions W_k(y, t).

#include "nw/combinat.hpp"
#include "nw/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nw {

/// Dense polynomial in y, coefficients in increasing degree, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Poly y();
  /// y - c
  static Poly linear(const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int d) const;
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational eval(const Rational& x) const;
  Poly derivative() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; throws std::domain_error on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd (zero if both are zero).
  static Poly gcd(Poly a, Poly b);
  Poly monic() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// num/den in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(Rational(0)), den_(Rational(1)) {}
  RationalFunction(Poly num, Poly den);
  RationalFunction(const Poly& p) : RationalFunction(p, Poly(Rational(1))) {}  // NOLINT

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  Rational eval(const Rational& x) const;
  /// Residue at a simple pole c; throws std::domain_error if c is not a simple pole.
  Rational residue_simple(const Rational& c) const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::string to_string() const;

 private:
  Poly num_, den_;
};

/// A Laurent series sum_{a >= valuation} c_a z^a in z = 1/y, known modulo z^order.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Coefficients of z^valuation, z^(valuation+1), ..., known up to z^order exclusive.
  TruncatedSeries(int valuation, std::vector<Rational> coeffs, int order);
  static TruncatedSeries constant(const Rational& c, int order);
  /// y = z^{-1}.
  static TruncatedSeries y(int order);
  /// Expansion of a rational function of y at y = infinity.
  static TruncatedSeries from_rational(const RationalFunction& f, int order);

  int order() const { return order_; }
  /// Coefficient of z^a (that is, of y^{-a}); zero below the valuation.
  Rational coeff(int a) const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Rational& c) const;
  TruncatedSeries inverse() const;
  /// f(y) -> f(-y).
  TruncatedSeries negate_variable() const;
  /// Coefficientwise equality on all exponents below min(order, other order, limit).
  bool agrees_with(const TruncatedSeries& o, int limit) const;
  int min_exponent() const { return val_; }

 private:
  int val_ = 0;
  int order_ = 0;
  std::vector<Rational> c_;  // c_[i] is the coefficient of z^(val_ + i)
};

enum class OmegaMode { Derived, UserSupplied };

struct ParamSet {
  int r = 1;
  std::vector<Rational> u;
  std::vector<Rational> omega;  // omega_0 .. omega_N
  OmegaMode mode = OmegaMode::Derived;
  unsigned precision_bits = 256;

  int truncation() const { return static_cast<int>(omega.size()) - 1; }
  /// Stored omega_a; throws std::out_of_range past the truncation.
  const Rational& omega_at(int a) const;

  static ParamSet from_u(std::vector<Rational> u, int N, unsigned precision_bits = 256);
  static ParamSet user_supplied(std::vector<Rational> u, std::vector<Rational> omega, unsigned precision_bits = 256);
  nlohmann::json to_json() const;
};

/// Default truncation 2r + 4n.
int default_truncation(int r, int n);

/// Coefficient of y^a in prod_i (1 + x_i y) / (1 - x_i y).
Rational schur_q(int a, const std::vector<Rational>& x);
/// q_{a+1}(u) - (1/2)(-1)^r q_a(u) + (1/2) delta_{a0}.
Rational omega_from_u(const std::vector<Rational>& u, int a);
Rational omega_from_u(const ParamSet& ps, int a);

struct AdmissibilityResult {
  bool ok = true;
  int first_failure = -1;  // the smallest failing a, or -1
  int checked_through = -1;
};
/// Checks omega_{2a+1} = (1/2)(-omega_{2a} + sum_{b=1}^{2a+1} (-1)^{b-1} omega_{b-1} omega_{2a+1-b}).
AdmissibilityResult check_admissible(const std::vector<Rational>& omega);

/// sum_{a=0}^{N} omega_a y^{-a}.
TruncatedSeries w1_series(const ParamSet& ps, int N);
/// W_1(y) + y - 1/2 = (y - (1/2)(-1)^r) prod (y + u_i)/(y - u_i), to order N.
bool w1_identity_check(const ParamSet& ps, int N);
/// (W_1(y) + y - 1/2)(W_1(-y) - y - 1/2) = (1/2 - y)(1/2 + y), to order N.
bool w1_product_identity_check(const ParamSet& ps, int N);

/// Contents of the addable and removable nodes of t_{k-1}.
std::vector<Rational> node_contents_before(const UpDownTableau& t, int k, const std::vector<Rational>& u);

/// W_k(y, t) = 1/2 - y + (y - (1/2)(-1)^r) prod_alpha (y + c(alpha)) / (y - c(alpha)).
/// Throws std::domain_error if two nodes of t_{k-1} share a content.
RationalFunction wk_rational(const UpDownTableau& t, int k, const ParamSet& ps);
/// Residue of W_k(y, t)/y at y = c, from the reduced rational function.
Rational wk_residue(const UpDownTableau& t, int k, const ParamSet& ps, const Rational& c);

/// Checks that W_k/y equals sum over its poles c of Res_c / (y - c), has no
/// pole at 0 and vanishes at infinity.
bool wk_partial_fraction_check(const UpDownTableau& t, int k, const ParamSet& ps);

/// F(y, c) = ((y+c)^2 - 1)/((y-c)^2 - 1) * (y-c)^2/(y+c)^2.
RationalFunction step_factor(const Rational& c);

/// W_k(y, t) via the recursion from W_1, as a series built from stored omega.
TruncatedSeries wk_recursive(const UpDownTableau& t, int k, const ParamSet& ps, int N);
/// The same recursion carried out on exact rational functions, starting
/// from W_1 written in product form.
RationalFunction wk_recursive_rational(const UpDownTableau& t, int k, const ParamSet& ps);

}  // namespace nw
