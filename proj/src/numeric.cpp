#include "nw/numeric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nw {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("malformed rational: " + text);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  BigInt p(num), q(den);
  if (q == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rational(p, q);
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string to_string(const Rational& q) { return q.str(); }
std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Real& x) {
  return x.str(static_cast<std::streamsize>(digits10_for_bits(current_precision_bits())),
               std::ios_base::scientific);
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt odd_double_factorial(int m) {
  BigInt r = 1;
  for (int i = 2 * m - 1; i > 1; i -= 2) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ipow(const BigInt& base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Rational rpow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

unsigned current_precision_bits() {
  Real probe;
  return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits_(Real::default_precision()) {
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_digits_); }

Real to_real(const Rational& q) {
  Real x = 0;
  mpfr_set_q(x.backend().data(), q.backend().data(), MPFR_RNDN);
  return x;
}

Real pow2_neg(int e) {
  Real x = 1;
  mpfr_mul_2si(x.backend().data(), x.backend().data(), -e, MPFR_RNDN);
  return x;
}

}  // namespace nw
