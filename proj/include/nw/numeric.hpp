#pragma once
// Scalar types shared by every module: exact rationals, big integers and
// runtime-precision binary floats.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <type_traits>
#include <vector>

namespace nw {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::mpfr_float;

/// Parses "p", "-p", "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
/// Decimal string with enough digits to round-trip the given binary precision.
std::string to_string(const Real& x);

std::vector<Rational> parse_rational_list(const std::string& csv);

BigInt factorial(int n);
/// (2m-1)!! with the convention (-1)!! = 1.
BigInt odd_double_factorial(int m);
BigInt binomial(int n, int k);
BigInt ipow(const BigInt& base, int e);

Rational rpow(const Rational& base, int e);
int sign_pow(int e);  // (-1)^e

/// Sets the default mpfr precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_digits_;
};

unsigned digits10_for_bits(unsigned bits);
unsigned current_precision_bits();

/// Rounds q at the current default precision.
Real to_real(const Rational& q);

template <class T>
T from_rational(const Rational& q) {
  if constexpr (std::is_same_v<T, Real>)
    return to_real(q);
  else
    return T(q);
}

/// 2^(-e) at the current precision.
Real pow2_neg(int e);

}  // namespace nw
