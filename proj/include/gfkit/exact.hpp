#ifndef GFKIT_EXACT_HPP
#define GFKIT_EXACT_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gfkit/error.hpp"

namespace gfkit {

using Integer = mpz_class;

std::string to_string(const Integer& v);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }

  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  // Throws DivisionByZero when den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q" (optional leading '-' or '+' on p, q > 0 not
  /// required but q != 0). Surrounding whitespace is rejected.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // "p/q", or "p" when q = 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

// Throws IntegralityError when r has a denominator other than 1.
Integer to_integer(const Rational& r);

Rational rational(const Integer& p, const Integer& q);

Integer factorial(std::uint64_t n);

// Zero outside 0 <= k <= n.
Integer binomial(std::uint64_t n, std::int64_t k);

// <z>_n = z(z-1)...(z-n+1), with <z>_0 = 1.
Rational falling_factorial(const Rational& z, std::uint64_t n);

// base^exp with 0^0 = 1.
Integer ipow(const Integer& base, std::uint64_t exp);
Rational ipow(const Rational& base, std::uint64_t exp);

// (-1)^k
inline int sign_power(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace gfkit

#endif  // GFKIT_EXACT_HPP
