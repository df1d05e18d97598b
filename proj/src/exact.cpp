#include "gfkit/exact.hpp"

namespace gfkit {

std::string to_string(const Integer& v) { return v.get_str(); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) {
    throw ParseError("invalid rational '" + std::string(whole) + "'");
  }
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const std::string_view den_text = text.substr(slash + 1);
  if (!is_digits(den_text)) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den(std::string(den_text), 10);
  if (sgn(den) == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZero("rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Integer to_integer(const Rational& r) {
  if (!r.is_integer()) {
    throw IntegralityError("expected an integer, got " + r.str());
  }
  return r.numerator();
}

Rational rational(const Integer& p, const Integer& q) { return Rational(p, q); }

Integer factorial(std::uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) {
    return 0;
  }
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Rational falling_factorial(const Rational& z, std::uint64_t n) {
  Rational r = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    r *= z - Rational(k);
  }
  return r;
}

Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational ipow(const Rational& base, std::uint64_t exp) {
  return Rational(ipow(base.numerator(), exp), ipow(base.denominator(), exp));
}

}  // namespace gfkit
