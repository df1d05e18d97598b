#ifndef GFKIT_SERIES_HPP
#define GFKIT_SERIES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gfkit/exact.hpp"

namespace gfkit {

/// Truncated formal power series c_0 + c_1 x + ... + c_N x^N over the
/// rationals. N is the truncation order and is always explicit: binary
/// operations truncate to the smaller order and nothing is silently
/// extended. Coefficients are stored in ordinary form; the EGF view of
/// index k is k! * c_k.
class PowerSeries {
 public:
  // Throws InvalidArgument for an empty coefficient list.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  // Unchecked.
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

  // Coefficient-wise on the common prefix 0..min(order).
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

// Builder kinds.
struct ExpCx {
  Rational c;  // e^{c x}
};
struct Log1p {};        // ln(1 + x)
struct LogGeometric {}; // ln(1 / (1 - x))
struct GeometricPow {
  Rational r;  // (1 / (1 - x))^r
};
struct Monomial {
  Rational c;
  std::size_t degree;
};
struct Constant {
  Rational c;
};
using SeriesKind = std::variant<ExpCx, Log1p, LogGeometric, GeometricPow, Monomial, Constant>;

PowerSeries build(const SeriesKind& kind, std::size_t order);

PowerSeries truncate(const PowerSeries& a, std::size_t order);

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, const Rational& c);
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries integer_pow(const PowerSeries& a, std::uint64_t exponent);

// Requires c_0 != 0 (NotInvertible otherwise).
PowerSeries reciprocal(const PowerSeries& a);

// Requires order >= 1 (TruncationError otherwise). Order drops by one.
PowerSeries derivative(const PowerSeries& a);
PowerSeries derivative(const PowerSeries& a, std::size_t times);

// ln(a) for c_0 = 1 and e^a for c_0 = 0; InvalidArgument otherwise.
PowerSeries log_series(const PowerSeries& a);
PowerSeries exp_series(const PowerSeries& a);

// a^alpha := exp(alpha * ln a); requires c_0 = 1.
PowerSeries rational_pow(const PowerSeries& a, const Rational& alpha);

// a / x^r. Every dropped coefficient must be zero (NotDivisible) and
// r <= order (TruncationError).
PowerSeries shift_divide(const PowerSeries& a, std::size_t r);

// IndexError when k > order.
const Rational& coefficient(const PowerSeries& a, std::size_t k);
Rational egf_coefficient(const PowerSeries& a, std::size_t k);

// "c0 + c1*x + c2*x^2 + ... (order N)"
std::string to_string(const PowerSeries& a);

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return add(a, b); }
inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return sub(a, b); }
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }
inline PowerSeries operator*(const Rational& c, const PowerSeries& a) { return scale(a, c); }

}  // namespace gfkit

#endif  // GFKIT_SERIES_HPP
