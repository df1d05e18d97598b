#ifndef GFKIT_REMAINDERS_HPP
#define GFKIT_REMAINDERS_HPP

#include <cstddef>
#include <string_view>

#include "gfkit/series.hpp"

namespace gfkit {

// Normalized remainder (normalized tail) of a Maclaurin expansion:
//
//   T_n[f](x) = (n+1)! / (f^(n+1)(0) x^(n+1)) * (f(x) - sum_{k<=n} f^(k)(0) x^k / k!)
//
// with T_n[f](0) = 1. In coefficient terms T_n[f] = sum_j c_{n+1+j} / c_{n+1} x^j.
// The index n always means "drop the degree <= n part".

enum class RemainderBase {
  Exp,         // e^x
  Log1p,       // ln(1+x)
  Log1pOverX,  // ln(1+x)/x
};

struct RemainderSpec {
  RemainderBase base;
  std::size_t n;
};

std::string_view to_string(RemainderBase base);

// Throws TruncationError when order(f) < n+1 and UndefinedRemainder when
// c_{n+1} = 0. Result order is order(f) - (n+1).
PowerSeries normalized_remainder(const PowerSeries& f, std::size_t n);

// T_spec.n[base] to the given order, computed from a built base series.
PowerSeries remainder_series(const RemainderSpec& spec, std::size_t order);

// T_r[e^x] from its closed form: coefficient k is (r+1)! / (k+r+1)!.
PowerSeries exp_remainder(std::size_t r, std::size_t order);

// (-1)^r (r+1)/x^r [ln(1+x)/x - sum_{j<r} (-1)^j x^j/(j+1)], from its closed
// form (r+1)(-1)^j/(r+1+j). Equals T_r[ln(1+x)], and T_{r-1}[ln(1+x)/x]
// for r >= 1. r = 0 gives ln(1+x)/x itself.
PowerSeries log_remainder(std::size_t r, std::size_t order);

}  // namespace gfkit

#endif  // GFKIT_REMAINDERS_HPP
