#ifndef GFKIT_IDENTITIES_HPP
#define GFKIT_IDENTITIES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfkit/exact.hpp"

namespace gfkit {

enum class IdentityId {
  ID12,   // sum_k C(n,k)(-1)^k = [n = 0]
  ID67,   // sum_k C(n,k)(n-k)^n (-1)^k = n!
  ID84,   // sum_k C(n,k)(n-k)^m (-1)^k = 0, m < n
  ID85,   // sum_k C(n,k)(n-k)^{n+1} (-1)^k = n(n+1)!/2
  ID67R,  // k^m forms of the above, carrying (-1)^n
  ID84R,
  ID85R,
  BinomialSeries,  // sum_k C(n,k)(-1)^k e^{(n-k)x} = (e^x - 1)^n as series
  DerivLimit,      // m-fold derivative at 0 of the S(k,n) expansion of (e^x - 1)^n
  CrossChecks,     // reductions between the sequence families
};

inline constexpr std::array<IdentityId, 10> kAllIdentities{
    IdentityId::ID12,  IdentityId::ID67,  IdentityId::ID84,           IdentityId::ID85,
    IdentityId::ID67R, IdentityId::ID84R, IdentityId::ID85R,          IdentityId::BinomialSeries,
    IdentityId::DerivLimit, IdentityId::CrossChecks,
};

// "ID12", ..., "BINOMIAL_SERIES", "DERIV_LIMIT", "CROSS_CHECKS"
std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

struct IdentityInstance {
  std::string check;
  std::vector<std::int64_t> params;
  Rational lhs;
  Rational rhs;
  bool pass;
};

struct IdentityReport {
  IdentityId id;
  std::vector<std::pair<std::string, std::int64_t>> range;
  std::vector<IdentityInstance> instances;

  // Green iff every instance passes.
  bool pass() const;
  std::vector<IdentityInstance> failures() const;
};

// sum_{k=0}^n C(n,k) (n-k)^m (-1)^k, with 0^0 = 1.
Integer alternating_power_sum(std::uint64_t m, std::uint64_t n);

// sum_{k=0}^n C(n,k) k^m (-1)^k, with 0^0 = 1.
Integer reformulated_power_sum(std::uint64_t m, std::uint64_t n);

// Checks one identity for every n <= n_max (and every m < n for ID84/ID84R).
// The series-level ids clamp their own bounds: BINOMIAL_SERIES runs
// n <= n_max at order n + 10, DERIV_LIMIT runs m, n <= min(n_max, 15) at
// order m + n + 5, CROSS_CHECKS runs cross_check_suite with every bound
// clamped to n_max.
IdentityReport verify_identity(IdentityId id, std::uint64_t n_max);

// Coefficient-wise comparison of sum_k C(n,k)(-1)^k e^{(n-k)x} with (e^x - 1)^n.
IdentityReport verify_binomial_series(std::uint64_t n, std::size_t order);

// Differentiates sum_k S(k+n,n)/C(k+n,n) x^{k+n}/k! (and the exponential
// sum it equals) m times and compares the constant terms with
// alternating_power_sum(m,n) and with n! S(m,n) (0 when n > m).
// TruncationError when order < m + n.
IdentityReport verify_derivative_limit(std::uint64_t m, std::uint64_t n, std::size_t order);

struct CrossCheckBounds {
  std::uint64_t stirling_max = 40;  // S via GF vs S via alternating sum
  std::uint64_t index_max = 25;     // r = 0 reductions
  std::uint64_t r_max = 3;          // r-Stirling rewrite consistency
  std::uint64_t m_max = 5;
  std::uint64_t k_max = 20;
  std::uint64_t bernoulli_max = 30;
  std::uint64_t open_m_max = 4;     // F and Q reductions
  std::uint64_t open_k_max = 15;
};

IdentityReport cross_check_suite(const CrossCheckBounds& bounds);

}  // namespace gfkit

#endif  // GFKIT_IDENTITIES_HPP
