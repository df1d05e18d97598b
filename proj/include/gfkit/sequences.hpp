#ifndef GFKIT_SEQUENCES_HPP
#define GFKIT_SEQUENCES_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gfkit/exact.hpp"

namespace gfkit {

// Every family is extracted from its generating function. The series order
// needed for an extraction is derived from the requested index.

enum class Family {
  Stirling2,
  Stirling1,
  Bernoulli,
  HowardS,   // associated Stirling numbers of the second kind S_r
  Howard_s,  // associated Stirling numbers of the first kind s_r
  HowardA,   // A_{r,j}(t)
  RStirling1,
  RStirling2,
  SeqF,
  SeqQ,
};

// "STIRLING2", "HOWARD_S", "HOWARD_s", "SEQ_F", ...
std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

struct SequenceEntry {
  Family family;
  std::vector<Rational> indices;
  Rational value;

  friend bool operator==(const SequenceEntry&, const SequenceEntry&) = default;
};

// S(m,n) = (1/n!) sum_k (-1)^k C(n,k) (n-k)^m, zero for n > m.
Integer stirling2_sum(std::uint64_t m, std::uint64_t n);

// S(m,n) = m!/n! [x^m] (e^x - 1)^n. Zero for n > m.
Integer stirling2_gf(std::uint64_t m, std::uint64_t n);

// Signed s(j,l) from [ln(1+x)/x]^l = sum_i s(i+l,l)/C(i+l,l) x^i/i!. Zero for j < l.
Integer stirling1(std::uint64_t j, std::uint64_t l);

// B_k from x/(e^x - 1). B_1 = -1/2.
Rational bernoulli(std::uint64_t k);

// S_r(j + (r+1)l, l) from
//   (T_r[e^x])^l = l! ((r+1)!)^l / ((r+1)l)! sum_j S_r(j+(r+1)l, l) / C(j+(r+1)l, j) x^j/j!.
Rational howard_S(std::uint64_t r, std::uint64_t l, std::uint64_t j);

// s_r(j, l) from [ln(1/(1-x)) - sum_{i=1}^r x^i/i]^l = l! sum_j s_r(j,l) x^j/j!.
// Zero below the leading degree (r+1)l.
Rational howard_s(std::uint64_t r, std::uint64_t l, std::uint64_t j);

// A_{r,j}(t) from e^{xt} / T_{r-1}[e^x]; r >= 1.
Rational howard_A(std::uint64_t r, const Rational& t, std::uint64_t j);

// r-Stirling numbers of the first kind [k+r, m+r]_r from the vertical EGF
// (1/m!) (1/(1-z))^r (ln(1/(1-z)))^m. Zero for m < 0.
Integer rstirling1(std::uint64_t k, std::int64_t m, std::uint64_t r);

// [k+m+r, m+r]_r read off the rewritten form
//   (1/(1+z))^r (ln(1+z)/z)^m = sum_k (-1)^k [k+m+r, m+r]_r / C(k+m,m) z^k/k!.
Integer rstirling1_from_rewrite(std::uint64_t k, std::int64_t m, std::uint64_t r);

// r-Stirling numbers of the second kind {k+r, m+r}_r from
// (1/m!) e^{rz} (e^z - 1)^m. Zero for m < 0.
Integer rstirling2(std::uint64_t k, std::int64_t m, std::uint64_t r);

// {k+m+r, m+r}_r read off e^{rz} (T_0[e^z])^m = sum_k {k+m+r, m+r}_r / C(k+m,m) z^k/k!.
Integer rstirling2_from_rewrite(std::uint64_t k, std::int64_t m, std::uint64_t r);

// Which normalized remainder of the logarithm F is built from.
enum class LogRemainderIndexing {
  Log1p,       // T_s[ln(1+z)] (default)
  Log1pOverX,  // T_s[ln(1+z)/z], one index further into the tail
};

// F(r,s,m,k) = k! [z^k] (1/(1+z))^r (T_s[ln(1+z)])^m.
Rational seq_F(const Rational& r, std::uint64_t s, const Rational& m, std::uint64_t k,
               LogRemainderIndexing indexing = LogRemainderIndexing::Log1p);

// Q(r,s,m,k) = k! [z^k] e^{rz} (T_s[e^z])^m.
Rational seq_Q(const Rational& r, std::uint64_t s, const Rational& m, std::uint64_t k);

struct TableRequest {
  Family family = Family::Stirling2;
  Rational r = 0;
  Rational s = 0;
  Rational m = 1;
  Rational t = 0;
  std::uint64_t k_max = 20;
  std::uint64_t m_max = 20;
  LogRemainderIndexing indexing = LogRemainderIndexing::Log1p;
};

// Rows in lexicographic index order:
//   STIRLING2, STIRLING1   (m, n)      0 <= n <= m <= m_max
//   BERNOULLI              (k)         k <= k_max
//   HOWARD_S, HOWARD_s     (r, l, j)   l <= m_max, j <= k_max
//   HOWARD_A               (r, t, j)   j <= k_max
//   RSTIRLING1/2           (k, m, r)   m <= m_max, m <= k <= k_max
//   SEQ_F, SEQ_Q           (r, s, m, k) k <= k_max
// r and s must be nonnegative integers where the family needs them.
std::vector<SequenceEntry> generate_table(const TableRequest& request);

}  // namespace gfkit

#endif  // GFKIT_SEQUENCES_HPP
