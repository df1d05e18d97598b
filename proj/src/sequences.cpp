#include "gfkit/sequences.hpp"

#include <array>
#include <utility>

#include "gfkit/remainders.hpp"
#include "gfkit/series.hpp"

namespace gfkit {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::Stirling2, "STIRLING2"},
    {Family::Stirling1, "STIRLING1"},
    {Family::Bernoulli, "BERNOULLI"},
    {Family::HowardS, "HOWARD_S"},
    {Family::Howard_s, "HOWARD_s"},
    {Family::HowardA, "HOWARD_A"},
    {Family::RStirling1, "RSTIRLING1"},
    {Family::RStirling2, "RSTIRLING2"},
    {Family::SeqF, "SEQ_F"},
    {Family::SeqQ, "SEQ_Q"},
}};

// e^x - 1 to the given order.
PowerSeries exp_minus_one(std::size_t order) {
  return sub(build(ExpCx{1}, order), PowerSeries::one(order));
}

// 1 + c x to the given order.
PowerSeries linear(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  if (order >= 1) {
    v[1] = c;
  }
  return PowerSeries(std::move(v));
}

std::uint64_t require_natural(const Rational& v, const char* what) {
  if (!v.is_integer() || v.sign() < 0) {
    throw InvalidArgument(std::string(what) + " must be a nonnegative integer, got " + v.str());
  }
  return v.numerator().get_ui();
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) {
      return name;
    }
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) {
      return f;
    }
  }
  return std::nullopt;
}

Integer stirling2_sum(std::uint64_t m, std::uint64_t n) {
  if (n > m) {
    return 0;
  }
  Integer sum;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const Integer term = binomial(n, static_cast<std::int64_t>(k)) * ipow(Integer(n - k), m);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return to_integer(Rational(sum, factorial(n)));
}

Integer stirling2_gf(std::uint64_t m, std::uint64_t n) {
  if (n > m) {
    return 0;
  }
  const PowerSeries power = integer_pow(exp_minus_one(m), n);
  return to_integer(Rational(factorial(m), factorial(n)) * coefficient(power, m));
}

Integer stirling1(std::uint64_t j, std::uint64_t l) {
  if (j < l) {
    return 0;
  }
  const std::size_t i = j - l;
  const PowerSeries log_over_x = shift_divide(build(Log1p{}, i + 1), 1);
  const PowerSeries power = integer_pow(log_over_x, l);
  return to_integer(egf_coefficient(power, i) * Rational(binomial(j, static_cast<std::int64_t>(l))));
}

Rational bernoulli(std::uint64_t k) {
  return egf_coefficient(reciprocal(exp_remainder(0, k)), k);
}

Rational howard_S(std::uint64_t r, std::uint64_t l, std::uint64_t j) {
  const PowerSeries power = integer_pow(exp_remainder(r, j), l);
  const std::uint64_t lead = (r + 1) * l;
  // Undo l! ((r+1)!)^l / ((r+1)l)! and the 1/C(j+lead, j) weight.
  const Rational norm(factorial(lead), factorial(l) * ipow(factorial(r + 1), l));
  return egf_coefficient(power, j) * Rational(binomial(j + lead, static_cast<std::int64_t>(j))) *
         norm;
}

Rational howard_s(std::uint64_t r, std::uint64_t l, std::uint64_t j) {
  if (j < (r + 1) * l) {
    return 0;
  }
  std::vector<Rational> head(j + 1);
  for (std::uint64_t i = 1; i <= r && i <= j; ++i) {
    head[i] = Rational(1, Integer(i));
  }
  const PowerSeries base = sub(build(LogGeometric{}, j), PowerSeries(std::move(head)));
  const PowerSeries power = integer_pow(base, l);
  return egf_coefficient(power, j) / Rational(factorial(l));
}

Rational howard_A(std::uint64_t r, const Rational& t, std::uint64_t j) {
  if (r == 0) {
    throw InvalidArgument("A_{r,j}(t) needs r >= 1");
  }
  const PowerSeries gf = mul(build(ExpCx{t}, j), reciprocal(exp_remainder(r - 1, j)));
  return egf_coefficient(gf, j);
}

Integer rstirling1(std::uint64_t k, std::int64_t m, std::uint64_t r) {
  if (m < 0) {
    return 0;
  }
  const auto mm = static_cast<std::uint64_t>(m);
  const PowerSeries gf = mul(build(GeometricPow{Rational(r)}, k),
                             integer_pow(build(LogGeometric{}, k), mm));
  return to_integer(egf_coefficient(gf, k) / Rational(factorial(mm)));
}

Integer rstirling1_from_rewrite(std::uint64_t k, std::int64_t m, std::uint64_t r) {
  if (m < 0) {
    return 0;
  }
  const auto mm = static_cast<std::uint64_t>(m);
  const PowerSeries inv_one_plus = rational_pow(linear(1, k), -Rational(r));
  const PowerSeries log_over_z = shift_divide(build(Log1p{}, k + 1), 1);
  const PowerSeries gf = mul(inv_one_plus, integer_pow(log_over_z, mm));
  const Rational v = egf_coefficient(gf, k) * Rational(binomial(k + mm, static_cast<std::int64_t>(mm)));
  return to_integer(k % 2 == 0 ? v : -v);
}

Integer rstirling2(std::uint64_t k, std::int64_t m, std::uint64_t r) {
  if (m < 0) {
    return 0;
  }
  const auto mm = static_cast<std::uint64_t>(m);
  const PowerSeries gf = mul(build(ExpCx{Rational(r)}, k), integer_pow(exp_minus_one(k), mm));
  return to_integer(egf_coefficient(gf, k) / Rational(factorial(mm)));
}

Integer rstirling2_from_rewrite(std::uint64_t k, std::int64_t m, std::uint64_t r) {
  if (m < 0) {
    return 0;
  }
  const auto mm = static_cast<std::uint64_t>(m);
  const PowerSeries gf = mul(build(ExpCx{Rational(r)}, k), integer_pow(exp_remainder(0, k), mm));
  return to_integer(egf_coefficient(gf, k) * Rational(binomial(k + mm, static_cast<std::int64_t>(mm))));
}

Rational seq_F(const Rational& r, std::uint64_t s, const Rational& m, std::uint64_t k,
               LogRemainderIndexing indexing) {
  const PowerSeries tail = indexing == LogRemainderIndexing::Log1p
                               ? remainder_series({RemainderBase::Log1p, s}, k)
                               : remainder_series({RemainderBase::Log1pOverX, s}, k);
  const PowerSeries gf = mul(rational_pow(linear(1, k), -r), rational_pow(tail, m));
  return egf_coefficient(gf, k);
}

Rational seq_Q(const Rational& r, std::uint64_t s, const Rational& m, std::uint64_t k) {
  const PowerSeries gf = mul(build(ExpCx{r}, k), rational_pow(exp_remainder(s, k), m));
  return egf_coefficient(gf, k);
}

std::vector<SequenceEntry> generate_table(const TableRequest& q) {
  std::vector<SequenceEntry> rows;
  const auto push = [&rows, &q](std::vector<Rational> idx, Rational v) {
    rows.push_back(SequenceEntry{q.family, std::move(idx), std::move(v)});
  };
  switch (q.family) {
    case Family::Stirling2:
    case Family::Stirling1:
      for (std::uint64_t m = 0; m <= q.m_max; ++m) {
        for (std::uint64_t n = 0; n <= m; ++n) {
          push({m, n}, q.family == Family::Stirling2 ? stirling2_gf(m, n) : stirling1(m, n));
        }
      }
      break;
    case Family::Bernoulli:
      for (std::uint64_t k = 0; k <= q.k_max; ++k) {
        push({k}, bernoulli(k));
      }
      break;
    case Family::HowardS:
    case Family::Howard_s: {
      const std::uint64_t r = require_natural(q.r, "r");
      for (std::uint64_t l = 0; l <= q.m_max; ++l) {
        for (std::uint64_t j = 0; j <= q.k_max; ++j) {
          push({r, l, j}, q.family == Family::HowardS ? howard_S(r, l, j) : howard_s(r, l, j));
        }
      }
      break;
    }
    case Family::HowardA: {
      const std::uint64_t r = require_natural(q.r, "r");
      for (std::uint64_t j = 0; j <= q.k_max; ++j) {
        push({r, q.t, j}, howard_A(r, q.t, j));
      }
      break;
    }
    case Family::RStirling1:
    case Family::RStirling2: {
      const std::uint64_t r = require_natural(q.r, "r");
      for (std::uint64_t m = 0; m <= q.m_max; ++m) {
        for (std::uint64_t k = m; k <= q.k_max; ++k) {
          const auto mi = static_cast<std::int64_t>(m);
          push({k, m, r},
               q.family == Family::RStirling1 ? rstirling1(k, mi, r) : rstirling2(k, mi, r));
        }
      }
      break;
    }
    case Family::SeqF:
    case Family::SeqQ: {
      const std::uint64_t s = require_natural(q.s, "s");
      for (std::uint64_t k = 0; k <= q.k_max; ++k) {
        push({q.r, s, q.m, k},
             q.family == Family::SeqF ? seq_F(q.r, s, q.m, k, q.indexing) : seq_Q(q.r, s, q.m, k));
      }
      break;
    }
  }
  return rows;
}

}  // namespace gfkit
