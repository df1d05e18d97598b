#include "gfkit/identities.hpp"

#include <algorithm>

#include "gfkit/remainders.hpp"
#include "gfkit/sequences.hpp"
#include "gfkit/series.hpp"

namespace gfkit {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 10> kIdentityNames{{
    {IdentityId::ID12, "ID12"},
    {IdentityId::ID67, "ID67"},
    {IdentityId::ID84, "ID84"},
    {IdentityId::ID85, "ID85"},
    {IdentityId::ID67R, "ID67R"},
    {IdentityId::ID84R, "ID84R"},
    {IdentityId::ID85R, "ID85R"},
    {IdentityId::BinomialSeries, "BINOMIAL_SERIES"},
    {IdentityId::DerivLimit, "DERIV_LIMIT"},
    {IdentityId::CrossChecks, "CROSS_CHECKS"},
}};

std::int64_t as_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

class ReportBuilder {
 public:
  explicit ReportBuilder(IdentityId id) { report_.id = id; }

  ReportBuilder& range(std::string name, std::uint64_t bound) {
    report_.range.emplace_back(std::move(name), as_i64(bound));
    return *this;
  }

  void check(std::string name, std::vector<std::int64_t> params, Rational lhs, Rational rhs) {
    const bool ok = lhs == rhs;
    report_.instances.push_back(
        IdentityInstance{std::move(name), std::move(params), std::move(lhs), std::move(rhs), ok});
  }

  void absorb(const IdentityReport& other) {
    report_.instances.insert(report_.instances.end(), other.instances.begin(),
                             other.instances.end());
  }

  IdentityReport finish() && { return std::move(report_); }

 private:
  IdentityReport report_;
};

Integer signed_value(const Integer& v, std::uint64_t n) { return n % 2 == 0 ? v : Integer(-v); }

// n (n+1)! / 2
Integer id85_closed_form(std::uint64_t n) { return Integer(n) * factorial(n + 1) / 2; }

IdentityReport verify_sums(IdentityId id, std::uint64_t n_max) {
  ReportBuilder b(id);
  b.range("n_max", n_max);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const std::int64_t ni = as_i64(n);
    switch (id) {
      case IdentityId::ID12: {
        Integer sum;
        for (std::uint64_t k = 0; k <= n; ++k) {
          sum += signed_value(binomial(n, as_i64(k)), k);
        }
        b.check("ID12", {ni}, sum, n == 0 ? 1 : 0);
        break;
      }
      case IdentityId::ID67:
        b.check("ID67", {ni}, alternating_power_sum(n, n), factorial(n));
        break;
      case IdentityId::ID85:
        b.check("ID85", {ni}, alternating_power_sum(n + 1, n), id85_closed_form(n));
        break;
      case IdentityId::ID84:
        for (std::uint64_t m = 0; m < n; ++m) {
          b.check("ID84", {as_i64(m), ni}, alternating_power_sum(m, n), 0);
        }
        break;
      case IdentityId::ID67R: {
        const Integer lhs = reformulated_power_sum(n, n);
        b.check("ID67R", {ni}, lhs, signed_value(factorial(n), n));
        b.check("ID67R_vs_ID67", {ni}, lhs, signed_value(alternating_power_sum(n, n), n));
        break;
      }
      case IdentityId::ID85R: {
        const Integer lhs = reformulated_power_sum(n + 1, n);
        b.check("ID85R", {ni}, lhs, signed_value(id85_closed_form(n), n));
        b.check("ID85R_vs_ID85", {ni}, lhs, signed_value(alternating_power_sum(n + 1, n), n));
        break;
      }
      case IdentityId::ID84R:
        for (std::uint64_t m = 0; m < n; ++m) {
          const Integer lhs = reformulated_power_sum(m, n);
          b.check("ID84R", {as_i64(m), ni}, lhs, 0);
          b.check("ID84R_vs_ID84", {as_i64(m), ni}, lhs,
                  signed_value(alternating_power_sum(m, n), n));
        }
        break;
      default:
        throw InvalidArgument("not a sum identity: " + std::string(to_string(id)));
    }
  }
  return std::move(b).finish();
}

// sum_{k=0}^n C(n,k)(-1)^k e^{(n-k)x}
PowerSeries binomial_exp_sum(std::uint64_t n, std::size_t order) {
  PowerSeries sum = PowerSeries::zero(order);
  for (std::uint64_t k = 0; k <= n; ++k) {
    const Rational weight(signed_value(binomial(n, as_i64(k)), k));
    sum = add(sum, scale(build(ExpCx{Rational(n - k)}, order), weight));
  }
  return sum;
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [i, name] : kIdentityNames) {
    if (i == id) {
      return name;
    }
  }
  return "?";
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (const auto& [i, n] : kIdentityNames) {
    if (n == name) {
      return i;
    }
  }
  return std::nullopt;
}

bool IdentityReport::pass() const {
  return std::all_of(instances.begin(), instances.end(),
                     [](const IdentityInstance& i) { return i.pass; });
}

std::vector<IdentityInstance> IdentityReport::failures() const {
  std::vector<IdentityInstance> out;
  std::copy_if(instances.begin(), instances.end(), std::back_inserter(out),
               [](const IdentityInstance& i) { return !i.pass; });
  return out;
}

Integer alternating_power_sum(std::uint64_t m, std::uint64_t n) {
  Integer sum;
  for (std::uint64_t k = 0; k <= n; ++k) {
    sum += signed_value(binomial(n, as_i64(k)) * ipow(Integer(n - k), m), k);
  }
  return sum;
}

Integer reformulated_power_sum(std::uint64_t m, std::uint64_t n) {
  Integer sum;
  for (std::uint64_t k = 0; k <= n; ++k) {
    sum += signed_value(binomial(n, as_i64(k)) * ipow(Integer(k), m), k);
  }
  return sum;
}

IdentityReport verify_binomial_series(std::uint64_t n, std::size_t order) {
  ReportBuilder b(IdentityId::BinomialSeries);
  b.range("n", n).range("order", order);
  const PowerSeries lhs = binomial_exp_sum(n, order);
  const PowerSeries e1 = sub(build(ExpCx{1}, order), PowerSeries::one(order));
  const PowerSeries rhs = integer_pow(e1, n);
  for (std::size_t j = 0; j <= order; ++j) {
    b.check("BINOMIAL_SERIES", {as_i64(n), as_i64(j)}, lhs[j], rhs[j]);
  }
  return std::move(b).finish();
}

IdentityReport verify_derivative_limit(std::uint64_t m, std::uint64_t n, std::size_t order) {
  if (order < m + n) {
    throw TruncationError("derivative-limit check at (m, n) = (" + std::to_string(m) + ", " +
                          std::to_string(n) + ") needs order >= " + std::to_string(m + n));
  }
  ReportBuilder b(IdentityId::DerivLimit);
  b.range("m", m).range("n", n).range("order", order);

  // sum_k S(k+n,n)/C(k+n,n) x^{k+n}/k!
  std::vector<Rational> c(order + 1);
  for (std::uint64_t k = 0; k + n <= order; ++k) {
    c[k + n] = Rational(stirling2_sum(k + n, n)) /
               Rational(binomial(k + n, as_i64(n)) * factorial(k));
  }
  const Rational rhs_limit = derivative(PowerSeries(std::move(c)), m)[0];
  const Rational lhs_limit = derivative(binomial_exp_sum(n, order), m)[0];
  const Rational sum(alternating_power_sum(m, n));
  const std::vector<std::int64_t> p{as_i64(m), as_i64(n)};

  Rational closed_form;  // S(m,n)/C(m,n) <m>_m/(m-n)!
  Rational simplified;   // n! S(m,n)
  if (m >= n) {
    const Rational s(stirling2_sum(m, n));
    closed_form = s / Rational(binomial(m, as_i64(n))) * falling_factorial(Rational(m), m) /
                  Rational(factorial(m - n));
    simplified = Rational(factorial(n)) * s;
  }
  b.check("series_limit_vs_sum", p, rhs_limit, sum);
  b.check("exp_sum_limit_vs_sum", p, lhs_limit, sum);
  b.check("series_limit_vs_limit_formula", p, rhs_limit, closed_form);
  b.check("series_limit_vs_factorial_form", p, rhs_limit, simplified);
  return std::move(b).finish();
}

IdentityReport cross_check_suite(const CrossCheckBounds& bd) {
  ReportBuilder b(IdentityId::CrossChecks);
  b.range("stirling_max", bd.stirling_max)
      .range("index_max", bd.index_max)
      .range("r_max", bd.r_max)
      .range("m_max", bd.m_max)
      .range("k_max", bd.k_max)
      .range("bernoulli_max", bd.bernoulli_max)
      .range("open_m_max", bd.open_m_max)
      .range("open_k_max", bd.open_k_max);

  for (std::uint64_t m = 0; m <= bd.stirling_max; ++m) {
    for (std::uint64_t n = 0; n <= m; ++n) {
      b.check("stirling2_gf_vs_sum", {as_i64(m), as_i64(n)}, stirling2_gf(m, n),
              stirling2_sum(m, n));
    }
  }

  for (std::uint64_t n = 0; n <= bd.index_max; ++n) {
    b.check("stirling2_diagonal", {as_i64(n)}, stirling2_sum(n, n), 1);
    b.check("stirling2_subdiagonal", {as_i64(n)}, stirling2_sum(n + 1, n),
            Integer(Integer(n) * Integer(n + 1) / 2));
  }

  for (std::uint64_t a = 0; a <= bd.index_max; ++a) {
    for (std::uint64_t c = 0; c <= bd.index_max; ++c) {
      const std::vector<std::int64_t> p{as_i64(a), as_i64(c)};
      // (j, l) = (a, c)
      const Integer s1 = stirling1(a, c);
      b.check("howard_s0_vs_stirling1", p, howard_s(0, c, a), signed_value(s1, a + c));
      b.check("rstirling1_r0_vs_stirling1", p, rstirling1(a, as_i64(c), 0), signed_value(s1, a + c));
      b.check("rstirling2_r0_vs_stirling2", p, rstirling2(a, as_i64(c), 0), stirling2_sum(a, c));
      // (m, k) = (a, c)
      b.check("howard_S0_vs_stirling2", p, howard_S(0, a, c), stirling2_sum(c + a, a));
    }
  }

  for (std::uint64_t r = 0; r <= bd.r_max; ++r) {
    for (std::uint64_t m = 0; m <= bd.m_max; ++m) {
      for (std::uint64_t k = 0; k <= bd.k_max; ++k) {
        const std::vector<std::int64_t> p{as_i64(r), as_i64(m), as_i64(k)};
        const auto mi = as_i64(m);
        b.check("rstirling1_vertical_vs_rewrite", p, rstirling1(k + m, mi, r),
                rstirling1_from_rewrite(k, mi, r));
        b.check("rstirling2_egf_vs_rewrite", p, rstirling2(k + m, mi, r),
                rstirling2_from_rewrite(k, mi, r));
      }
    }
  }

  b.check("bernoulli_0", {0}, bernoulli(0), 1);
  b.check("bernoulli_1", {1}, bernoulli(1), Rational(-1, 2));
  for (std::uint64_t k = 1; 2 * k + 1 <= bd.bernoulli_max; ++k) {
    b.check("bernoulli_odd_zero", {as_i64(2 * k + 1)}, bernoulli(2 * k + 1), 0);
  }
  {
    const std::size_t order = 40;
    const PowerSeries product =
        mul(exp_remainder(0, order), reciprocal(exp_remainder(0, order)));
    const PowerSeries one = PowerSeries::one(order);
    for (std::size_t j = 0; j <= order; ++j) {
      b.check("bernoulli_reciprocal", {as_i64(j)}, product[j], one[j]);
    }
  }
  for (std::uint64_t n = 0; n <= bd.bernoulli_max; ++n) {
    Rational sum;
    for (std::uint64_t k = 0; k <= n; ++k) {
      const Rational term = Rational(factorial(k), Integer(k + 1)) * Rational(stirling2_sum(n, k));
      sum += k % 2 == 0 ? term : -term;
    }
    b.check("bernoulli_vs_stirling2_sum", {as_i64(n)}, bernoulli(n), sum);
  }

  for (std::uint64_t r = 0; r <= bd.r_max; ++r) {
    for (std::uint64_t m = 0; m <= bd.open_m_max; ++m) {
      for (std::uint64_t k = 0; k <= bd.open_k_max; ++k) {
        const std::vector<std::int64_t> p{as_i64(r), as_i64(m), as_i64(k)};
        const auto mi = as_i64(m);
        const Rational weight(binomial(k + m, mi));
        const Rational f_expected = Rational(signed_value(rstirling1(k + m, mi, r), k)) / weight;
        b.check("seq_F_vs_rstirling1", p, seq_F(r, 0, m, k), f_expected);
        b.check("seq_Q_vs_rstirling2", p, seq_Q(r, 0, m, k),
                Rational(rstirling2(k + m, mi, r)) / weight);
      }
    }
  }

  return std::move(b).finish();
}

IdentityReport verify_identity(IdentityId id, std::uint64_t n_max) {
  switch (id) {
    case IdentityId::BinomialSeries: {
      ReportBuilder b(id);
      b.range("n_max", n_max).range("order_over_n", 10);
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        b.absorb(verify_binomial_series(n, n + 10));
      }
      return std::move(b).finish();
    }
    case IdentityId::DerivLimit: {
      const std::uint64_t bound = std::min<std::uint64_t>(n_max, 15);
      ReportBuilder b(id);
      b.range("mn_max", bound).range("order_over_m_plus_n", 5);
      for (std::uint64_t m = 0; m <= bound; ++m) {
        for (std::uint64_t n = 0; n <= bound; ++n) {
          b.absorb(verify_derivative_limit(m, n, m + n + 5));
        }
      }
      return std::move(b).finish();
    }
    case IdentityId::CrossChecks: {
      CrossCheckBounds bd;
      for (std::uint64_t* v : {&bd.stirling_max, &bd.index_max, &bd.r_max, &bd.m_max, &bd.k_max,
                               &bd.bernoulli_max, &bd.open_m_max, &bd.open_k_max}) {
        *v = std::min(*v, n_max);
      }
      return cross_check_suite(bd);
    }
    default:
      return verify_sums(id, n_max);
  }
}

}  // namespace gfkit
