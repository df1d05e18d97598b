#include "gfkit/remainders.hpp"

namespace gfkit {

std::string_view to_string(RemainderBase base) {
  switch (base) {
    case RemainderBase::Exp:
      return "exp";
    case RemainderBase::Log1p:
      return "log1p";
    case RemainderBase::Log1pOverX:
      return "log1p_over_x";
  }
  return "?";
}

PowerSeries normalized_remainder(const PowerSeries& f, std::size_t n) {
  if (f.order() < n + 1) {
    throw TruncationError("T_" + std::to_string(n) + " needs order >= " + std::to_string(n + 1) +
                          ", series has order " + std::to_string(f.order()));
  }
  const Rational& lead = f[n + 1];
  if (lead.is_zero()) {
    throw UndefinedRemainder("T_" + std::to_string(n) + "[f] undefined: f^(" +
                             std::to_string(n + 1) + ")(0) = 0");
  }
  std::vector<Rational> c(f.order() - n);
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = f[n + 1 + j] / lead;
  }
  return PowerSeries(std::move(c));
}

PowerSeries remainder_series(const RemainderSpec& spec, std::size_t order) {
  const std::size_t need = order + spec.n + 1;
  switch (spec.base) {
    case RemainderBase::Exp:
      return normalized_remainder(build(ExpCx{1}, need), spec.n);
    case RemainderBase::Log1p:
      return normalized_remainder(build(Log1p{}, need), spec.n);
    case RemainderBase::Log1pOverX:
      return normalized_remainder(shift_divide(build(Log1p{}, need + 1), 1), spec.n);
  }
  throw InvalidArgument("unknown remainder base");
}

PowerSeries exp_remainder(std::size_t r, std::size_t order) {
  std::vector<Rational> c(order + 1);
  const Integer head = factorial(r + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    c[k] = Rational(head, factorial(k + r + 1));
  }
  return PowerSeries(std::move(c));
}

PowerSeries log_remainder(std::size_t r, std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t j = 0; j <= order; ++j) {
    c[j] = Rational(Integer(sign_power(static_cast<std::int64_t>(j))) * Integer(r + 1),
                    Integer(r + 1 + j));
  }
  return PowerSeries(std::move(c));
}

}  // namespace gfkit
