#include "gfkit/series.hpp"

#include <algorithm>
#include <sstream>

namespace gfkit {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InvalidArgument("power series needs at least one coefficient");
  }
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<Rational>(order + 1));
}

PowerSeries PowerSeries::one(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  return PowerSeries(std::move(c));
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1),
                    b.coeffs_.begin());
}

namespace {

struct Builder {
  std::size_t order;

  PowerSeries operator()(const ExpCx& e) const {
    std::vector<Rational> c(order + 1);
    Rational term = 1;
    for (std::size_t k = 0; k <= order; ++k) {
      c[k] = term;
      term = term * e.c / Rational(k + 1);
    }
    return PowerSeries(std::move(c));
  }

  PowerSeries operator()(const Log1p&) const {
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
      c[k] = Rational(sign_power(static_cast<std::int64_t>(k) - 1), Integer(k));
    }
    return PowerSeries(std::move(c));
  }

  PowerSeries operator()(const LogGeometric&) const {
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
      c[k] = Rational(1, Integer(k));
    }
    return PowerSeries(std::move(c));
  }

  PowerSeries operator()(const GeometricPow& g) const {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    if (order >= 1) {
      c[1] = -1;
    }
    return rational_pow(PowerSeries(std::move(c)), -g.r);
  }

  PowerSeries operator()(const Monomial& m) const {
    std::vector<Rational> c(order + 1);
    if (m.degree <= order) {
      c[m.degree] = m.c;
    }
    return PowerSeries(std::move(c));
  }

  PowerSeries operator()(const Constant& k) const {
    std::vector<Rational> c(order + 1);
    c[0] = k.c;
    return PowerSeries(std::move(c));
  }
};

}  // namespace

PowerSeries build(const SeriesKind& kind, std::size_t order) {
  return std::visit(Builder{order}, kind);
}

PowerSeries truncate(const PowerSeries& a, std::size_t order) {
  if (order > a.order()) {
    throw TruncationError("cannot extend a series of order " + std::to_string(a.order()) +
                          " to order " + std::to_string(order));
  }
  auto c = a.coeffs();
  return PowerSeries(std::vector<Rational>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = a[k] + b[k];
  }
  return PowerSeries(std::move(c));
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = a[k] - b[k];
  }
  return PowerSeries(std::move(c));
}

PowerSeries scale(const PowerSeries& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) {
    v *= s;
  }
  return PowerSeries(std::move(c));
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) {
        c[i + j] += a[i] * b[j];
      }
    }
  }
  return PowerSeries(std::move(c));
}

PowerSeries integer_pow(const PowerSeries& a, std::uint64_t exponent) {
  PowerSeries result = PowerSeries::one(a.order());
  PowerSeries base = a;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = mul(result, base);
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = mul(base, base);
    }
  }
  return result;
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0].is_zero()) {
    throw NotInvertible("series with zero constant term has no reciprocal");
  }
  const std::size_t n = a.order();
  const Rational inv0 = Rational(1) / a[0];
  std::vector<Rational> b(n + 1);
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!a[j].is_zero()) {
        acc += a[j] * b[k - j];
      }
    }
    b[k] = -inv0 * acc;
  }
  return PowerSeries(std::move(b));
}

PowerSeries derivative(const PowerSeries& a) {
  if (a.order() == 0) {
    throw TruncationError("derivative of an order-0 series is empty");
  }
  std::vector<Rational> d(a.order());
  for (std::size_t k = 0; k < d.size(); ++k) {
    d[k] = Rational(k + 1) * a[k + 1];
  }
  return PowerSeries(std::move(d));
}

PowerSeries derivative(const PowerSeries& a, std::size_t times) {
  PowerSeries r = a;
  for (std::size_t i = 0; i < times; ++i) {
    r = derivative(r);
  }
  return r;
}

PowerSeries log_series(const PowerSeries& a) {
  if (a[0] != Rational(1)) {
    throw InvalidArgument("log_series needs constant term 1, got " + a[0].str());
  }
  // a' = a * b' with b = ln a.
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j < k; ++j) {
      if (!a[k - j].is_zero()) {
        acc += Rational(j) * b[j] * a[k - j];
      }
    }
    b[k] = a[k] - acc / Rational(k);
  }
  return PowerSeries(std::move(b));
}

PowerSeries exp_series(const PowerSeries& a) {
  if (!a[0].is_zero()) {
    throw InvalidArgument("exp_series needs constant term 0, got " + a[0].str());
  }
  // e' = a' * e.
  const std::size_t n = a.order();
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!a[j].is_zero()) {
        acc += Rational(j) * a[j] * e[k - j];
      }
    }
    e[k] = acc / Rational(k);
  }
  return PowerSeries(std::move(e));
}

PowerSeries rational_pow(const PowerSeries& a, const Rational& alpha) {
  if (a[0] != Rational(1)) {
    throw InvalidArgument("rational_pow needs constant term 1, got " + a[0].str());
  }
  return exp_series(scale(log_series(a), alpha));
}

PowerSeries shift_divide(const PowerSeries& a, std::size_t r) {
  if (r > a.order()) {
    throw TruncationError("cannot divide an order-" + std::to_string(a.order()) +
                          " series by x^" + std::to_string(r));
  }
  for (std::size_t k = 0; k < r; ++k) {
    if (!a[k].is_zero()) {
      throw NotDivisible("coefficient of x^" + std::to_string(k) + " is " + a[k].str() +
                         ", series is not divisible by x^" + std::to_string(r));
    }
  }
  auto c = a.coeffs();
  return PowerSeries(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(r), c.end()));
}

const Rational& coefficient(const PowerSeries& a, std::size_t k) {
  if (k > a.order()) {
    throw IndexError("coefficient index " + std::to_string(k) + " beyond order " +
                     std::to_string(a.order()));
  }
  return a[k];
}

Rational egf_coefficient(const PowerSeries& a, std::size_t k) {
  return Rational(factorial(k)) * coefficient(a, k);
}

std::string to_string(const PowerSeries& a) {
  std::ostringstream os;
  for (std::size_t k = 0; k <= a.order(); ++k) {
    if (k > 0) {
      os << " + ";
    }
    os << a[k].str();
    if (k == 1) {
      os << "*x";
    } else if (k > 1) {
      os << "*x^" << k;
    }
  }
  os << " (order " << a.order() << ")";
  return os.str();
}

}  // namespace gfkit
