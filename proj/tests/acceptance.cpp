// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// an exact equality; the only thresholds are the wall-clock limits.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gfkit/cli.hpp"
#include "gfkit/identities.hpp"
#include "gfkit/json_io.hpp"
#include "gfkit/remainders.hpp"
#include "gfkit/sequences.hpp"
#include "gfkit/series.hpp"
#include "oracles.hpp"

using namespace gfkit;

namespace {

// Collects mismatches for one criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) {
      failures_.push_back(what);
    }
    failed_ += ok ? 0 : 1;
  }
  template <class A, class B>
  void equal(const A& a, const B& b, const std::string& what) {
    expect(a == b, what);
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  std::size_t failed() const { return failed_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string at(std::initializer_list<std::uint64_t> idx) {
  std::string s = "(";
  for (auto v : idx) {
    s += (s.size() > 1 ? "," : "") + std::to_string(v);
  }
  return s + ")";
}

Integer signed_by(const Integer& v, std::uint64_t e) { return e % 2 == 0 ? v : Integer(-v); }

int g_failed = 0;

void criterion(const std::string& id, const std::string& title, double limit_seconds,
               const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  const bool pass = t.ok() && in_time;
  g_failed += pass ? 0 : 1;

  std::ostringstream line;
  line << (pass ? "[PASS] " : "[FAIL] ") << id << " " << title << ": " << t.checks()
       << " checks, " << t.failed() << " failed, " << std::fixed << std::setprecision(2) << secs
       << " s";
  if (limit_seconds > 0) {
    line << " (limit " << limit_seconds << " s)";
  }
  std::cout << line.str() << '\n';
  for (const auto& f : t.failures()) {
    std::cout << "       " << f << '\n';
  }
  if (!in_time) {
    std::cout << "       runtime limit exceeded\n";
  }
}

}  // namespace

int main() {
  criterion("AC1", "identities 12/67/84/85 and k^m reformulations, n <= 100", 5.0, [](Tally& t) {
    for (IdentityId id : {IdentityId::ID12, IdentityId::ID67, IdentityId::ID84, IdentityId::ID85,
                          IdentityId::ID67R, IdentityId::ID84R, IdentityId::ID85R}) {
      const auto rep = verify_identity(id, 100);
      for (const auto& i : rep.instances) {
        t.expect(i.pass && i.lhs == i.rhs, std::string(to_string(id)) + " " + i.check);
      }
    }
    // Spot values straight from the closed forms.
    t.equal(alternating_power_sum(100, 100), factorial(100), "ID67 at n = 100");
    t.equal(alternating_power_sum(101, 100), Integer(100 * factorial(101) / 2), "ID85 at n = 100");
    t.equal(alternating_power_sum(99, 100), Integer(0), "ID84 at (99, 100)");
  });

  criterion("AC2", "derivative-limit pipeline, m, n <= 15 at order m+n+5", 5.0, [](Tally& t) {
    for (std::uint64_t m = 0; m <= 15; ++m) {
      for (std::uint64_t n = 0; n <= 15; ++n) {
        const auto rep = verify_derivative_limit(m, n, m + n + 5);
        t.expect(rep.pass(), "derivative limit " + at({m, n}));
        const Rational closed =
            m >= n ? Rational(factorial(n) * stirling2_sum(m, n)) : Rational(0);
        t.equal(rep.instances.front().lhs, Rational(alternating_power_sum(m, n)),
                "limit vs sum " + at({m, n}));
        t.equal(rep.instances.front().lhs, closed, "limit vs n! S(m,n) " + at({m, n}));
      }
    }
  });

  criterion("AC3", "S(m,n) via GF = alternating sum (m <= 40); s(j,l) via GF = recurrence (j <= 25)",
            10.0, [](Tally& t) {
              for (std::uint64_t m = 0; m <= 40; ++m) {
                for (std::uint64_t n = 0; n <= m; ++n) {
                  t.equal(stirling2_gf(m, n), stirling2_sum(m, n), "S" + at({m, n}));
                }
              }
              const auto rec = oracle::stirling1_recurrence(25);
              for (std::uint64_t j = 0; j <= 25; ++j) {
                for (std::uint64_t l = 0; l <= j; ++l) {
                  t.equal(stirling1(j, l), rec[j][l], "s" + at({j, l}));
                }
              }
            });

  criterion("AC4", "Bernoulli numbers from x/(e^x - 1)", 0, [](Tally& t) {
    t.equal(bernoulli(0), Rational(1), "B_0");
    t.equal(bernoulli(1), Rational(Integer(-1), Integer(2)), "B_1");
    for (std::uint64_t k = 1; k <= 15; ++k) {
      t.equal(bernoulli(2 * k + 1), Rational(0), "B_" + std::to_string(2 * k + 1));
    }
    const PowerSeries a = exp_remainder(0, 40);
    t.expect(mul(a, reciprocal(a)) == PowerSeries::one(40), "(e^x-1)/x * x/(e^x-1) = 1");
    t.equal(mul(a, reciprocal(a)).order(), std::size_t{40}, "product order");
    for (std::uint64_t n = 0; n <= 30; ++n) {
      Rational sum;
      for (std::uint64_t k = 0; k <= n; ++k) {
        const Rational term =
            Rational(factorial(k), Integer(k + 1)) * Rational(stirling2_sum(n, k));
        sum += k % 2 == 0 ? term : -term;
      }
      t.equal(bernoulli(n), sum, "B_n = sum (-1)^k k!/(k+1) S(n,k) at n = " + std::to_string(n));
    }
  });

  criterion("AC5", "r = 0 reductions to classical Stirling numbers, indices <= 25", 0, [](Tally& t) {
    const auto s1 = oracle::stirling1_recurrence(50);
    const auto s2 = oracle::stirling2_recurrence(50);
    for (std::uint64_t a = 0; a <= 25; ++a) {
      for (std::uint64_t b = 0; b <= 25; ++b) {
        t.equal(howard_S(0, a, b), Rational(s2[a + b][a]), "S_0" + at({b + a, a}));
        t.equal(howard_s(0, b, a), Rational(signed_by(s1[a][b], a + b)), "s_0" + at({a, b}));
        const auto bi = static_cast<std::int64_t>(b);
        t.equal(rstirling1(a, bi, 0), signed_by(s1[a][b], a + b), "[k m]_0" + at({a, b}));
        t.equal(rstirling2(a, bi, 0), s2[a][b], "{k m}_0" + at({a, b}));
      }
    }
  });

  criterion("AC6", "r-Stirling GF vs rewritten GF, r <= 3, m <= 5, k <= 20", 0, [](Tally& t) {
    for (std::uint64_t r = 0; r <= 3; ++r) {
      const auto first = oracle::r_stirling_recurrence(30, r, true);
      const auto second = oracle::r_stirling_recurrence(30, r, false);
      for (std::uint64_t m = 0; m <= 5; ++m) {
        const auto mi = static_cast<std::int64_t>(m);
        for (std::uint64_t k = 0; k <= 20; ++k) {
          const Integer v1 = rstirling1(k + m, mi, r);
          t.equal(v1, rstirling1_from_rewrite(k, mi, r), "[.]_r" + at({k, m, r}));
          t.equal(v1, first[k + m + r][m + r], "[.]_r recurrence" + at({k, m, r}));
          const Integer v2 = rstirling2(k + m, mi, r);
          t.equal(v2, rstirling2_from_rewrite(k, mi, r), "{.}_r" + at({k, m, r}));
          t.equal(v2, second[k + m + r][m + r], "{.}_r recurrence" + at({k, m, r}));
        }
      }
    }
  });

  criterion("AC7", "open-problem sequences F and Q", 0, [](Tally& t) {
    for (std::uint64_t r = 0; r <= 3; ++r) {
      const auto first = oracle::r_stirling_recurrence(30, r, true);
      const auto second = oracle::r_stirling_recurrence(30, r, false);
      for (std::uint64_t m = 0; m <= 4; ++m) {
        for (std::uint64_t k = 0; k <= 15; ++k) {
          const Rational weight(binomial(k + m, static_cast<std::int64_t>(m)));
          if (r == 0) {
            t.equal(seq_F(0, 0, m, k), Rational(signed_by(first[k + m][m], k)) / weight,
                    "F(0,0,m,k)" + at({m, k}));
          }
          t.equal(seq_Q(r, 0, m, k), Rational(second[k + m + r][m + r]) / weight,
                  "Q(r,0,m,k)" + at({r, m, k}));
        }
      }
    }
    const Rational half(Integer(1), Integer(2));
    const Rational third(Integer(1), Integer(3));
    for (std::uint64_t s = 0; s <= 3; ++s) {
      t.equal(seq_F(third, s, half, 0), Rational(1), "F(1/3,s,1/2,0)" + at({s}));
      t.equal(seq_Q(third, s, half, 0), Rational(1), "Q(1/3,s,1/2,0)" + at({s}));
      for (std::uint64_t k = 1; k <= 15; ++k) {
        seq_F(third, s, half, k);
        seq_Q(third, s, half, k);
      }
    }
  });

  criterion("AC8", "normalized remainder laws, r <= 10 at order 40, 20 random reconstructions", 0,
            [](Tally& t) {
              const std::size_t order = 40;
              for (std::size_t r = 0; r <= 10; ++r) {
                const PowerSeries e = exp_remainder(r, order);
                const PowerSeries l = log_remainder(r, order);
                const PowerSeries e_gen = normalized_remainder(build(ExpCx{1}, order + r + 1), r);
                const PowerSeries l_gen = normalized_remainder(build(Log1p{}, order + r + 1), r);
                for (const auto* s : {&e, &l, &e_gen, &l_gen}) {
                  t.equal((*s)[0], Rational(1), "constant term at r = " + std::to_string(r));
                  t.equal(s->order(), order, "order at r = " + std::to_string(r));
                }
                t.expect(e == e_gen, "exp_remainder vs T_r[e^x] at r = " + std::to_string(r));
                t.expect(l == l_gen, "log_remainder vs T_r[ln(1+x)] at r = " + std::to_string(r));
                if (r >= 1) {
                  const PowerSeries over_x = shift_divide(build(Log1p{}, order + r + 1), 1);
                  t.expect(l == normalized_remainder(over_x, r - 1),
                           "log_remainder vs T_{r-1}[ln(1+x)/x] at r = " + std::to_string(r));
                }
              }
              oracle::RationalSource src(20240611);
              int done = 0;
              while (done < 20) {
                const std::size_t n_ord = src.index(2, 20);
                const PowerSeries f = src.series(n_ord);
                const std::size_t n = src.index(0, n_ord - 1);
                if (f[n + 1].is_zero()) {
                  continue;
                }
                const PowerSeries tail = normalized_remainder(f, n);
                t.equal(tail[0], Rational(1), "random remainder constant term");
                std::vector<Rational> c(n_ord + 1);
                for (std::size_t k = 0; k <= n; ++k) {
                  c[k] = f[k];
                }
                for (std::size_t j = 0; j <= tail.order(); ++j) {
                  c[n + 1 + j] += f[n + 1] * tail[j];
                }
                t.expect(PowerSeries(c) == f, "reconstruction #" + std::to_string(done));
                ++done;
              }
            });

  criterion("AC9", "CLI: verify all --n-max 50 exits 0; table JSON round-trips", 0, [](Tally& t) {
    std::ostringstream out;
    std::ostringstream err;
    t.equal(cli::run({"verify", "all", "--n-max", "50"}, out, err), 0, "verify all exit code");
    t.expect(out.str().find("all identities hold") != std::string::npos, "verify all summary");

    const std::vector<std::pair<std::string, Family>> families{
        {"stirling2", Family::Stirling2}, {"stirling1", Family::Stirling1},
        {"bernoulli", Family::Bernoulli}, {"howard-S", Family::HowardS},
        {"howard-s", Family::Howard_s},   {"howard-A", Family::HowardA},
        {"rstirling1", Family::RStirling1}, {"rstirling2", Family::RStirling2},
        {"F", Family::SeqF},              {"Q", Family::SeqQ},
    };
    for (const auto& [name, family] : families) {
      std::ostringstream jout;
      std::ostringstream jerr;
      const int code = cli::run({"table", name, "--r", "1", "--m", "1/2", "--t", "1/3", "--k-max",
                                 "8", "--m-max", "4", "--format", "json"},
                                jout, jerr);
      t.equal(code, 0, "table " + name + " exit code");
      TableRequest q;
      q.family = family;
      q.r = 1;
      q.m = Rational(Integer(1), Integer(2));
      q.t = Rational(Integer(1), Integer(3));
      q.k_max = 8;
      q.m_max = 4;
      const auto expected = generate_table(q);
      const auto arr = nlohmann::json::parse(jout.str());
      t.equal(arr.size(), expected.size(), "table " + name + " row count");
      for (std::size_t i = 0; i < arr.size() && i < expected.size(); ++i) {
        const SequenceEntry e = entry_from_json(arr[i]);
        t.expect(e == expected[i], "table " + name + " row " + std::to_string(i));
        t.expect(to_json(e) == arr[i], "table " + name + " re-encode row " + std::to_string(i));
      }
    }
  });

  std::cout << (g_failed == 0 ? "acceptance: all criteria pass" : "acceptance: FAILED") << '\n';
  return g_failed == 0 ? 0 : 1;
}
