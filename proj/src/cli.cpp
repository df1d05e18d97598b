#include "gfkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "gfkit/identities.hpp"
#include "gfkit/json_io.hpp"
#include "gfkit/remainders.hpp"
#include "gfkit/sequences.hpp"
#include "gfkit/series.hpp"

namespace gfkit::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

constexpr std::uint64_t kDefaultOrder = 64;
constexpr std::uint64_t kDefaultNMax = 50;
constexpr std::uint64_t kDefaultTableBound = 20;

struct Options {
  std::string selector;
  std::string r = "0";
  std::string s = "0";
  std::string m = "1";
  std::string t = "0";
  std::string c = "1";
  std::uint64_t degree = 1;
  std::uint64_t k_max = kDefaultTableBound;
  std::uint64_t m_max = kDefaultTableBound;
  std::uint64_t n_max = kDefaultNMax;
  std::uint64_t order = kDefaultOrder;
  std::string log_remainder = "log1p";
  Format format = Format::Text;
  std::string out_path;
};

Rational parse_rational_arg(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

std::uint64_t parse_natural_arg(const std::string& text, const char* name) {
  const Rational v = parse_rational_arg(text, name);
  if (!v.is_integer() || v.sign() < 0 || !v.numerator().fits_ulong_p()) {
    throw UsageError(std::string("--") + name + " must be a nonnegative integer, got " + text);
  }
  return v.numerator().get_ui();
}

Family parse_family(const std::string& name) {
  static const std::map<std::string, Family> aliases{
      {"stirling2", Family::Stirling2},   {"stirling1", Family::Stirling1},
      {"bernoulli", Family::Bernoulli},   {"howard-S", Family::HowardS},
      {"howard-s", Family::Howard_s},     {"howard-A", Family::HowardA},
      {"rstirling1", Family::RStirling1}, {"rstirling2", Family::RStirling2},
      {"F", Family::SeqF},                {"Q", Family::SeqQ},
  };
  if (auto it = aliases.find(name); it != aliases.end()) {
    return it->second;
  }
  if (auto f = family_from_string(name)) {
    return *f;
  }
  throw UsageError("unknown family '" + name + "'");
}

std::vector<IdentityId> parse_identities(const std::string& name) {
  if (name == "all") {
    return {kAllIdentities.begin(), kAllIdentities.end()};
  }
  static const std::map<std::string, IdentityId> aliases{
      {"12", IdentityId::ID12},
      {"67", IdentityId::ID67},
      {"84", IdentityId::ID84},
      {"85", IdentityId::ID85},
      {"67R", IdentityId::ID67R},
      {"84R", IdentityId::ID84R},
      {"85R", IdentityId::ID85R},
      {"binomial-series", IdentityId::BinomialSeries},
      {"deriv-limit", IdentityId::DerivLimit},
      {"cross-checks", IdentityId::CrossChecks},
  };
  if (auto it = aliases.find(name); it != aliases.end()) {
    return {it->second};
  }
  if (auto id = identity_from_string(name)) {
    return {*id};
  }
  throw UsageError("unknown identity '" + name + "'");
}

std::string format_entry_text(const SequenceEntry& e) {
  std::string s(to_string(e.family));
  s += '(';
  for (std::size_t i = 0; i < e.indices.size(); ++i) {
    if (i > 0) {
      s += ", ";
    }
    s += e.indices[i].str();
  }
  return s + ") = " + e.value.str();
}

int run_table(const Options& o, std::ostream& out) {
  TableRequest q;
  q.family = parse_family(o.selector);
  q.r = parse_rational_arg(o.r, "r");
  q.s = parse_rational_arg(o.s, "s");
  q.m = parse_rational_arg(o.m, "m");
  q.t = parse_rational_arg(o.t, "t");
  q.k_max = o.k_max;
  q.m_max = o.m_max;
  if (o.log_remainder == "log1p") {
    q.indexing = LogRemainderIndexing::Log1p;
  } else if (o.log_remainder == "log1p-over-x") {
    q.indexing = LogRemainderIndexing::Log1pOverX;
  } else {
    throw UsageError("--log-remainder must be log1p or log1p-over-x");
  }
  const auto rows = generate_table(q);
  switch (o.format) {
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& e : rows) {
        arr.push_back(to_json(e));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      for (const auto& e : rows) {
        out << to_csv_row(e) << '\n';
      }
      break;
    case Format::Text:
      for (const auto& e : rows) {
        out << format_entry_text(e) << '\n';
      }
      break;
  }
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
  const auto ids = parse_identities(o.selector);
  std::vector<IdentityReport> reports;
  reports.reserve(ids.size());
  for (IdentityId id : ids) {
    reports.push_back(verify_identity(id, o.n_max));
  }
  const bool green = std::all_of(reports.begin(), reports.end(),
                                 [](const IdentityReport& r) { return r.pass(); });
  if (o.format == Format::Json) {
    if (reports.size() == 1) {
      out << to_json(reports.front()).dump(2) << '\n';
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) {
        arr.push_back(to_json(r));
      }
      out << arr.dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) {
      out << to_string(r.id) << " [";
      for (std::size_t i = 0; i < r.range.size(); ++i) {
        out << (i > 0 ? " " : "") << r.range[i].first << '=' << r.range[i].second;
      }
      out << "]: " << (r.pass() ? "PASS" : "FAIL") << " (" << r.instances.size()
          << " instances)\n";
      for (const auto& f : r.failures()) {
        out << "  " << f.check << " (";
        for (std::size_t i = 0; i < f.params.size(); ++i) {
          out << (i > 0 ? ", " : "") << f.params[i];
        }
        out << "): lhs = " << f.lhs << ", rhs = " << f.rhs << '\n';
      }
    }
    out << (green ? "all identities hold" : "verification FAILED") << '\n';
  }
  return green ? kExitOk : kExitFailure;
}

void print_series(const PowerSeries& s, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << to_json(s).dump() << '\n';
      break;
    case Format::Csv:
      for (std::size_t k = 0; k <= s.order(); ++k) {
        out << k << ',' << s[k] << '\n';
      }
      break;
    case Format::Text:
      out << to_string(s) << '\n';
      break;
  }
}

int run_remainder(const Options& o, std::ostream& out) {
  const std::uint64_t r = parse_natural_arg(o.r, "r");
  PowerSeries s = PowerSeries::zero(0);
  if (o.selector == "exp") {
    s = exp_remainder(r, o.order);
  } else if (o.selector == "log") {
    s = log_remainder(r, o.order);
  } else if (o.selector == "log1p-over-x") {
    s = remainder_series({RemainderBase::Log1pOverX, r}, o.order);
  } else {
    throw UsageError("unknown remainder '" + o.selector + "' (expected exp, log, log1p-over-x)");
  }
  print_series(s, o.format, out);
  return kExitOk;
}

int run_series(const Options& o, std::ostream& out) {
  SeriesKind kind;
  if (o.selector == "exp") {
    kind = ExpCx{parse_rational_arg(o.c, "c")};
  } else if (o.selector == "log1p") {
    kind = Log1p{};
  } else if (o.selector == "log-geometric") {
    kind = LogGeometric{};
  } else if (o.selector == "geometric-pow") {
    kind = GeometricPow{parse_rational_arg(o.r, "r")};
  } else if (o.selector == "monomial") {
    kind = Monomial{parse_rational_arg(o.c, "c"), o.degree};
  } else if (o.selector == "constant") {
    kind = Constant{parse_rational_arg(o.c, "c")};
  } else {
    throw UsageError("unknown series builder '" + o.selector + "'");
  }
  print_series(build(kind, o.order), o.format, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact generating-function toolkit for Stirling-type sequences", "gfkit"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", o.out_path, "Write output to this file");
  };

  auto* table = app.add_subcommand("table", "Generate a sequence table");
  table->add_option("family", o.selector,
                    "stirling2, stirling1, bernoulli, howard-S, howard-s, howard-A, "
                    "rstirling1, rstirling2, F, Q")
      ->required();
  table->add_option("--r", o.r, "Parameter r (rational p/q for F, Q)");
  table->add_option("--s", o.s, "Remainder index s for F, Q");
  table->add_option("--m", o.m, "Exponent m for F, Q (rational p/q)");
  table->add_option("--t", o.t, "Argument t for howard-A (rational p/q)");
  table->add_option("--k-max", o.k_max, "Largest k / j index");
  table->add_option("--m-max", o.m_max, "Largest m / l index");
  table->add_option("--log-remainder", o.log_remainder,
                    "Log remainder used by F: log1p (default) or log1p-over-x");
  add_common(table);

  auto* verify = app.add_subcommand("verify", "Verify identities exactly");
  verify->add_option("identity", o.selector,
                     "all, 12, 67, 84, 85, 67R, 84R, 85R, binomial-series, deriv-limit, "
                     "cross-checks")
      ->required();
  verify->add_option("--n-max", o.n_max, "Largest n checked");
  add_common(verify);

  auto* remainder = app.add_subcommand("remainder", "Print a normalized remainder series");
  remainder->add_option("base", o.selector, "exp, log or log1p-over-x")->required();
  remainder->add_option("--r", o.r, "Remainder index")->required();
  remainder->add_option("--order", o.order, "Truncation order");
  add_common(remainder);

  auto* series = app.add_subcommand("series", "Print a built series");
  series->add_option("builder", o.selector,
                     "exp, log1p, log-geometric, geometric-pow, monomial, constant")
      ->required();
  series->add_option("--c", o.c, "Coefficient c (exp, monomial, constant)");
  series->add_option("--r", o.r, "Exponent r (geometric-pow)");
  series->add_option("--degree", o.degree, "Degree (monomial)");
  series->add_option("--order", o.order, "Truncation order");
  add_common(series);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "gfkit: cannot open '" << o.out_path << "' for writing\n";
      return kExitFailure;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;

  try {
    if (table->parsed()) {
      return run_table(o, sink);
    }
    if (verify->parsed()) {
      return run_verify(o, sink);
    }
    if (remainder->parsed()) {
      return run_remainder(o, sink);
    }
    return run_series(o, sink);
  } catch (const UsageError& e) {
    err << "gfkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "gfkit: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace gfkit::cli
