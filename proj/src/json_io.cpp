#include "gfkit/json_io.hpp"

namespace gfkit {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    return Rational::parse(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(j.get<std::int64_t>());
  }
  throw ParseError("expected a rational, got " + j.dump());
}

json to_json(const PowerSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) {
    coeffs.push_back(c.str());
  }
  return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

PowerSeries series_from_json(const json& j) {
  try {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      coeffs.push_back(rational_from_json(c));
    }
    const auto order = j.at("order").get<std::size_t>();
    if (coeffs.size() != order + 1) {
      throw ParseError("series order " + std::to_string(order) + " does not match " +
                       std::to_string(coeffs.size()) + " coefficients");
    }
    return PowerSeries(std::move(coeffs));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what());
  }
}

json to_json(const SequenceEntry& e) {
  json indices = json::array();
  for (const auto& i : e.indices) {
    if (i.is_integer() && i.numerator().fits_slong_p()) {
      indices.push_back(i.numerator().get_si());
    } else {
      indices.push_back(i.str());
    }
  }
  return json{{"family", std::string(to_string(e.family))},
              {"indices", std::move(indices)},
              {"value", e.value.str()}};
}

SequenceEntry entry_from_json(const json& j) {
  try {
    const auto name = j.at("family").get<std::string>();
    const auto family = family_from_string(name);
    if (!family) {
      throw ParseError("unknown family '" + name + "'");
    }
    std::vector<Rational> indices;
    for (const auto& i : j.at("indices")) {
      indices.push_back(rational_from_json(i));
    }
    return SequenceEntry{*family, std::move(indices), rational_from_json(j.at("value"))};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed sequence entry JSON: ") + e.what());
  }
}

json to_json(const IdentityReport& r) {
  json range = json::object();
  for (const auto& [name, bound] : r.range) {
    range[name] = bound;
  }
  json failures = json::array();
  for (const auto& f : r.failures()) {
    failures.push_back(json{{"check", f.check},
                            {"params", f.params},
                            {"lhs", f.lhs.str()},
                            {"rhs", f.rhs.str()}});
  }
  return json{{"identity", std::string(to_string(r.id))},
              {"range", std::move(range)},
              {"instances", r.instances.size()},
              {"failures", std::move(failures)},
              {"pass", r.pass()}};
}

std::string to_csv_row(const SequenceEntry& e) {
  std::string row;
  for (const auto& i : e.indices) {
    row += i.str();
    row += ',';
  }
  row += e.value.str();
  return row;
}

}  // namespace gfkit
