#ifndef GFKIT_JSON_IO_HPP
#define GFKIT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "gfkit/identities.hpp"
#include "gfkit/sequences.hpp"
#include "gfkit/series.hpp"

namespace gfkit {

// Rationals travel as "p/q" strings. Sequence indices that are integers are
// written as JSON numbers, the rest as "p/q" strings; both are accepted back.

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

// {"order": N, "coeffs": ["p/q", ...]}
nlohmann::json to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

// {"family": "STIRLING2", "indices": [4, 2], "value": "7"}
nlohmann::json to_json(const SequenceEntry& e);
SequenceEntry entry_from_json(const nlohmann::json& j);

// {"identity": "ID67", "range": {...}, "instances": 21, "failures": [...], "pass": true}
nlohmann::json to_json(const IdentityReport& r);

// Indices then value, comma separated, no trailing newline.
std::string to_csv_row(const SequenceEntry& e);

}  // namespace gfkit

#endif  // GFKIT_JSON_IO_HPP
