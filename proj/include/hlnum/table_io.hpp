#pragma once

#include <string>

#include "json.hpp"

#include "hlnum/diamond.hpp"
#include "hlnum/hl_table.hpp"
#include "hlnum/punctual.hpp"

namespace hlnum {

// Entry values are emitted as JSON integers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
nlohmann::json json_from_int(const Int& v);
Int int_from_json(const nlohmann::json& j, const std::string& path);

// {"d": ..., "H": {"2": [[p, q, dim], ...], ...}}
LinkCohomology parse_link_file(const nlohmann::json& j);

// {"d": ..., "entries": [[r, s, p, q, value], ...]}; "classical" and
// "checks" blocks are accepted and ignored (they are recomputed)
HLTable parse_table_json(const nlohmann::json& j);

// Canonical serialization: keys in a fixed order, entries sorted by
// (r, s, p, q), classical marginals sorted by (r, s), checker verdicts last.
// Equal tables serialize to identical bytes.
nlohmann::ordered_json table_to_json(const HLTable& t);

std::string render_table_pretty(const HLTable& t);
std::string render_table_csv(const HLTable& t);

nlohmann::ordered_json diamond_to_json(const HodgeDiamond& d);
std::string render_diamond_pretty(const HodgeDiamond& d);
std::string render_diamond_csv(const HodgeDiamond& d);

} // namespace hlnum
