#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hlnum/complete_intersection.hpp"
#include "hlnum/diamond.hpp"

namespace hlnum {

// Description of a smooth connected projective variety, as read from input
// files: projective space, a complete intersection, a product of such, or an
// explicit Hodge diamond.
struct VarietySpec {
    enum class Kind { pn, ci, product, diamond };

    Kind kind = Kind::pn;
    int n = 0;                        // pn
    CISpec ci;                        // ci
    std::vector<VarietySpec> factors; // product
    HodgeDiamond table{0};            // diamond

    int dim() const;
};

// Parses {"kind": "pn" | "ci" | "product" | "diamond", ...}.  Every
// diagnostic names the offending field by JSON path.  The resulting variety
// always has dimension >= 1.
VarietySpec parse_variety(const nlohmann::json& j);

// one-line description, e.g. ci(3, [5]) x pn(1)
std::string describe(const VarietySpec& spec);

HodgeDiamond diamond_of(const VarietySpec& spec);

} // namespace hlnum
