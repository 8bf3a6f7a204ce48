#pragma once

#include <string>
#include <vector>

#include "hlnum/variety.hpp"

namespace hlnum {

struct OracleLine {
    std::string name;   // which cross-check ran
    bool pass = false;
    std::string detail; // what was compared
};

// Runs every independent cross-check that applies to the given variety:
// for each complete-intersection node, the degree-1 reduction, the Euler
// characteristic via Chern classes against the chi coefficients and the
// Betti numbers, and Hodge symmetry of the chi coefficients; for
// single-degree nodes, agreement of the middle Hodge row with the
// Jacobian-ring count; for the variety as a whole, agreement of the direct
// cone table with the route through the link, plus the Euler and duality
// identities of the resulting table.
std::vector<OracleLine> verify_spec(const VarietySpec& spec);

} // namespace hlnum
