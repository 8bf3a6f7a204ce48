#pragma once

#include <stdexcept>

namespace hlnum {

// Reciprocal of a truncated series whose constant term is zero.
struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

// chi_y evaluation at y = -1, where every Chern-root factor degenerates.
struct DegenerateEvaluation : std::domain_error {
    using std::domain_error::domain_error;
};

// A primitive/coprimitive subtraction went negative.  The input table is not
// the Hodge diamond of a smooth projective variety.
struct HardLefschetzViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// An identity that holds by construction failed; this is a bug, not bad input.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace hlnum
