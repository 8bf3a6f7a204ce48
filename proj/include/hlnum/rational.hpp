#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "hlnum/errors.hpp"

namespace hlnum {

using Int = mpz_class; // arbitrary-precision integer
using Rat = mpq_class; // arbitrary-precision rational, kept in lowest terms

// mpq_class does not reduce two-argument constructions (1/3 and 2/6 would
// compare unequal), so every numerator/denominator build goes through here.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& x) {
    return x.get_den() == 1;
}

// exact conversion; a leftover denominator means an arithmetic bug upstream
inline Int to_integer(const Rat& x) {
    if (!is_integer(x))
        throw InternalInconsistency("expected integer, got " + x.get_str());
    return x.get_num();
}

} // namespace hlnum
