#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hlnum/diamond.hpp"
#include "hlnum/rational.hpp"

namespace hlnum {

struct PQ {
    int p, q;
    auto operator<=>(const PQ&) const = default;
};

// Hodge multiplicities h^{p,q} of a mixed Hodge structure supported at a
// point; p and q may be negative, the weight of an entry is p + q.
class PunctualMHS {
public:
    PunctualMHS() = default;

    Int at(int p, int q) const;
    void set(int p, int q, const Int& v); // v >= 0; v == 0 erases
    void add(int p, int q, const Int& v);

    bool is_zero() const { return entries_.empty(); }
    Int total() const;

    const std::map<PQ, Int>& entries() const { return entries_; }

    friend bool operator==(const PunctualMHS& a, const PunctualMHS& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::map<PQ, Int> entries_;
};

// Tate twist by k: the multiplicity at (p, q) moves to (p - k, q - k), so a
// twist by -1 raises both indices by one.
PunctualMHS tate_twist(const PunctualMHS& m, int k);

// dual structure: multiplicity at (p, q) moves to (-p, -q)
PunctualMHS dual_punctual(const PunctualMHS& m);

// Local cohomology H^s at an isolated singular point of a d-dimensional
// germ, each group a punctual structure, for 0 <= s <= 2d.  Groups H^0 and
// H^1 can be stored (to represent arbitrary user input) but are flagged by
// validate(); both vanish for honest isolated singularities of cones.
class LinkCohomology {
public:
    explicit LinkCohomology(int d); // d >= 2

    int d() const { return d_; }

    void set_group(int s, PunctualMHS h); // 0 <= s <= 2d
    const PunctualMHS& group(int s) const;

    const std::map<int, PunctualMHS>& groups() const { return groups_; }

    std::vector<std::string> validate() const;

    friend bool operator==(const LinkCohomology& a, const LinkCohomology& b) {
        return a.d_ == b.d_ && a.groups_ == b.groups_;
    }

private:
    int d_;
    std::map<int, PunctualMHS> groups_; // nonzero groups only
};

// Local cohomology of the affine cone over a smooth connected projective
// variety of dimension dim >= 1, at the vertex; d = dim + 1.  For 2 <= s <= d
// the group is the primitive part of H^{s-1} of the base; for d+1 <= s <= 2d
// it is the coprimitive part of H^{s-2}, Tate twisted by -1.  Throws
// std::invalid_argument when the input fails validate_diamond.
LinkCohomology cone_link(const HodgeDiamond& base);

} // namespace hlnum
