#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hlnum/rational.hpp"

namespace hlnum {

struct DegreePQ {
    int k, p, q;
    auto operator<=>(const DegreePQ&) const = default;
};

// Hodge numbers h^{p,q}(H^k(M)) of a smooth connected projective variety of
// complex dimension `dim`.  Indices are bounds-checked on write; entries are
// stored sparsely (only nonzero values).  Structural conditions like purity
// and Poincare duality are *not* enforced on write; run validate_diamond
// before feeding a hand-built table to downstream constructions.
class HodgeDiamond {
public:
    explicit HodgeDiamond(int dim);

    int dim() const { return dim_; }

    // 0 for any index outside the stored support, including out-of-range ones
    Int at(int k, int p, int q) const;

    // requires 0 <= k <= 2 dim, 0 <= p,q <= dim, v >= 0; v == 0 erases
    void set(int k, int p, int q, const Int& v);
    void add(int k, int p, int q, const Int& v);

    Int betti(int k) const;

    const std::map<DegreePQ, Int>& entries() const { return entries_; }

    friend bool operator==(const HodgeDiamond& a, const HodgeDiamond& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    int dim_;
    std::map<DegreePQ, Int> entries_;
};

// Bigraded table h^{p,q}(H^k) for k in [k_lo, k_hi]; used for the primitive
// and coprimitive parts of a diamond.  Same sparse conventions as above.
class GradedPQTable {
public:
    GradedPQTable(int k_lo, int k_hi);

    int k_lo() const { return k_lo_; }
    int k_hi() const { return k_hi_; }

    Int at(int k, int p, int q) const;
    void set(int k, int p, int q, const Int& v); // requires k_lo <= k <= k_hi

    const std::map<DegreePQ, Int>& entries() const { return entries_; }

    friend bool operator==(const GradedPQTable& a, const GradedPQTable& b) {
        return a.k_lo_ == b.k_lo_ && a.k_hi_ == b.k_hi_ && a.entries_ == b.entries_;
    }

private:
    int k_lo_, k_hi_;
    std::map<DegreePQ, Int> entries_;
};

// projective space P^k: h^{j,j}(H^{2j}) = 1 for 0 <= j <= k
HodgeDiamond pn_diamond(int k);

// Hodge numbers of a product, by bigraded convolution of the factors
HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b);

// special case M x P^1: h^{p,q}(H^k) + h^{p-1,q-1}(H^{k-2}); must agree with
// kunneth(a, pn_diamond(1))
HodgeDiamond p1_product(const HodgeDiamond& a);

// primitive part in degrees k <= dim:
//   h^{p,q}_prim(H^k) = h^{p,q}(H^k) - h^{p-1,q-1}(H^{k-2})
// throws HardLefschetzViolation if any difference is negative
GradedPQTable primitive(const HodgeDiamond& d);

// coprimitive part in degrees dim <= k <= 2 dim:
//   h^{p,q}_coprim(H^k) = h^{p,q}(H^k) - h^{p+1,q+1}(H^{k+2})
GradedPQTable coprimitive(const HodgeDiamond& d);

// Structural checks for the diamond of a smooth connected projective variety:
// purity (p + q = k on the support), Hodge symmetry, Poincare duality,
// h^{0,0}(H^0) = 1, and hard-Lefschetz monotonicity below the middle degree.
// Returns one message per violation; empty means valid.
std::vector<std::string> validate_diamond(const HodgeDiamond& d);

} // namespace hlnum
