#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hlnum/diamond.hpp"
#include "hlnum/punctual.hpp"
#include "hlnum/rational.hpp"

namespace hlnum {

struct RSPQ {
    int r, s, p, q;
    auto operator<=>(const RSPQ&) const = default;
};

// Refined table lambda^{p,q}_{r,s} attached to a d-dimensional isolated
// singularity.  r and s range over 0..d; p and q are unconstrained integers.
// Entries outside the support pattern of an honest singularity can be stored
// (so corrupted inputs can be parsed and then diagnosed); check_support
// reports them.
class HLTable {
public:
    explicit HLTable(int d); // d >= 2

    int d() const { return d_; }

    Int at(int r, int s, int p, int q) const;
    void set(int r, int s, int p, int q, const Int& v); // 0 <= r,s <= d, v >= 0
    void add(int r, int s, int p, int q, const Int& v);

    const std::map<RSPQ, Int>& entries() const { return entries_; }

    friend bool operator==(const HLTable& a, const HLTable& b) {
        return a.d_ == b.d_ && a.entries_ == b.entries_;
    }

private:
    int d_;
    std::map<RSPQ, Int> entries_;
};

// Table of a d-dimensional germ from the punctual local cohomology at the
// point:
//   lambda^{p,q}_{0,s}  = h^{-p,-q}(H^s),      1 <= s <= d-1
//   lambda^{p,q}_{r,d}  = h^{p+d,q+d}(H^{d+r}), 2 <= r <= d
// Nonzero groups in degrees 0, d, d+1 carry no table contribution; if
// `ignored` is given, one message per such group is appended.
HLTable hl_from_link(const LinkCohomology& link, std::vector<std::string>* ignored = nullptr);

// Table of the cone over a smooth connected projective base, written directly
// in terms of the primitive and coprimitive parts of the base:
//   lambda^{p,q}_{0,s} = h^{-p,-q}_prim(H^{s-1}),          2 <= s <= d-1
//   lambda^{p,q}_{r,d} = h^{p+d-1,q+d-1}_coprim(H^{d+r-2}), 2 <= r <= d
// with d = dim(base) + 1.  Must agree with hl_from_link(cone_link(base)).
HLTable hl_cone(const HodgeDiamond& base);

// coarse table lambda_{r,s} = sum_{p,q} lambda^{p,q}_{r,s}; nonzero sums only
std::map<std::pair<int, int>, Int> classical(const HLTable& t);

struct EulerReport {
    std::map<PQ, Int> totals; // E^{p,q} = sum_{r,s} (-1)^{r+s} lambda^{p,q}_{r,s}
    bool pass = false;        // E^{0,0} = 1 and everything else 0
};
EulerReport check_euler(const HLTable& t);

struct DualityCounterexample {
    int i, p, q;
    Int lhs, rhs; // lambda^{p,q}_{0,i} vs lambda^{p,q}_{d-i+1,d}
};
struct DualityReport {
    bool pass = false;
    std::vector<DualityCounterexample> counterexamples;
};
// lambda^{p,q}_{0,i} = lambda^{p,q}_{d-i+1,d} for 2 <= i <= d-1; vacuous for d = 2
DualityReport check_duality(const HLTable& t);

// nonzero entries outside { (0,s) : 1 <= s <= d-1 } u { (r,d) : 2 <= r <= d }
std::vector<std::string> check_support(const HLTable& t);

// weight lines of a cone table: entries at (0,s) sit on p + q = 1 - s,
// entries at (r,d) with r >= 2 sit on p + q = r - d; run after check_support
std::vector<std::string> check_weight_lines(const HLTable& t);

// Hodge multiplicities of the quotient of the intersection-complex module by
// the vertex contribution: h^{p,q} = h^{-p,-q}_prim(H^{dim}(base)), pure of
// weight 1 - d where d = dim(base) + 1
PunctualMHS ic_quotient(const HodgeDiamond& base);

} // namespace hlnum
