#pragma once

#include <vector>

#include "hlnum/diamond.hpp"
#include "hlnum/rational.hpp"

namespace hlnum {

// Smooth complete intersection of dimension `dim` cut out by hypersurfaces of
// the given degrees in P^{dim + degrees.size()}.  Degrees must be >= 1;
// degree-1 factors are allowed and do not change the variety.  dim = 0
// (points) is accepted by the numerical routines; building a diamond or a
// cone requires dim >= 1.
struct CISpec {
    int dim = 0;
    std::vector<long> degrees;
};

void validate_spec(const CISpec& spec); // throws std::invalid_argument

// chi_y genus evaluated at y = y0, for y0 != -1:
//
//   chi_{y0} = (prod d_j) * [h^n] ( Q(h)^{N+1} / ((1 + y0) * prod_j Q(d_j h)) )
//
// where N = dim + #degrees, n = dim, and Q(x) is the chi_y factor of a Chern
// root.  The extra 1 + y0 divides out the trivial summand of the Euler
// sequence (its factor at a zero root is the constant 1 + y0).
Rat chi_y_at(const CISpec& spec, const Rat& y0);

// coefficients [chi_0, ..., chi_n] of chi_y = sum_p chi_p y^p, recovered by
// exact interpolation of chi_y_at over y = 0..n
std::vector<Int> chi_list(const CISpec& spec);

// middle-degree Hodge numbers h^{p, n-p}(H^n), p = 0..n:
//   h^{p, n-p} = (-1)^{n-p} (chi_p - eps_p),
//   eps_p = (-1)^p when 2p != n (the part of chi_p carried by the algebraic
//   classes in degrees other than n), eps_p = 0 when 2p = n
std::vector<Int> middle_hodge(const CISpec& spec);

// full diamond: h^{j,j}(H^{2j}) = 1 off the middle degree, middle row from
// middle_hodge; requires dim >= 1
HodgeDiamond ci_diamond(const CISpec& spec);

// primitive middle Hodge numbers of a smooth hypersurface of degree d in
// P^{n+1}, as (h^{n-q, q})_{q = 0..n}, via the Jacobian-ring dimension count:
//   h^{n-q, q}_prim = [t^{(q+1)d - (n+2)}] ((1 - t^{d-1}) / (1 - t))^{n+2}
std::vector<Int> griffiths_prim(int n, long d);

// topological Euler characteristic by Chern-class integration:
//   e = (prod d_j) * [h^n] ( (1+h)^{N+1} / prod_j (1 + d_j h) )
Int euler_chern(const CISpec& spec);

} // namespace hlnum
