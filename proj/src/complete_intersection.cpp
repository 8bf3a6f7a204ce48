#include "hlnum/complete_intersection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "hlnum/errors.hpp"
#include "hlnum/series.hpp"

namespace hlnum {

void validate_spec(const CISpec& spec) {
    if (spec.dim < 0)
        throw std::invalid_argument("complete intersection dimension must be >= 0");
    if (spec.degrees.empty())
        throw std::invalid_argument("degree list must be nonempty");
    for (long d : spec.degrees)
        if (d < 1)
            throw std::invalid_argument("degrees must be >= 1, got " + std::to_string(d));
}

Rat chi_y_at(const CISpec& spec, const Rat& y0) {
    validate_spec(spec);
    if (y0 == -1)
        throw DegenerateEvaluation("chi_y is not defined at y = -1");

    const int n = spec.dim;
    const int N = n + static_cast<int>(spec.degrees.size());

    // Q(h)^{N+1} for the N+1 line summands of the twisted tangent sequence
    TruncatedSeries acc = TruncatedSeries::constant(Rat(1), n);
    TruncatedSeries q1 = chi_y_factor(1, y0, n);
    for (int i = 0; i <= N; ++i)
        acc = acc * q1;

    // divide by the trivial summand and by each normal factor Q(d_j h)
    acc = acc * TruncatedSeries::constant(Rat(1) + y0, n).recip();
    for (long d : spec.degrees)
        acc = acc * chi_y_factor(d, y0, n).recip();

    Rat coeff = acc.coeff(n);
    Int deg(1);
    for (long d : spec.degrees)
        deg *= d;
    return coeff * Rat(deg);
}

std::vector<Int> chi_list(const CISpec& spec) {
    validate_spec(spec);
    const int n = spec.dim;
    std::vector<std::pair<Rat, Rat>> points;
    points.reserve(n + 1);
    for (int y = 0; y <= n; ++y)
        points.emplace_back(Rat(y), chi_y_at(spec, Rat(y)));
    std::vector<Rat> coeffs = interpolate(points);
    std::vector<Int> out;
    out.reserve(coeffs.size());
    for (const Rat& c : coeffs)
        out.push_back(to_integer(c)); // chi_p are integers by construction
    return out;
}

std::vector<Int> middle_hodge(const CISpec& spec) {
    std::vector<Int> chi = chi_list(spec);
    const int n = spec.dim;
    std::vector<Int> h(n + 1);
    for (int p = 0; p <= n; ++p) {
        Int eps = (2 * p == n) ? Int(0) : Int((p % 2 == 0) ? 1 : -1);
        Int v = chi[p] - eps;
        if ((n - p) % 2 != 0) v = -v;
        if (v < 0)
            throw InternalInconsistency("negative middle Hodge number h^{" +
                                        std::to_string(p) + "," + std::to_string(n - p) +
                                        "} = " + v.get_str());
        h[p] = v;
    }
    for (int p = 0; p <= n; ++p)
        if (h[p] != h[n - p])
            throw InternalInconsistency("middle Hodge row is not symmetric");
    return h;
}

HodgeDiamond ci_diamond(const CISpec& spec) {
    validate_spec(spec);
    if (spec.dim < 1)
        throw std::invalid_argument("diamond construction requires dimension >= 1");
    const int n = spec.dim;
    std::vector<Int> mid = middle_hodge(spec);

    HodgeDiamond d(n);
    for (int j = 0; j <= n; ++j)
        if (2 * j != n) d.set(2 * j, j, j, 1);
    for (int p = 0; p <= n; ++p)
        d.set(n, p, n - p, mid[p]); // includes the algebraic class when n is even

    auto violations = validate_diamond(d);
    if (!violations.empty())
        throw InternalInconsistency("complete intersection diamond failed validation: " +
                                    violations.front());
    return d;
}

std::vector<Int> griffiths_prim(int n, long d) {
    if (n < 1) throw std::invalid_argument("hypersurface dimension must be >= 1");
    if (d < 1) throw std::invalid_argument("hypersurface degree must be >= 1");

    std::vector<Int> out(n + 1, Int(0));
    if (d == 1) return out; // hyperplane: no primitive middle cohomology

    // coefficients of ((1 - t^{d-1}) / (1 - t))^{n+2} = (1 + t + ... + t^{d-2})^{n+2}
    // up to the largest needed exponent
    long top = (static_cast<long>(n) + 1) * d - (n + 2);
    std::vector<Int> poly{Int(1)};
    std::vector<Int> base(static_cast<size_t>(d - 1), Int(1));
    for (int rep = 0; rep < n + 2; ++rep) {
        std::vector<Int> next(std::min<size_t>(poly.size() + base.size() - 1,
                                               static_cast<size_t>(top) + 1),
                              Int(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] == 0) continue;
            for (size_t j = 0; j < base.size() && i + j < next.size(); ++j)
                next[i + j] += poly[i];
        }
        poly = std::move(next);
    }

    for (int q = 0; q <= n; ++q) {
        long e = (static_cast<long>(q) + 1) * d - (n + 2);
        if (e >= 0 && e < static_cast<long>(poly.size()))
            out[q] = poly[static_cast<size_t>(e)];
    }
    return out;
}

Int euler_chern(const CISpec& spec) {
    validate_spec(spec);
    const int n = spec.dim;
    const int N = n + static_cast<int>(spec.degrees.size());

    // (1 + h)^{N+1} / prod (1 + d_j h), truncated at h^n
    TruncatedSeries acc = TruncatedSeries::constant(Rat(1), n);
    TruncatedSeries lin(n);
    lin.set_coeff(0, Rat(1));
    if (n >= 1) lin.set_coeff(1, Rat(1));
    for (int i = 0; i <= N; ++i)
        acc = acc * lin;
    for (long d : spec.degrees) {
        TruncatedSeries f(n);
        f.set_coeff(0, Rat(1));
        if (n >= 1) f.set_coeff(1, make_rat(d));
        acc = acc * f.recip();
    }

    Int deg(1);
    for (long d : spec.degrees)
        deg *= d;
    return to_integer(acc.coeff(n) * Rat(deg));
}

} // namespace hlnum
