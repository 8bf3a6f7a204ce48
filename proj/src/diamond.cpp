#include "hlnum/diamond.hpp"

#include <stdexcept>

#include "hlnum/errors.hpp"

namespace hlnum {

namespace {

std::string idx(int k, int p, int q) {
    return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}(H^" +
           std::to_string(k) + ")";
}

} // namespace

HodgeDiamond::HodgeDiamond(int dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("diamond dimension must be >= 0");
}

Int HodgeDiamond::at(int k, int p, int q) const {
    auto it = entries_.find({k, p, q});
    return it == entries_.end() ? Int(0) : it->second;
}

void HodgeDiamond::set(int k, int p, int q, const Int& v) {
    if (k < 0 || k > 2 * dim_ || p < 0 || p > dim_ || q < 0 || q > dim_)
        throw std::invalid_argument("diamond index out of range: " + idx(k, p, q) +
                                    " with dim " + std::to_string(dim_));
    if (v < 0)
        throw std::invalid_argument("diamond entry must be nonnegative at " + idx(k, p, q));
    if (v == 0)
        entries_.erase({k, p, q});
    else
        entries_[{k, p, q}] = v;
}

void HodgeDiamond::add(int k, int p, int q, const Int& v) {
    set(k, p, q, at(k, p, q) + v);
}

Int HodgeDiamond::betti(int k) const {
    Int b(0);
    for (const auto& [key, v] : entries_)
        if (key.k == k) b += v;
    return b;
}

GradedPQTable::GradedPQTable(int k_lo, int k_hi) : k_lo_(k_lo), k_hi_(k_hi) {
    if (k_lo > k_hi) throw std::invalid_argument("empty degree range");
}

Int GradedPQTable::at(int k, int p, int q) const {
    auto it = entries_.find({k, p, q});
    return it == entries_.end() ? Int(0) : it->second;
}

void GradedPQTable::set(int k, int p, int q, const Int& v) {
    if (k < k_lo_ || k > k_hi_)
        throw std::invalid_argument("degree out of range for graded table");
    if (v < 0)
        throw std::invalid_argument("graded table entry must be nonnegative");
    if (v == 0)
        entries_.erase({k, p, q});
    else
        entries_[{k, p, q}] = v;
}

HodgeDiamond pn_diamond(int k) {
    if (k < 0) throw std::invalid_argument("projective space dimension must be >= 0");
    HodgeDiamond d(k);
    for (int j = 0; j <= k; ++j)
        d.set(2 * j, j, j, 1);
    return d;
}

HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b) {
    HodgeDiamond r(a.dim() + b.dim());
    for (const auto& [ka, va] : a.entries())
        for (const auto& [kb, vb] : b.entries())
            r.add(ka.k + kb.k, ka.p + kb.p, ka.q + kb.q, va * vb);
    return r;
}

HodgeDiamond p1_product(const HodgeDiamond& a) {
    HodgeDiamond r(a.dim() + 1);
    for (const auto& [key, v] : a.entries()) {
        r.add(key.k, key.p, key.q, v);
        r.add(key.k + 2, key.p + 1, key.q + 1, v);
    }
    return r;
}

GradedPQTable primitive(const HodgeDiamond& d) {
    const int m = d.dim();
    GradedPQTable t(0, m);
    for (int k = 0; k <= m; ++k)
        for (int p = 0; p <= m; ++p) {
            int q = k - p;
            if (q < 0 || q > m) continue;
            Int v = d.at(k, p, q) - d.at(k - 2, p - 1, q - 1);
            if (v < 0)
                throw HardLefschetzViolation("negative primitive part at " + idx(k, p, q));
            t.set(k, p, q, v);
        }
    return t;
}

GradedPQTable coprimitive(const HodgeDiamond& d) {
    const int m = d.dim();
    GradedPQTable t(m, 2 * m);
    for (int k = m; k <= 2 * m; ++k)
        for (int p = 0; p <= m; ++p) {
            int q = k - p;
            if (q < 0 || q > m) continue;
            Int v = d.at(k, p, q) - d.at(k + 2, p + 1, q + 1);
            if (v < 0)
                throw HardLefschetzViolation("negative coprimitive part at " + idx(k, p, q));
            t.set(k, p, q, v);
        }
    return t;
}

std::vector<std::string> validate_diamond(const HodgeDiamond& d) {
    std::vector<std::string> out;
    const int m = d.dim();

    for (const auto& [key, v] : d.entries()) {
        (void)v;
        if (key.p + key.q != key.k)
            out.push_back("purity: nonzero " + idx(key.k, key.p, key.q) +
                          " off the line p + q = k");
    }

    for (const auto& [key, v] : d.entries())
        if (d.at(key.k, key.q, key.p) != v)
            out.push_back("Hodge symmetry: " + idx(key.k, key.p, key.q) + " = " +
                          v.get_str() + " but " + idx(key.k, key.q, key.p) + " = " +
                          d.at(key.k, key.q, key.p).get_str());

    for (const auto& [key, v] : d.entries()) {
        Int dual = d.at(2 * m - key.k, m - key.p, m - key.q);
        if (dual != v)
            out.push_back("Poincare duality: " + idx(key.k, key.p, key.q) + " = " +
                          v.get_str() + " but " + idx(2 * m - key.k, m - key.p, m - key.q) +
                          " = " + dual.get_str());
    }

    if (d.at(0, 0, 0) != 1)
        out.push_back("connectivity: h^{0,0}(H^0) must be 1, got " +
                      d.at(0, 0, 0).get_str());
    if (d.betti(0) != 1)
        out.push_back("connectivity: H^0 must be one-dimensional, got dimension " +
                      d.betti(0).get_str());

    // hard Lefschetz below the middle: cup with the hyperplane class injects
    // H^{k-2} into H^k for k <= dim
    for (int k = 2; k <= m; ++k)
        for (int p = 0; p <= m; ++p) {
            int q = k - p;
            if (q < 0 || q > m) continue;
            if (d.at(k - 2, p - 1, q - 1) > d.at(k, p, q))
                out.push_back("hard Lefschetz: " + idx(k - 2, p - 1, q - 1) + " = " +
                              d.at(k - 2, p - 1, q - 1).get_str() + " exceeds " +
                              idx(k, p, q) + " = " + d.at(k, p, q).get_str());
        }

    return out;
}

} // namespace hlnum
