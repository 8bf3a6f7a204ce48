#include "hlnum/hl_table.hpp"

#include <stdexcept>

#include "hlnum/errors.hpp"

namespace hlnum {

HLTable::HLTable(int d) : d_(d) {
    if (d < 2)
        throw std::invalid_argument("table dimension must be >= 2");
}

Int HLTable::at(int r, int s, int p, int q) const {
    auto it = entries_.find({r, s, p, q});
    return it == entries_.end() ? Int(0) : it->second;
}

void HLTable::set(int r, int s, int p, int q, const Int& v) {
    if (r < 0 || r > d_ || s < 0 || s > d_)
        throw std::invalid_argument("table position (r=" + std::to_string(r) +
                                    ", s=" + std::to_string(s) + ") out of range for d = " +
                                    std::to_string(d_));
    if (v < 0)
        throw std::invalid_argument("table entry must be nonnegative");
    if (v == 0)
        entries_.erase({r, s, p, q});
    else
        entries_[{r, s, p, q}] = v;
}

void HLTable::add(int r, int s, int p, int q, const Int& v) {
    set(r, s, p, q, at(r, s, p, q) + v);
}

HLTable hl_from_link(const LinkCohomology& link, std::vector<std::string>* ignored) {
    const int d = link.d();
    HLTable t(d);

    for (int s = 1; s <= d - 1; ++s)
        for (const auto& [key, v] : link.group(s).entries())
            t.add(0, s, -key.p, -key.q, v);

    for (int r = 2; r <= d; ++r)
        for (const auto& [key, v] : link.group(d + r).entries())
            t.add(r, d, key.p - d, key.q - d, v);

    if (ignored)
        for (int s : {0, d, d + 1})
            if (!link.group(s).is_zero())
                ignored->push_back("H^" + std::to_string(s) + " (dimension " +
                                   link.group(s).total().get_str() +
                                   ") does not contribute to the table");
    return t;
}

HLTable hl_cone(const HodgeDiamond& base) {
    auto violations = validate_diamond(base);
    if (!violations.empty())
        throw std::invalid_argument("base diamond failed validation: " + violations.front());
    const int m = base.dim();
    if (m < 1)
        throw std::invalid_argument("cone construction requires a base of dimension >= 1");

    const int d = m + 1;
    GradedPQTable prim = primitive(base);
    GradedPQTable coprim = coprimitive(base);
    HLTable t(d);

    for (const auto& [key, v] : prim.entries())
        if (key.k >= 1 && key.k <= d - 2)
            t.add(0, key.k + 1, -key.p, -key.q, v);

    for (const auto& [key, v] : coprim.entries())
        if (key.k >= d)
            t.add(key.k - d + 2, d, key.p - d + 1, key.q - d + 1, v);

    return t;
}

std::map<std::pair<int, int>, Int> classical(const HLTable& t) {
    std::map<std::pair<int, int>, Int> out;
    for (const auto& [key, v] : t.entries())
        out[{key.r, key.s}] += v;
    return out;
}

EulerReport check_euler(const HLTable& t) {
    EulerReport report;
    for (const auto& [key, v] : t.entries()) {
        Int signed_v = ((key.r + key.s) % 2 == 0) ? v : Int(-v);
        report.totals[{key.p, key.q}] += signed_v;
    }
    // drop cancelled positions, but keep (0,0) visible either way
    for (auto it = report.totals.begin(); it != report.totals.end();)
        it = (it->second == 0 && !(it->first == PQ{0, 0})) ? report.totals.erase(it)
                                                           : std::next(it);
    report.pass = report.totals.size() <= 1 && report.totals.count({0, 0}) == 1 &&
                  report.totals.at({0, 0}) == 1;
    if (report.totals.count({0, 0}) == 0)
        report.totals[{0, 0}] = 0;
    return report;
}

DualityReport check_duality(const HLTable& t) {
    DualityReport report;
    const int d = t.d();
    for (int i = 2; i <= d - 1; ++i) {
        // collect the (p,q) support on both sides of the pairing
        std::map<PQ, char> support;
        for (const auto& [key, v] : t.entries()) {
            (void)v;
            if (key.r == 0 && key.s == i) support[{key.p, key.q}] = 1;
            if (key.r == d - i + 1 && key.s == d) support[{key.p, key.q}] = 1;
        }
        for (const auto& [pq, mark] : support) {
            (void)mark;
            Int lhs = t.at(0, i, pq.p, pq.q);
            Int rhs = t.at(d - i + 1, d, pq.p, pq.q);
            if (lhs != rhs)
                report.counterexamples.push_back({i, pq.p, pq.q, lhs, rhs});
        }
    }
    report.pass = report.counterexamples.empty();
    return report;
}

std::vector<std::string> check_support(const HLTable& t) {
    std::vector<std::string> out;
    const int d = t.d();
    for (const auto& [key, v] : t.entries()) {
        bool row_zero = key.r == 0 && key.s >= 1 && key.s <= d - 1;
        bool col_d = key.s == d && key.r >= 2 && key.r <= d;
        if (!row_zero && !col_d)
            out.push_back("nonzero entry " + v.get_str() + " at (r=" + std::to_string(key.r) +
                          ", s=" + std::to_string(key.s) + ", p=" + std::to_string(key.p) +
                          ", q=" + std::to_string(key.q) + ") outside the support pattern");
    }
    return out;
}

std::vector<std::string> check_weight_lines(const HLTable& t) {
    std::vector<std::string> out;
    const int d = t.d();
    for (const auto& [key, v] : t.entries()) {
        (void)v;
        int expected;
        if (key.r == 0 && key.s >= 1 && key.s <= d - 1)
            expected = 1 - key.s;
        else if (key.s == d && key.r >= 2 && key.r <= d)
            expected = key.r - d;
        else
            continue; // off-pattern entries are check_support's business
        if (key.p + key.q != expected)
            out.push_back("entry at (r=" + std::to_string(key.r) + ", s=" +
                          std::to_string(key.s) + ", p=" + std::to_string(key.p) + ", q=" +
                          std::to_string(key.q) + ") off its weight line p + q = " +
                          std::to_string(expected));
    }
    return out;
}

PunctualMHS ic_quotient(const HodgeDiamond& base) {
    auto violations = validate_diamond(base);
    if (!violations.empty())
        throw std::invalid_argument("base diamond failed validation: " + violations.front());
    const int m = base.dim();
    if (m < 1)
        throw std::invalid_argument("cone construction requires a base of dimension >= 1");

    GradedPQTable prim = primitive(base);
    PunctualMHS out;
    for (const auto& [key, v] : prim.entries())
        if (key.k == m) out.set(-key.p, -key.q, v);
    return out;
}

} // namespace hlnum
