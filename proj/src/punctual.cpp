#include "hlnum/punctual.hpp"

#include <stdexcept>

#include "hlnum/errors.hpp"

namespace hlnum {

Int PunctualMHS::at(int p, int q) const {
    auto it = entries_.find({p, q});
    return it == entries_.end() ? Int(0) : it->second;
}

void PunctualMHS::set(int p, int q, const Int& v) {
    if (v < 0)
        throw std::invalid_argument("multiplicity must be nonnegative");
    if (v == 0)
        entries_.erase({p, q});
    else
        entries_[{p, q}] = v;
}

void PunctualMHS::add(int p, int q, const Int& v) {
    set(p, q, at(p, q) + v);
}

Int PunctualMHS::total() const {
    Int t(0);
    for (const auto& [key, v] : entries_) {
        (void)key;
        t += v;
    }
    return t;
}

PunctualMHS tate_twist(const PunctualMHS& m, int k) {
    PunctualMHS out;
    for (const auto& [key, v] : m.entries())
        out.set(key.p - k, key.q - k, v);
    return out;
}

PunctualMHS dual_punctual(const PunctualMHS& m) {
    PunctualMHS out;
    for (const auto& [key, v] : m.entries())
        out.set(-key.p, -key.q, v);
    return out;
}

LinkCohomology::LinkCohomology(int d) : d_(d) {
    if (d < 2)
        throw std::invalid_argument("local cohomology requires dimension >= 2");
}

void LinkCohomology::set_group(int s, PunctualMHS h) {
    if (s < 0 || s > 2 * d_)
        throw std::invalid_argument("cohomological degree out of range: " + std::to_string(s));
    if (h.is_zero())
        groups_.erase(s);
    else
        groups_[s] = std::move(h);
}

const PunctualMHS& LinkCohomology::group(int s) const {
    static const PunctualMHS empty;
    auto it = groups_.find(s);
    return it == groups_.end() ? empty : it->second;
}

std::vector<std::string> LinkCohomology::validate() const {
    std::vector<std::string> out;
    if (!group(0).is_zero())
        out.push_back("H^0 must vanish at an isolated singular point of dimension >= 2");
    if (!group(1).is_zero())
        out.push_back("H^1 is nonzero; it vanishes for cones over connected bases");
    return out;
}

LinkCohomology cone_link(const HodgeDiamond& base) {
    auto violations = validate_diamond(base);
    if (!violations.empty())
        throw std::invalid_argument("base diamond failed validation: " + violations.front());
    const int m = base.dim();
    if (m < 1)
        throw std::invalid_argument("cone construction requires a base of dimension >= 1");

    const int d = m + 1;
    GradedPQTable prim = primitive(base);
    GradedPQTable coprim = coprimitive(base);
    LinkCohomology link(d);

    for (int s = 2; s <= d; ++s) {
        PunctualMHS g; // pure of weight s - 1
        for (const auto& [key, v] : prim.entries())
            if (key.k == s - 1) g.set(key.p, key.q, v);
        link.set_group(s, std::move(g));
    }
    for (int s = d + 1; s <= 2 * d; ++s) {
        PunctualMHS g; // coprimitive part of weight s - 2, twisted to weight s
        for (const auto& [key, v] : coprim.entries())
            if (key.k == s - 2) g.set(key.p, key.q, v);
        link.set_group(s, tate_twist(g, -1));
    }
    return link;
}

} // namespace hlnum
