#include "hlnum/table_io.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hlnum {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument(path + ": " + what);
}

long require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<long>();
}

} // namespace

nlohmann::json json_from_int(const Int& v) {
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Int int_from_json(const json& j, const std::string& path) {
    if (j.is_number_unsigned()) {
        Int v;
        std::ostringstream os;
        os << j.get<std::uint64_t>();
        v.set_str(os.str(), 10);
        return v;
    }
    if (j.is_number_integer())
        return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            fail(path, "not a decimal integer: \"" + j.get<std::string>() + "\"");
        return v;
    }
    fail(path, "expected an integer or a decimal string");
}

LinkCohomology parse_link_file(const json& j) {
    if (!j.is_object()) fail("$", "expected an object");
    if (!j.contains("d")) fail("$", "missing \"d\"");
    long d = require_int(j.at("d"), "$.d");
    if (d < 2) fail("$.d", "dimension must be >= 2");
    LinkCohomology link(static_cast<int>(d));

    if (!j.contains("H")) fail("$", "missing \"H\"");
    const json& groups = j.at("H");
    if (!groups.is_object()) fail("$.H", "expected an object keyed by degree");

    for (const auto& [key, val] : groups.items()) {
        const std::string gpath = "$.H[\"" + key + "\"]";
        long s;
        try {
            size_t used = 0;
            s = std::stol(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            fail(gpath, "degree key must be an integer");
        }
        if (s < 0 || s > 2 * d) fail(gpath, "degree out of range 0..2d");
        if (!val.is_array()) fail(gpath, "expected an array of [p, q, dim]");
        PunctualMHS g;
        for (size_t i = 0; i < val.size(); ++i) {
            const std::string epath = gpath + "[" + std::to_string(i) + "]";
            const json& e = val[i];
            if (!e.is_array() || e.size() != 3)
                fail(epath, "expected [p, q, dim]");
            long p = require_int(e[0], epath + "[0]");
            long q = require_int(e[1], epath + "[1]");
            Int m = int_from_json(e[2], epath + "[2]");
            if (m < 1) fail(epath + "[2]", "multiplicity must be positive");
            g.add(static_cast<int>(p), static_cast<int>(q), m);
        }
        link.set_group(static_cast<int>(s), std::move(g));
    }
    return link;
}

HLTable parse_table_json(const json& j) {
    if (!j.is_object()) fail("$", "expected an object");
    if (!j.contains("d")) fail("$", "missing \"d\"");
    long d = require_int(j.at("d"), "$.d");
    if (d < 2) fail("$.d", "dimension must be >= 2");
    HLTable t(static_cast<int>(d));

    if (!j.contains("entries")) fail("$", "missing \"entries\"");
    const json& entries = j.at("entries");
    if (!entries.is_array()) fail("$.entries", "expected an array");

    std::set<RSPQ> seen;
    for (size_t i = 0; i < entries.size(); ++i) {
        const std::string epath = "$.entries[" + std::to_string(i) + "]";
        const json& e = entries[i];
        if (!e.is_array() || e.size() != 5)
            fail(epath, "expected [r, s, p, q, value]");
        long r = require_int(e[0], epath + "[0]");
        long s = require_int(e[1], epath + "[1]");
        long p = require_int(e[2], epath + "[2]");
        long q = require_int(e[3], epath + "[3]");
        Int v = int_from_json(e[4], epath + "[4]");
        if (r < 0 || r > d) fail(epath + "[0]", "r out of range 0..d");
        if (s < 0 || s > d) fail(epath + "[1]", "s out of range 0..d");
        if (v < 0) fail(epath + "[4]", "value must be nonnegative");
        RSPQ key{static_cast<int>(r), static_cast<int>(s), static_cast<int>(p),
                 static_cast<int>(q)};
        if (!seen.insert(key).second)
            fail(epath, "duplicate table position");
        t.set(key.r, key.s, key.p, key.q, v);
    }
    return t;
}

nlohmann::ordered_json table_to_json(const HLTable& t) {
    nlohmann::ordered_json out;
    out["d"] = t.d();

    auto entries = nlohmann::ordered_json::array();
    for (const auto& [key, v] : t.entries())
        entries.push_back({key.r, key.s, key.p, key.q, json_from_int(v)});
    out["entries"] = std::move(entries);

    auto marg = nlohmann::ordered_json::array();
    for (const auto& [rs, v] : classical(t))
        marg.push_back({rs.first, rs.second, json_from_int(v)});
    out["classical"] = std::move(marg);

    out["checks"] = {{"euler", check_euler(t).pass},
                     {"duality", check_duality(t).pass},
                     {"support", check_support(t).empty()}};
    return out;
}

std::string render_table_pretty(const HLTable& t) {
    std::ostringstream os;
    const int d = t.d();
    os << "Hodge-Lyubeznik table, d = " << d << "\n";
    if (t.entries().empty())
        os << "  (no entries)\n";

    int last_r = -1, last_s = -1;
    for (const auto& [key, v] : t.entries()) {
        if (key.r != last_r || key.s != last_s) {
            os << "  (r=" << key.r << ", s=" << key.s << ")\n";
            last_r = key.r;
            last_s = key.s;
        }
        os << "    lambda^{" << key.p << "," << key.q << "} = " << v.get_str() << "\n";
    }

    auto marg = classical(t);
    os << "classical table lambda_{r,s}, rows r = 0.." << d << ", columns s = 0.." << d
       << "\n";
    size_t width = 1;
    for (const auto& [rs, v] : marg) {
        (void)rs;
        width = std::max(width, v.get_str().size());
    }
    for (int r = 0; r <= d; ++r) {
        os << "  [";
        for (int s = 0; s <= d; ++s) {
            auto it = marg.find({r, s});
            std::string cell = it == marg.end() ? "." : it->second.get_str();
            os << " " << std::string(width - cell.size(), ' ') << cell;
        }
        os << " ]\n";
    }

    EulerReport euler = check_euler(t);
    os << "checks:\n";
    os << "  euler:   " << (euler.pass ? "pass" : "FAIL") << "\n";
    if (!euler.pass)
        for (const auto& [pq, v] : euler.totals)
            os << "    E^{" << pq.p << "," << pq.q << "} = " << v.get_str() << "\n";

    DualityReport dual = check_duality(t);
    os << "  duality: " << (dual.pass ? "pass" : "FAIL") << "\n";
    for (const auto& c : dual.counterexamples)
        os << "    lambda^{" << c.p << "," << c.q << "}_{0," << c.i << "} = "
           << c.lhs.get_str() << " but lambda^{" << c.p << "," << c.q << "}_{"
           << t.d() - c.i + 1 << "," << t.d() << "} = " << c.rhs.get_str() << "\n";

    auto support = check_support(t);
    os << "  support: " << (support.empty() ? "pass" : "FAIL") << "\n";
    for (const auto& msg : support)
        os << "    " << msg << "\n";

    return os.str();
}

std::string render_table_csv(const HLTable& t) {
    std::ostringstream os;
    os << "r,s,p,q,value\n";
    for (const auto& [key, v] : t.entries())
        os << key.r << "," << key.s << "," << key.p << "," << key.q << "," << v.get_str()
           << "\n";
    return os.str();
}

nlohmann::ordered_json diamond_to_json(const HodgeDiamond& d) {
    nlohmann::ordered_json out;
    out["dim"] = d.dim();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [key, v] : d.entries())
        entries.push_back({key.k, key.p, key.q, json_from_int(v)});
    out["entries"] = std::move(entries);
    return out;
}

std::string render_diamond_pretty(const HodgeDiamond& d) {
    std::ostringstream os;
    os << "Hodge diamond, dim = " << d.dim() << "\n";
    int last_k = -1;
    for (const auto& [key, v] : d.entries()) {
        if (key.k != last_k) {
            os << "  H^" << key.k << ":";
            last_k = key.k;
            bool first = true;
            for (const auto& [key2, v2] : d.entries())
                if (key2.k == key.k) {
                    os << (first ? " " : "  ") << "h^{" << key2.p << "," << key2.q
                       << "} = " << v2.get_str();
                    first = false;
                }
            os << "\n";
        }
        (void)v;
    }
    return os.str();
}

std::string render_diamond_csv(const HodgeDiamond& d) {
    std::ostringstream os;
    os << "k,p,q,value\n";
    for (const auto& [key, v] : d.entries())
        os << key.k << "," << key.p << "," << key.q << "," << v.get_str() << "\n";
    return os.str();
}

} // namespace hlnum
