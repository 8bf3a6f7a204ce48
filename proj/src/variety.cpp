#include "hlnum/variety.hpp"

#include <stdexcept>

#include "hlnum/table_io.hpp"

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

VarietySpec parse_node(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    if (!j.contains("kind")) fail(path, "missing \"kind\"");
    if (!j.at("kind").is_string()) fail(path + ".kind", "expected a string");
    const std::string kind = j.at("kind").get<std::string>();

    VarietySpec spec;
    if (kind == "pn") {
        spec.kind = VarietySpec::Kind::pn;
        if (!j.contains("n")) fail(path, "missing \"n\"");
        long n = require_int(j.at("n"), path + ".n");
        if (n < 1) fail(path + ".n", "projective space dimension must be >= 1");
        spec.n = static_cast<int>(n);
    } else if (kind == "ci") {
        spec.kind = VarietySpec::Kind::ci;
        if (!j.contains("dim")) fail(path, "missing \"dim\"");
        long dim = require_int(j.at("dim"), path + ".dim");
        if (dim < 1) fail(path + ".dim", "complete intersection dimension must be >= 1");
        spec.ci.dim = static_cast<int>(dim);
        if (!j.contains("degrees")) fail(path, "missing \"degrees\"");
        const json& degs = j.at("degrees");
        if (!degs.is_array() || degs.empty())
            fail(path + ".degrees", "degrees must be nonempty");
        for (size_t i = 0; i < degs.size(); ++i) {
            long d = require_int(degs[i], path + ".degrees[" + std::to_string(i) + "]");
            if (d < 1)
                fail(path + ".degrees[" + std::to_string(i) + "]", "degrees must be >= 1");
            spec.ci.degrees.push_back(d);
        }
    } else if (kind == "product") {
        spec.kind = VarietySpec::Kind::product;
        if (!j.contains("factors")) fail(path, "missing \"factors\"");
        const json& factors = j.at("factors");
        if (!factors.is_array() || factors.size() < 2)
            fail(path + ".factors", "expected an array of at least two factors");
        for (size_t i = 0; i < factors.size(); ++i)
            spec.factors.push_back(
                parse_node(factors[i], path + ".factors[" + std::to_string(i) + "]"));
    } else if (kind == "diamond") {
        spec.kind = VarietySpec::Kind::diamond;
        if (!j.contains("dim")) fail(path, "missing \"dim\"");
        long dim = require_int(j.at("dim"), path + ".dim");
        if (dim < 1) fail(path + ".dim", "diamond dimension must be >= 1");
        if (!j.contains("entries")) fail(path, "missing \"entries\"");
        const json& entries = j.at("entries");
        if (!entries.is_array()) fail(path + ".entries", "expected an array");
        HodgeDiamond d(static_cast<int>(dim));
        for (size_t i = 0; i < entries.size(); ++i) {
            const std::string epath = path + ".entries[" + std::to_string(i) + "]";
            const json& e = entries[i];
            if (!e.is_array() || e.size() != 4)
                fail(epath, "expected [k, p, q, value]");
            long k = require_int(e[0], epath + "[0]");
            long p = require_int(e[1], epath + "[1]");
            long q = require_int(e[2], epath + "[2]");
            Int v = int_from_json(e[3], epath + "[3]");
            if (p + q != k)
                fail(epath, "impure entry: p + q must equal k");
            if (v < 0) fail(epath + "[3]", "value must be nonnegative");
            try {
                d.add(static_cast<int>(k), static_cast<int>(p), static_cast<int>(q), v);
            } catch (const std::invalid_argument& err) {
                fail(epath, err.what());
            }
        }
        spec.table = d;
    } else {
        fail(path + ".kind", "unknown kind \"" + kind + "\"");
    }
    return spec;
}

} // namespace

int VarietySpec::dim() const {
    switch (kind) {
    case Kind::pn:
        return n;
    case Kind::ci:
        return ci.dim;
    case Kind::diamond:
        return table.dim();
    case Kind::product: {
        int total = 0;
        for (const auto& f : factors)
            total += f.dim();
        return total;
    }
    }
    return 0;
}

VarietySpec parse_variety(const nlohmann::json& j) {
    return parse_node(j, "$");
}

std::string describe(const VarietySpec& spec) {
    switch (spec.kind) {
    case VarietySpec::Kind::pn:
        return "pn(" + std::to_string(spec.n) + ")";
    case VarietySpec::Kind::ci: {
        std::string s = "ci(" + std::to_string(spec.ci.dim) + ", [";
        for (size_t i = 0; i < spec.ci.degrees.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(spec.ci.degrees[i]);
        }
        return s + "])";
    }
    case VarietySpec::Kind::diamond:
        return "diamond(dim " + std::to_string(spec.table.dim()) + ")";
    case VarietySpec::Kind::product: {
        std::string s;
        for (size_t i = 0; i < spec.factors.size(); ++i) {
            if (i) s += " x ";
            s += describe(spec.factors[i]);
        }
        return s;
    }
    }
    return "";
}

HodgeDiamond diamond_of(const VarietySpec& spec) {
    switch (spec.kind) {
    case VarietySpec::Kind::pn:
        return pn_diamond(spec.n);
    case VarietySpec::Kind::ci:
        return ci_diamond(spec.ci);
    case VarietySpec::Kind::diamond:
        return spec.table;
    case VarietySpec::Kind::product: {
        HodgeDiamond acc = pn_diamond(0);
        for (const auto& f : spec.factors)
            acc = kunneth(acc, diamond_of(f));
        return acc;
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace hlnum
