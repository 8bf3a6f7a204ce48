#include "doctest.h"

#include <random>

#include "hlnum/complete_intersection.hpp"
#include "hlnum/errors.hpp"
#include "hlnum/punctual.hpp"

using namespace hlnum;

namespace {

HodgeDiamond elliptic_curve() {
    return ci_diamond({1, {3}});
}

HodgeDiamond random_product(std::mt19937& rng) {
    std::uniform_int_distribution<int> nfactors(1, 3);
    std::uniform_int_distribution<int> kind(0, 3);
    HodgeDiamond d = pn_diamond(0);
    int n = nfactors(rng);
    for (int i = 0; i < n; ++i) {
        int c = kind(rng);
        d = kunneth(d, c == 0 ? elliptic_curve() : pn_diamond(c));
    }
    if (d.dim() == 0) d = kunneth(d, pn_diamond(1));
    return d;
}

} // namespace

TEST_CASE("punctual structures") {
    PunctualMHS m;
    CHECK(m.is_zero());
    m.set(-1, 0, 2);
    m.add(-1, 0, 1);
    m.set(0, -1, 3);
    CHECK(m.at(-1, 0) == 3);
    CHECK(m.total() == 6);
    CHECK_THROWS_AS(m.set(0, 0, -1), std::invalid_argument);
    m.set(0, -1, 0);
    CHECK(m.at(0, -1) == 0);
    CHECK(m.entries().size() == 1);
}

TEST_CASE("tate twist and dual") {
    PunctualMHS m;
    m.set(1, 1, 1);
    m.set(2, 1, 4);

    PunctualMHS up = tate_twist(m, -1); // (p,q) -> (p+1, q+1)
    CHECK(up.at(2, 2) == 1);
    CHECK(up.at(3, 2) == 4);

    CHECK(tate_twist(m, 0) == m);
    CHECK(tate_twist(tate_twist(m, 2), -2) == m);
    CHECK(tate_twist(tate_twist(m, 1), 1) == tate_twist(m, 2));

    PunctualMHS d = dual_punctual(m);
    CHECK(d.at(-1, -1) == 1);
    CHECK(d.at(-2, -1) == 4);
    CHECK(dual_punctual(d) == m);
    // dual commutes with twisting in the opposite direction
    CHECK(dual_punctual(tate_twist(m, 3)) == tate_twist(dual_punctual(m), -3));
}

TEST_CASE("link cohomology container") {
    CHECK_THROWS_AS(LinkCohomology(1), std::invalid_argument);

    LinkCohomology link(2);
    PunctualMHS g;
    g.set(1, 1, 1);
    CHECK_THROWS_AS(link.set_group(5, g), std::invalid_argument);
    CHECK_THROWS_AS(link.set_group(-1, g), std::invalid_argument);

    link.set_group(4, g);
    CHECK(link.group(4).at(1, 1) == 1);
    CHECK(link.group(3).is_zero());
    CHECK(link.validate().empty());

    link.set_group(0, g);
    link.set_group(1, g);
    auto flags = link.validate();
    CHECK(flags.size() == 2);
}

TEST_CASE("cone over an elliptic curve") {
    LinkCohomology link = cone_link(elliptic_curve());
    CHECK(link.d() == 2);

    CHECK(link.group(2).at(1, 0) == 1);
    CHECK(link.group(2).at(0, 1) == 1);
    CHECK(link.group(2).total() == 2);

    CHECK(link.group(3).at(2, 1) == 1);
    CHECK(link.group(3).at(1, 2) == 1);
    CHECK(link.group(3).total() == 2);

    CHECK(link.group(4).at(2, 2) == 1);
    CHECK(link.group(4).total() == 1);

    CHECK(link.group(0).is_zero());
    CHECK(link.group(1).is_zero());
}

TEST_CASE("cone over P^1 is a smooth-point model") {
    LinkCohomology link = cone_link(pn_diamond(1));
    CHECK(link.d() == 2);
    CHECK(link.groups().size() == 1);
    CHECK(link.group(4).at(2, 2) == 1);
}

TEST_CASE("cone over a quadric surface") {
    LinkCohomology link = cone_link(kunneth(pn_diamond(1), pn_diamond(1)));
    CHECK(link.d() == 3);
    CHECK(link.group(2).is_zero());
    CHECK(link.group(3).at(1, 1) == 1);
    CHECK(link.group(3).total() == 1);
    CHECK(link.group(4).at(2, 2) == 1);
    CHECK(link.group(5).is_zero());
    CHECK(link.group(6).at(3, 3) == 1);
}

TEST_CASE("cone over E x P^1") {
    LinkCohomology link = cone_link(kunneth(elliptic_curve(), pn_diamond(1)));
    CHECK(link.d() == 3);
    CHECK(link.group(2).at(1, 0) == 1);
    CHECK(link.group(2).at(0, 1) == 1);
    CHECK(link.group(3).at(1, 1) == 1);
    CHECK(link.group(4).at(2, 2) == 1);
    CHECK(link.group(5).at(3, 2) == 1);
    CHECK(link.group(5).at(2, 3) == 1);
    CHECK(link.group(6).at(3, 3) == 1);
    CHECK(link.group(6).total() == 1);
}

TEST_CASE("cone groups are pure of the expected weight") {
    std::mt19937 rng(57);
    for (int trial = 0; trial < 20; ++trial) {
        HodgeDiamond base = random_product(rng);
        LinkCohomology link = cone_link(base);
        const int d = link.d();
        CHECK(d == base.dim() + 1);
        for (const auto& [s, g] : link.groups()) {
            CHECK(s >= 2);
            int weight = s <= d ? s - 1 : s;
            for (const auto& [key, v] : g.entries()) {
                (void)v;
                CHECK(key.p + key.q == weight);
            }
        }
        // total dimensions reproduce primitive/coprimitive Betti numbers
        GradedPQTable prim = primitive(base);
        for (int s = 2; s <= d; ++s) {
            Int expect(0);
            for (const auto& [key, v] : prim.entries())
                if (key.k == s - 1) expect += v;
            CHECK(link.group(s).total() == expect);
        }
        // Poincare duality of the link away from the middle degrees
        for (int s = 2; s <= 2 * d - 1; ++s) {
            if (s == d || s == d + 1) continue;
            CHECK(link.group(s).total() == link.group(2 * d + 1 - s).total());
        }
    }
}

TEST_CASE("cone rejects invalid bases") {
    HodgeDiamond bad(1);
    bad.set(0, 0, 0, 1);
    bad.set(1, 1, 0, 1); // breaks Hodge symmetry
    bad.set(2, 1, 1, 1);
    CHECK_THROWS_AS(cone_link(bad), std::invalid_argument);
    CHECK_THROWS_AS(cone_link(pn_diamond(0)), std::invalid_argument);
}
