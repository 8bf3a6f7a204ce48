#include "doctest.h"

#include <random>
#include <vector>

#include "hlnum/complete_intersection.hpp"
#include "hlnum/errors.hpp"
#include "hlnum/hl_table.hpp"

using namespace hlnum;

namespace {

HodgeDiamond elliptic_curve() {
    return ci_diamond({1, {3}});
}

HodgeDiamond quadric_surface() {
    return kunneth(pn_diamond(1), pn_diamond(1));
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

// the local cohomology of a d-dimensional smooth point: a single class in
// H^{2d} of type (d, d)
LinkCohomology smooth_point_link(int d) {
    LinkCohomology link(d);
    PunctualMHS top;
    top.set(d, d, 1);
    link.set_group(2 * d, top);
    return link;
}

} // namespace

TEST_CASE("table storage") {
    HLTable t(3);
    t.set(0, 2, -1, 0, 4);
    CHECK(t.at(0, 2, -1, 0) == 4);
    CHECK(t.at(0, 2, 0, -1) == 0);
    t.add(0, 2, -1, 0, 1);
    CHECK(t.at(0, 2, -1, 0) == 5);
    t.set(0, 2, -1, 0, 0);
    CHECK(t.entries().empty());

    CHECK_THROWS_AS(t.set(4, 3, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(t.set(0, -1, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(t.set(0, 2, 0, 0, -2), std::invalid_argument);
    CHECK_THROWS_AS(HLTable(1), std::invalid_argument);
}

TEST_CASE("smooth point table") {
    for (int d = 2; d <= 4; ++d) {
        std::vector<std::string> ignored;
        HLTable t = hl_from_link(smooth_point_link(d), &ignored);
        CHECK(ignored.empty());
        CHECK(t.entries().size() == 1);
        CHECK(t.at(d, d, 0, 0) == 1);
        CHECK(check_euler(t).pass);
        CHECK(check_duality(t).pass);
        CHECK(check_support(t).empty());
        CHECK(check_weight_lines(t).empty());
    }
}

TEST_CASE("cones over curves and surfaces") {
    // cone over P^1 (a smooth point in disguise) and cone over an elliptic
    // curve have the same refined table; the difference lives in the ignored
    // middle groups
    HLTable p1 = hl_cone(pn_diamond(1));
    CHECK(p1.entries().size() == 1);
    CHECK(p1.at(2, 2, 0, 0) == 1);

    HLTable e = hl_cone(elliptic_curve());
    CHECK(e == p1);

    std::vector<std::string> ignored;
    HLTable e2 = hl_from_link(cone_link(elliptic_curve()), &ignored);
    CHECK(e2 == e);
    REQUIRE(ignored.size() == 2); // H^2 (s = d) and H^3 (s = d + 1)
    CHECK(ignored[0].find("H^2") != std::string::npos);
    CHECK(ignored[1].find("H^3") != std::string::npos);

    HLTable quadric = hl_cone(quadric_surface());
    CHECK(quadric.entries().size() == 1);
    CHECK(quadric.at(3, 3, 0, 0) == 1);
}

TEST_CASE("cone over E x P^1") {
    HLTable t = hl_cone(kunneth(elliptic_curve(), pn_diamond(1)));
    CHECK(t.d() == 3);
    CHECK(t.at(0, 2, -1, 0) == 1);
    CHECK(t.at(0, 2, 0, -1) == 1);
    CHECK(t.at(2, 3, -1, 0) == 1);
    CHECK(t.at(2, 3, 0, -1) == 1);
    CHECK(t.at(3, 3, 0, 0) == 1);
    CHECK(t.entries().size() == 5);

    auto marg = classical(t);
    CHECK(marg.at({0, 2}) == 2);
    CHECK(marg.at({2, 3}) == 2);
    CHECK(marg.at({3, 3}) == 1);
    CHECK(marg.size() == 3);

    CHECK(check_euler(t).pass);
    CHECK(check_duality(t).pass);
    CHECK(check_support(t).empty());
    CHECK(check_weight_lines(t).empty());
}

TEST_CASE("cone over the quintic threefold") {
    // every visible slot cancels except the top corner: the big middle
    // cohomology sits in the two ignored degrees s = d, d + 1
    HLTable t = hl_cone(ci_diamond({3, {5}}));
    CHECK(t.d() == 4);
    CHECK(t.entries().size() == 1);
    CHECK(t.at(4, 4, 0, 0) == 1);
}

TEST_CASE("cones over threefold-by-line products carry the middle row") {
    HodgeDiamond n1 = kunneth(ci_diamond({3, {70, 16, 16, 14, 7, 6}}), pn_diamond(1));
    HodgeDiamond n2 = kunneth(ci_diamond({3, {56, 49, 8, 6, 5, 4, 4}}), pn_diamond(1));

    HLTable t1 = hl_cone(n1);
    HLTable t2 = hl_cone(n2);
    CHECK(t1.d() == 5);

    CHECK(t1.at(0, 4, -1, -2) == Int("3365330286081"));
    CHECK(t1.at(0, 4, 0, -3) == Int("518382430721"));
    CHECK(t1.at(0, 3, -1, -1) == 1);
    CHECK(t1.at(2, 5, -2, -1) == Int("3365330286081"));
    CHECK(t1.at(3, 5, -1, -1) == 1);
    CHECK(t1.at(5, 5, 0, 0) == 1);

    CHECK(t2.at(0, 4, -1, -2) == Int("3343868254721"));
    CHECK(t2.at(0, 4, 0, -3) == Int("539844462081"));

    CHECK(classical(t1) == classical(t2));
    CHECK(classical(t1).at({0, 4}) == Int("7767425433604"));
    CHECK(t1 != t2);

    for (const HLTable* t : {&t1, &t2}) {
        CHECK(check_euler(*t).pass);
        CHECK(check_duality(*t).pass);
        CHECK(check_support(*t).empty());
        CHECK(check_weight_lines(*t).empty());
    }
}

TEST_CASE("direct cone table agrees with the link route") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        HodgeDiamond base = random_product(rng);
        CHECK(hl_cone(base) == hl_from_link(cone_link(base)));
    }
}

TEST_CASE("cone tables satisfy the structural identities") {
    std::mt19937 rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        HodgeDiamond base = random_product(rng);
        HLTable t = hl_cone(base);
        const int d = t.d();
        CHECK(check_euler(t).pass);
        CHECK(check_duality(t).pass);
        CHECK(check_support(t).empty());
        CHECK(check_weight_lines(t).empty());
        CHECK(t.at(d, d, 0, 0) == 1);
        // the top corner is the only entry in the (d, d) cell
        for (const auto& [key, v] : t.entries()) {
            (void)v;
            if (key.r == d && key.s == d) CHECK((key.p == 0 && key.q == 0));
        }
        // marginals reproduce the dimensions of the link groups they read
        LinkCohomology link = cone_link(base);
        auto marg = classical(t);
        auto marg_at = [&](int r, int s) {
            auto it = marg.find({r, s});
            return it == marg.end() ? Int(0) : it->second;
        };
        for (int s = 2; s <= d - 1; ++s)
            CHECK(marg_at(0, s) == link.group(s).total());
        for (int r = 2; r <= d; ++r)
            CHECK(marg_at(r, d) == link.group(d + r).total());
    }
}

TEST_CASE("euler check flags a corrupted table") {
    HLTable t(3);
    t.set(3, 3, 0, 0, 2);
    EulerReport r = check_euler(t);
    CHECK_FALSE(r.pass);
    CHECK(r.totals.at({0, 0}) == 2);

    HLTable empty(3);
    CHECK_FALSE(check_euler(empty).pass);
    CHECK(check_euler(empty).totals.at({0, 0}) == 0);
}

TEST_CASE("duality check reports counterexamples") {
    HLTable t(3);
    t.set(0, 2, -1, 0, 1);
    t.set(3, 3, 0, 0, 1);
    DualityReport r = check_duality(t);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexamples.size() == 1);
    CHECK(r.counterexamples[0].i == 2);
    CHECK(r.counterexamples[0].p == -1);
    CHECK(r.counterexamples[0].q == 0);
    CHECK(r.counterexamples[0].lhs == 1);
    CHECK(r.counterexamples[0].rhs == 0);

    // d = 2 has no constrained column, so the check is vacuous
    HLTable flat(2);
    flat.set(2, 2, 0, 0, 5);
    CHECK(check_duality(flat).pass);
}

TEST_CASE("support and weight-line checks") {
    HLTable t(3);
    t.set(1, 2, 0, 0, 1); // r = 1 is never populated
    t.set(0, 3, 0, 0, 1); // s = d belongs to the column family, not the row
    auto bad = check_support(t);
    CHECK(bad.size() == 2);

    HLTable w(3);
    w.set(0, 2, -1, -1, 1); // weight -2, expected 1 - s = -1
    w.set(2, 3, -1, 0, 1);  // correct line for (r=2, d=3)
    auto off = check_weight_lines(w);
    REQUIRE(off.size() == 1);
    CHECK(off[0].find("r=0") != std::string::npos);
}

TEST_CASE("intersection-complex quotient") {
    PunctualMHS q = ic_quotient(quadric_surface());
    CHECK(q.entries().size() == 1);
    CHECK(q.at(-1, -1) == 1);

    PunctualMHS e = ic_quotient(elliptic_curve());
    CHECK(e.at(-1, 0) == 1);
    CHECK(e.at(0, -1) == 1);
    CHECK(e.total() == 2);

    PunctualMHS quintic = ic_quotient(ci_diamond({3, {5}}));
    CHECK(quintic.total() == 204);
    for (const auto& [key, v] : quintic.entries()) {
        (void)v;
        CHECK(key.p + key.q == -3);
    }
    CHECK(quintic.at(-1, -2) == 101);
    CHECK(quintic.at(0, -3) == 1);

    // projective space has no primitive cohomology above degree zero
    CHECK(ic_quotient(pn_diamond(2)).is_zero());
    CHECK(ic_quotient(pn_diamond(3)).is_zero());
}
