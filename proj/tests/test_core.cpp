#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "antichain.hpp"
#include "oracle.hpp"

using namespace aclat;

static Antichain ac(int n, const char* text) { return parse_antichain(n, text); }

TEST_CASE("max_ac removes dominated sets") {
    CHECK(Antichain::max_ac(2, {0b01, 0b11}) == ac(2, "{{1,2}}"));
    CHECK(Antichain::max_ac(3, {}) == Antichain::bottom(3));
    CHECK(Antichain::max_ac(3, {0b001, 0b110}) == ac(3, "{{1},{2,3}}"));
}

TEST_CASE("leq") {
    CHECK(leq(ac(2, "{{1}}"), ac(2, "{{1,2}}")));
    CHECK(leq(Antichain::bottom(2), ac(2, "{{1}}")));
    CHECK(leq(Antichain::bottom(2), Antichain::bottom(2)));
    CHECK_FALSE(leq(ac(2, "{{1,2}}"), ac(2, "{{1}}")));
    // bottom and {emptyset} are distinct
    CHECK(leq(Antichain::bottom(2), ac(2, "{{}}")));
    CHECK_FALSE(leq(ac(2, "{{}}"), Antichain::bottom(2)));
}

TEST_CASE("join") {
    CHECK(join(ac(2, "{{1}}"), ac(2, "{{2}}")) == ac(2, "{{1},{2}}"));
    CHECK(join(ac(2, "{{1}}"), ac(2, "{{1,2}}")) == ac(2, "{{1,2}}"));
    CHECK(join(Antichain::bottom(2), ac(2, "{{1}}")) == ac(2, "{{1}}"));
}

TEST_CASE("meet") {
    CHECK(meet(ac(3, "{{1,2}}"), ac(3, "{{1,3}}")) == ac(3, "{{1}}"));
    CHECK(meet(ac(3, "{{1,2}}"), ac(3, "{{2,3}}")) == ac(3, "{{2}}"));
    CHECK(meet(ac(3, "{{1,2}}"), Antichain::bottom(3)) == Antichain::bottom(3));
}

TEST_CASE("direct product") {
    CHECK(direct_product(ac(3, "{{1}}"), ac(3, "{{2},{3}}")) == ac(3, "{{1,2},{1,3}}"));
    CHECK(direct_product(ac(3, "{{1},{2}}"), ac(3, "{{3}}")) == ac(3, "{{1,3},{2,3}}"));
    CHECK_THROWS_AS(direct_product(ac(3, "{{1}}"), ac(3, "{{1,2}}")), precondition_error);
}

TEST_CASE("support") {
    CHECK(support(ac(3, "{{1},{2,3}}")) == 0b111);
    CHECK(support(Antichain::bottom(3)) == 0);
    CHECK(support(ac(3, "{{}}")) == 0);
}

TEST_CASE("relabel") {
    CHECK(relabel(ac(3, "{{1},{2,3}}"), {3, 2, 1}) == ac(3, "{{3},{1,2}}"));
    CHECK(relabel(ac(3, "{{1},{2,3}}"), {1, 2, 3}) == ac(3, "{{1},{2,3}}"));
    CHECK(relabel(Antichain::bottom(3), {2, 3, 1}) == Antichain::bottom(3));
    CHECK_THROWS_AS(relabel(ac(3, "{{1}}"), {1, 1, 2}), usage_error);
}

TEST_CASE("parse and format round trip") {
    CHECK(format(ac(3, "{{2,3},{1}}")) == "{{1},{2,3}}");
    CHECK(format(Antichain::bottom(3)) == "{}");
    CHECK(format(ac(3, "{{}}")) == "{{}}");
    CHECK_THROWS_AS(parse_antichain(3, "{{1},{1,2}}"), precondition_error);
    CHECK_THROWS_AS(parse_antichain(3, "{{4}}"), parse_error);
    CHECK_THROWS_AS(parse_antichain(3, "{{1,"), parse_error);
    CHECK(parse_family(3, "{{1},{1,2}}") == ac(3, "{{1,2}}"));
}

TEST_CASE("lattice axioms against the oracle, n <= 4") {
    for (int n = 0; n <= 4; ++n) {
        auto all = all_antichains(n);
        std::mt19937_64 rng(11 + n);
        auto pick = [&] { return all[rng() % all.size()]; };
        for (int t = 0; t < 300; ++t) {
            Antichain a = pick(), b = pick(), c = pick();
            // commutativity, associativity, absorption, distributivity
            CHECK(join(a, b) == join(b, a));
            CHECK(meet(a, b) == meet(b, a));
            CHECK(join(a, join(b, c)) == join(join(a, b), c));
            CHECK(meet(a, meet(b, c)) == meet(meet(a, b), c));
            CHECK(join(a, meet(a, b)) == a);
            CHECK(meet(a, join(a, b)) == a);
            CHECK(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
            // order consistency
            CHECK(leq(a, b) == (join(a, b) == b));
            CHECK(leq(a, b) == (meet(a, b) == a));
            CHECK(leq(meet(a, b), a));
            CHECK(leq(a, join(a, b)));
        }
        // bottom and top really are the extremes
        for (const Antichain& a : all) {
            CHECK(leq(Antichain::bottom(n), a));
            CHECK(leq(a, Antichain::top(n)));
        }
    }
}

TEST_CASE("relabeling is a lattice isomorphism") {
    std::mt19937_64 rng(5);
    auto all = all_antichains(4);
    std::vector<int> perm{2, 4, 1, 3};
    for (int t = 0; t < 200; ++t) {
        Antichain a = all[rng() % all.size()], b = all[rng() % all.size()];
        CHECK(relabel(join(a, b), perm) == join(relabel(a, perm), relabel(b, perm)));
        CHECK(relabel(meet(a, b), perm) == meet(relabel(a, perm), relabel(b, perm)));
        CHECK(leq(a, b) == leq(relabel(a, perm), relabel(b, perm)));
    }
}
