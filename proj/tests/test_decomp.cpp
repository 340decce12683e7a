#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "decomp.hpp"

using namespace aclat;

static Antichain ac(int n, const char* text) { return parse_antichain(n, text); }

TEST_CASE("largest nondominating antichain") {
    CHECK(largest_nondominating(ac(3, "{{1}}")) == ac(3, "{{2,3}}"));
    CHECK(largest_nondominating(Antichain::bottom(3)) == Antichain::top(3));
    CHECK(largest_nondominating(ac(3, "{{1},{2}}")) == ac(3, "{{3}}"));
    CHECK(largest_nondominating(ac(3, "{{}}")) == Antichain::bottom(3));
    // brute confirmation: the largest antichain dominating no member of chi
    for (int n = 2; n <= 4; ++n) {
        auto all = all_antichains(n);
        std::mt19937_64 rng(n);
        for (int t = 0; t < 40; ++t) {
            Antichain chi = all[rng() % all.size()];
            Antichain check = largest_nondominating(chi);
            auto dominates = [&](const Antichain& s) {
                for (Mask x : s.sets())
                    for (Mask c : chi.sets())
                        if (subset_of(c, x)) return true;
                return false;
            };
            CHECK_FALSE(dominates(check));
            for (const Antichain& s : all)
                if (!dominates(s)) CHECK(leq(s, check));
        }
    }
}

TEST_CASE("member difference") {
    CHECK(member_difference(ac(3, "{{1},{2,3}}"), ac(3, "{{1}}")) == ac(3, "{{2,3}}"));
    CHECK(member_difference(ac(3, "{{1}}"), ac(3, "{{1}}")) == Antichain::bottom(3));
}

TEST_CASE("nondominating partition, small cases") {
    PartitionReport one = partition_by_nondominating(Antichain::top(1));
    CHECK(one.blocks.size() == 2);
    CHECK(one.covered == 3);
    CHECK(one.disjoint);
    CHECK(one.complete);

    PartitionReport trivial = partition_by_nondominating(Antichain::bottom(2));
    CHECK(trivial.blocks.size() == 1);
    CHECK(trivial.blocks[0].interval.bottom == Antichain::bottom(2));
    CHECK(trivial.blocks[0].interval.top == Antichain::top(2));
    CHECK(trivial.covered == 6);
}

TEST_CASE("nondominating partition is a partition, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        auto all = all_antichains(n);
        std::mt19937_64 rng(n + 40);
        for (int t = 0; t < 8; ++t) {
            Antichain alpha = all[rng() % all.size()];
            PartitionReport r = partition_by_nondominating(alpha);
            CHECK(r.disjoint);
            CHECK(r.complete);
            CHECK(r.covered == Count(all.size()));
            // cross-check by assigning every antichain to exactly one block
            for (const Antichain& chi : all) {
                int hits = 0;
                for (const auto& b : r.blocks)
                    if (interval_contains(b.interval, chi)) ++hits;
                CHECK(hits == 1);
            }
        }
    }
}

TEST_CASE("interval partition by nondominating") {
    Interval i = make_interval(ac(3, "{{1}}"), ac(3, "{{1,2,3}}"));
    PartitionReport r = partition_interval_by_nondominating(i, i.bottom);
    CHECK(r.covered == 14);
    CHECK(r.disjoint);
    CHECK(r.complete);

    Interval single = make_interval(ac(3, "{{1}}"), ac(3, "{{1}}"));
    PartitionReport s = partition_interval_by_nondominating(single, single.bottom);
    Count nonempty = 0;
    for (const auto& b : s.blocks)
        if (b.size != 0) ++nonempty;
    CHECK(nonempty == 1);
    CHECK(s.covered == 1);

    CHECK_THROWS_AS(partition_interval_by_nondominating(i, ac(3, "{{2}}")), precondition_error);
}

TEST_CASE("direct join split") {
    Antichain alpha = ac(2, "{{}}");
    Antichain nu1 = ac(2, "{{1}}");
    Antichain nu2 = ac(2, "{{2}}");
    auto [c1, c2] = direct_join_split(alpha, nu1, nu2, ac(2, "{{1},{2}}"));
    CHECK(c1 == ac(2, "{{1}}"));
    CHECK(c2 == ac(2, "{{2}}"));

    auto [b1, b2] = direct_join_split(alpha, nu1, nu2, alpha);
    CHECK(b1 == alpha);
    CHECK(b2 == alpha);

    auto [t1, t2] = direct_join_split(alpha, nu1, nu2, join(nu1, nu2));
    CHECK(t1 == join(alpha, nu1));
    CHECK(t2 == join(alpha, nu2));
}

TEST_CASE("product partition of the lattice") {
    PartitionReport r = partition_by_product(4, 0b0011, 0b1100);
    CHECK(r.covered == 168);
    CHECK(r.disjoint);
    CHECK(r.complete);
    PartitionReport r2 = partition_by_product(4, 0b0001, 0b1110);
    CHECK(r2.covered == 168);
    CHECK(dedekind_product(4, 0b0011, 0b1100) == 168);
    CHECK(dedekind_product(4, 0b0001, 0b1110) == 168);
    CHECK(dedekind_product(6, full_mask(3), full_mask(6) & ~full_mask(3)) == 7828354);
}

TEST_CASE("dedekind by levels") {
    const long expect[] = {2, 3, 6, 20, 168, 7581};
    for (int n = 0; n <= 5; ++n) CHECK(dedekind_levels(n) == expect[n]);
    CHECK(dedekind_levels(6) == 7828354);
    CHECK(dedekind_levels(6, Parity::Auto, 4) == 7828354);
}

TEST_CASE("partition csv shape") {
    PartitionReport r = partition_by_nondominating(ac(2, "{{1},{2}}"));
    std::string csv = partition_csv(r);
    CHECK(csv.substr(0, 20) == "key,bottom,top,size\n");
    // one line per block plus header
    std::size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == r.blocks.size() + 1);
}
