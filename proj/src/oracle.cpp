#include "oracle.hpp"

#include <algorithm>

namespace aclat {

namespace {

struct Enumerator {
    int n;
    std::vector<Mask> candidates;  // decreasing mask order
    std::uint64_t yielded = 0;
    std::uint64_t max_items;
    const std::function<void(const Antichain&)>* yield;
    std::vector<Mask> chosen;

    void emit() {
        if (++yielded > max_items)
            throw budget_error("enumeration exceeded max_items = " + std::to_string(max_items));
        std::vector<Mask> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        (*yield)(Antichain::from_sets(n, std::move(sorted)));
    }

    // Extends the current antichain with candidates[pos..]; an antichain is
    // emitted at every node, so each one appears exactly once as the strictly
    // decreasing sequence of its members.
    void extend(std::size_t pos) {
        emit();
        for (std::size_t i = pos; i < candidates.size(); ++i) {
            Mask s = candidates[i];
            bool ok = true;
            for (Mask c : chosen)
                if (comparable(s, c)) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(s);
            extend(i + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

void enumerate_over(int n, Mask ground, const EnumerationBudget& budget,
                    const std::function<void(const Antichain&)>& yield) {
    if (set_size(ground) > budget.max_n)
        throw budget_error("enumeration over " + std::to_string(set_size(ground)) +
                           " elements exceeds the budget max_n = " + std::to_string(budget.max_n));
    if (!subset_of(ground, full_mask(n)))
        throw usage_error("ground set exceeds the universe");
    Enumerator e;
    e.n = n;
    e.max_items = budget.max_items;
    e.yield = &yield;
    // Subsets of ground in decreasing mask order.
    Mask s = ground;
    for (;;) {
        e.candidates.push_back(s);
        if (s == 0) break;
        s = (s - 1) & ground;
    }
    e.extend(0);
}

void enumerate_all(int n, const EnumerationBudget& budget,
                   const std::function<void(const Antichain&)>& yield) {
    enumerate_over(n, full_mask(n), budget, yield);
}

std::vector<Antichain> all_antichains(int n, const EnumerationBudget& budget) {
    std::vector<Antichain> out;
    enumerate_all(n, budget, [&](const Antichain& a) { out.push_back(a); });
    return out;
}

void enumerate_interval(const Interval& i, const EnumerationBudget& budget,
                        const std::function<void(const Antichain&)>& yield) {
    enumerate_all(i.n(), budget, [&](const Antichain& a) {
        if (interval_contains(i, a)) yield(a);
    });
}

Count size_brute(const Interval& i, const EnumerationBudget& budget) {
    Count c = 0;
    enumerate_interval(i, budget, [&](const Antichain&) { ++c; });
    return c;
}

Count dedekind_brute(int n, const EnumerationBudget& budget) {
    Count c = 0;
    enumerate_all(n, budget, [&](const Antichain&) { ++c; });
    return c;
}

}  // namespace aclat
