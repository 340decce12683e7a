#ifndef ACLAT_ORACLE_HPP
#define ACLAT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "counting.hpp"
#include "interval.hpp"

namespace aclat {

// Brute-force reference implementations.  These are written to be obviously
// correct, not fast, and every property test treats them as ground truth.

struct EnumerationBudget {
    int max_n = 5;  // full enumeration cap; 6 only with an explicit override
    std::uint64_t max_items = 50'000'000;
};

// Yields every antichain over {1..n} exactly once, in a deterministic order
// (including bottom and {emptyset}).
void enumerate_all(int n, const EnumerationBudget& budget,
                   const std::function<void(const Antichain&)>& yield);

// Same, but restricted to antichains whose sets are subsets of `ground`
// (the antichains of a sub-universe, kept inside the ambient universe n).
void enumerate_over(int n, Mask ground, const EnumerationBudget& budget,
                    const std::function<void(const Antichain&)>& yield);

std::vector<Antichain> all_antichains(int n, const EnumerationBudget& budget = {});

void enumerate_interval(const Interval& i, const EnumerationBudget& budget,
                        const std::function<void(const Antichain&)>& yield);

Count size_brute(const Interval& i, const EnumerationBudget& budget = {});
Count dedekind_brute(int n, const EnumerationBudget& budget = {});

}  // namespace aclat

#endif
