#ifndef ACLAT_DECOMP_HPP
#define ACLAT_DECOMP_HPP

#include <string>
#include <utility>
#include <vector>

#include "counting.hpp"
#include "interval.hpp"
#include "oracle.hpp"

namespace aclat {

// The largest antichain none of whose members is a superset of any set in
// chi; depends on the ambient universe.  check(bottom) = top, and any chi
// containing the empty set checks to bottom.
Antichain largest_nondominating(const Antichain& chi);

// Member-set difference a - b (not the lattice order).
Antichain member_difference(const Antichain& a, const Antichain& b);

struct PartitionBlock {
    std::string key;  // the sub-antichain (or pair) generating the block
    Interval interval;
    Count size;
};

struct PartitionReport {
    std::vector<PartitionBlock> blocks;
    Count covered;  // sum of block sizes
    bool disjoint = false;
    bool complete = false;
};

// Blocks [chi, check(alpha - chi)] over the member-subsets chi of alpha;
// they partition the whole antichain lattice.
PartitionReport partition_by_nondominating(const Antichain& alpha);

// Blocks [alpha v chi, beta ^ check(gamma - chi)] over chi <= gamma partition
// [alpha, beta]; empty blocks allowed.
PartitionReport partition_interval_by_nondominating(const Interval& i, const Antichain& gamma);

// The unique pair (chi1, chi2) in [alpha, alpha v nu1] x [alpha, alpha v nu2]
// with chi1 v chi2 = chi.
std::pair<Antichain, Antichain> direct_join_split(const Antichain& alpha,
                                                  const Antichain& nu1,
                                                  const Antichain& nu2,
                                                  const Antichain& chi);

// Streams the direct-product blocks of the split {N1, N2}: one [bot, bot]
// block plus one block per pair of non-bottom antichains over each part.
void for_each_product_block(
    int n, Mask n1, Mask n2,
    const std::function<void(const Antichain& a1, const Antichain& a2, const Interval&)>& fn);

PartitionReport partition_by_product(int n, Mask n1, Mask n2);

// M(n) = 1 + sum of product-block sizes.
Count dedekind_product(int n, Mask n1, Mask n2, int threads = 1);
Count dedekind_levels(int n, Parity parity = Parity::Auto, int threads = 1);

std::string partition_csv(const PartitionReport& r);

}  // namespace aclat

#endif
