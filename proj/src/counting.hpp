#ifndef ACLAT_COUNTING_HPP
#define ACLAT_COUNTING_HPP

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "interval.hpp"

namespace aclat {

// Exact counts; Dedekind-scale sums must never overflow.
using Count = boost::multiprecision::cpp_int;

// Members of poset level l as a (uniform) antichain.
Antichain level(const IntervalPoset& p, int l);

// chi^- : union of in-poset immediate predecessors of a uniform antichain.
Antichain down(const Antichain& chi, const IntervalPoset& p);

// chi^+ : next-level sets all of whose in-poset predecessors lie in chi.
// For chi = bottom the level is ambiguous; callers pass it explicitly
// (level = -1 yields the {emptyset} convention when the poset starts at 0).
Antichain up(const Antichain& chi, const IntervalPoset& p,
             std::optional<int> chi_level = std::nullopt);

// The unique decomposition chi = alpha v chi_m v ... v chi_M with
// chi_{i+1}^- included in chi_i.  layers[i] holds chi_{m+i}.
struct LevelDecomposition {
    Antichain alpha;
    int m = 0;
    int M = -1;
    std::vector<Antichain> layers;

    const Antichain& layer(int l) const { return layers.at(static_cast<std::size_t>(l - m)); }
};

LevelDecomposition canonical_decomposition(const Interval& i, const Antichain& chi);
Antichain recombine(const LevelDecomposition& d);

enum class Parity {
    Auto,      // pick the formula that avoids the largest poset level
    FormulaI,  // sums over chi_M, chi_{M-2}, ...
    FormulaII  // sums over chi_{M-1}, chi_{M-3}, ...
};

// Size of [alpha, beta] by the powers-of-two level recursion.  Degenerate
// cases: empty interval -> 0, empty poset -> 1, single level -> 2^|P^m|.
Count size_even_odd(const Interval& i, Parity parity = Parity::Auto, int threads = 1);

// Size by splitting at pivot level k (m < k < M).
Count size_pivot(const Interval& i, int k, int threads = 1);

// Size by nested splitting at levels m < k_1 < ... < k_t < M.
Count size_multilevel(const Interval& i, const std::vector<int>& ks, int threads = 1);

// Underlying poset of the block interval determined by fixed layers
// (level, chi) via the closed horizontal formula.  Needs >= 2 layers.
IntervalPoset horizontal_poset(const Interval& i,
                               const std::vector<std::pair<int, Antichain>>& layers);

// The interval of exactly those chi in [alpha, beta] whose canonical layer-k
// component equals rho.
Interval layer_membership_interval(const Interval& i, int k, const Antichain& rho);

}  // namespace aclat

#endif
