#ifndef ACLAT_INTERVAL_HPP
#define ACLAT_INTERVAL_HPP

#include <string>
#include <vector>

#include "antichain.hpp"

namespace aclat {

// Closed interval [bottom, top] of antichains.  Nonempty iff bottom <= top.
struct Interval {
    Antichain bottom;
    Antichain top;

    int n() const { return bottom.n(); }
    bool empty() const { return !leq(bottom, top); }
    bool operator==(const Interval&) const = default;
};

Interval make_interval(Antichain bottom, Antichain top);
Interval interval_intersect(const Interval& a, const Interval& b);
bool interval_contains(const Interval& i, const Antichain& x);

// Lattice homomorphism onto [bottom, top]: alpha v (x ^ beta).
Antichain clamp(const Interval& i, const Antichain& x);

// Antichain of immediate subsets {X - {e} | e in X}; pred(emptyset) = bottom.
Antichain pred(int n, Mask x);

// Underlying poset of an interval: the sets X with {X} !<= bottom and
// {X} <= top, grouped by size.  m and M are the smallest and largest member
// sizes (undefined, reported as -1, when the poset is empty).
class IntervalPoset {
public:
    IntervalPoset() = default;
    IntervalPoset(int n, std::vector<Mask> members);

    int n() const { return n_; }
    bool empty() const { return members_.empty(); }
    int m() const { return m_; }
    int M() const { return M_; }
    const std::vector<Mask>& members() const { return members_; }

    // Members of size l, ascending by mask; empty for l outside [m, M].
    std::vector<Mask> level(int l) const;
    bool contains(Mask x) const;

    bool operator==(const IntervalPoset&) const = default;

private:
    int n_ = 0;
    int m_ = -1;
    int M_ = -1;
    std::vector<Mask> members_;  // sorted by (size, mask)
};

IntervalPoset underlying_poset(const Interval& i);

// Convexity condition [*]: any C with A1 <= C <= A2 for members A1, A2 is
// itself a member.
bool is_interval_poset(int n, const std::vector<Mask>& sets);

// Reconstructs the spanned interval from a poset satisfying [*].
Interval interval_from_poset(int n, const std::vector<Mask>& sets);
Interval interval_from_poset(const IntervalPoset& p);

// Subtracts the common core A = intersection of all members from every member.
std::vector<Mask> strip_common(const std::vector<Mask>& sets);

// [({a} x chi_lo) v (pred(a) x chi_hi), {a} x chi_hi]; isomorphic to
// [chi_lo, chi_hi] when a is disjoint from chi_hi's support.
Interval lift_interval(const Antichain& chi_lo, const Antichain& chi_hi, Mask a);

// One line per level: "level k: {..},{..}".
std::string format_poset(const IntervalPoset& p);

}  // namespace aclat

#endif
