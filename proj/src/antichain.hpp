#ifndef ACLAT_ANTICHAIN_HPP
#define ACLAT_ANTICHAIN_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace aclat {

// A subset of {1,...,n} as an n-bit mask; bit i-1 set <=> element i present.
using Mask = std::uint64_t;

inline int set_size(Mask m) { return std::popcount(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool proper_subset_of(Mask a, Mask b) { return a != b && subset_of(a, b); }
inline bool comparable(Mask a, Mask b) { return subset_of(a, b) || subset_of(b, a); }

inline Mask full_mask(int n) {
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Canonical set of pairwise-incomparable masks over the universe {1..n}.
// Members are stored strictly ascending by mask value, so structural equality
// is semantic equality.  The empty antichain (bottom) and {emptyset} are
// distinct values.
class Antichain {
public:
    Antichain() = default;

    static Antichain bottom(int n) { return Antichain(n, {}); }
    static Antichain top(int n) { return Antichain(n, {full_mask(n)}); }

    // Removes every set that is a proper subset of another member.
    static Antichain max_ac(int n, std::vector<Mask> family);

    // Requires the family to already be an antichain; only sorts and dedups.
    static Antichain from_sets(int n, std::vector<Mask> sets);

    int n() const { return n_; }
    const std::vector<Mask>& sets() const { return sets_; }
    bool is_bottom() const { return sets_.empty(); }
    std::size_t size() const { return sets_.size(); }
    bool contains(Mask x) const;

    bool operator==(const Antichain&) const = default;

private:
    Antichain(int n, std::vector<Mask> sets);

    int n_ = 0;
    std::vector<Mask> sets_;
};

void require_same_universe(const Antichain& a, const Antichain& b);

// alpha <= beta: every set of alpha is contained in some set of beta.
bool leq(const Antichain& a, const Antichain& b);

Antichain join(const Antichain& a, const Antichain& b);
Antichain meet(const Antichain& a, const Antichain& b);

// All unions A | B; requires disjoint supports.
Antichain direct_product(const Antichain& a, const Antichain& b);

// Union of all member sets.
Mask support(const Antichain& a);

// perm[i] is the image of element i+1 (values in 1..n).
Antichain relabel(const Antichain& a, const std::vector<int>& perm);

// Textual grammar: antichain := "{" [set ("," set)*] "}",
// set := "{" [int ("," int)*] "}".  "{}" is bottom, "{{}}" is {emptyset}.
Antichain parse_antichain(int n, std::string_view text);

// Parses a possibly non-antichain family and applies max_ac.
Antichain parse_family(int n, std::string_view text);

std::string format(const Antichain& a);
std::string format_mask(Mask x);

}  // namespace aclat

#endif
