#include "interval.hpp"

#include <algorithm>
#include <unordered_set>

namespace aclat {

namespace {

bool size_mask_less(Mask a, Mask b) {
    int pa = set_size(a), pb = set_size(b);
    return pa != pb ? pa < pb : a < b;
}

bool singleton_leq(Mask x, const Antichain& a) {
    for (Mask y : a.sets())
        if (subset_of(x, y)) return true;
    return false;
}

}  // namespace

Interval make_interval(Antichain bottom, Antichain top) {
    require_same_universe(bottom, top);
    return Interval{std::move(bottom), std::move(top)};
}

Interval interval_intersect(const Interval& a, const Interval& b) {
    return Interval{join(a.bottom, b.bottom), meet(a.top, b.top)};
}

bool interval_contains(const Interval& i, const Antichain& x) {
    return leq(i.bottom, x) && leq(x, i.top);
}

Antichain clamp(const Interval& i, const Antichain& x) {
    if (i.empty())
        throw precondition_error("clamp requires a nonempty interval");
    return join(i.bottom, meet(x, i.top));
}

Antichain pred(int n, Mask x) {
    std::vector<Mask> out;
    Mask rest = x;
    while (rest) {
        Mask bit = rest & (~rest + 1);
        out.push_back(x & ~bit);
        rest &= rest - 1;
    }
    return Antichain::from_sets(n, std::move(out));
}

IntervalPoset::IntervalPoset(int n, std::vector<Mask> members)
    : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), size_mask_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty()) {
        m_ = set_size(members_.front());
        M_ = set_size(members_.back());
    }
}

std::vector<Mask> IntervalPoset::level(int l) const {
    std::vector<Mask> out;
    for (Mask x : members_)
        if (set_size(x) == l) out.push_back(x);
    return out;
}

bool IntervalPoset::contains(Mask x) const {
    return std::binary_search(members_.begin(), members_.end(), x, size_mask_less);
}

IntervalPoset underlying_poset(const Interval& i) {
    if (i.empty())
        throw precondition_error("underlying poset of an empty interval");
    // Walk down from the top: every candidate is a subset of some B in top,
    // so iterating submasks of the top's sets covers everything with
    // {X} <= top.  Never scans all 2^n masks when the support is small.
    std::unordered_set<Mask> seen;
    std::vector<Mask> members;
    for (Mask b : i.top.sets()) {
        Mask s = b;
        for (;;) {
            if (seen.insert(s).second && !singleton_leq(s, i.bottom))
                members.push_back(s);
            if (s == 0) break;
            s = (s - 1) & b;
        }
    }
    return IntervalPoset(i.n(), std::move(members));
}

bool is_interval_poset(int n, const std::vector<Mask>& sets) {
    (void)n;
    std::unordered_set<Mask> in(sets.begin(), sets.end());
    for (Mask a : sets) {
        for (Mask b : sets) {
            if (!proper_subset_of(a, b)) continue;
            Mask diff = b & ~a;
            // All C with a <= C <= b are a | (submask of diff).
            for (Mask s = diff; s; s = (s - 1) & diff)
                if (!in.count(a | s)) return false;
        }
    }
    return true;
}

Interval interval_from_poset(int n, const std::vector<Mask>& sets) {
    if (!is_interval_poset(n, sets))
        throw precondition_error("set family violates the interval-poset condition [*]");
    std::unordered_set<Mask> in(sets.begin(), sets.end());
    Antichain bottom = Antichain::bottom(n);
    std::vector<Mask> missing_preds;
    for (Mask x : sets) {
        Antichain ps = pred(n, x);
        for (Mask p : ps.sets())
            if (!in.count(p)) missing_preds.push_back(p);
    }
    bottom = Antichain::max_ac(n, std::move(missing_preds));
    Antichain top = Antichain::max_ac(n, sets);
    return Interval{std::move(bottom), std::move(top)};
}

Interval interval_from_poset(const IntervalPoset& p) {
    return interval_from_poset(p.n(), p.members());
}

std::vector<Mask> strip_common(const std::vector<Mask>& sets) {
    if (sets.empty()) return {};
    Mask common = ~Mask{0};
    for (Mask x : sets) common &= x;
    std::vector<Mask> out;
    out.reserve(sets.size());
    for (Mask x : sets) out.push_back(x & ~common);
    return out;
}

Interval lift_interval(const Antichain& chi_lo, const Antichain& chi_hi, Mask a) {
    const int n = chi_lo.n();
    require_same_universe(chi_lo, chi_hi);
    if (!leq(chi_lo, chi_hi))
        throw precondition_error("lift requires chi_lo <= chi_hi");
    if (a == 0)
        throw precondition_error("lift requires a nonempty set A");
    if (a & support(chi_hi))
        throw precondition_error("lift set A intersects the support of chi_hi");
    Antichain a_only = Antichain::from_sets(n, {a});
    Antichain top = direct_product(a_only, chi_hi);
    Antichain bottom = join(direct_product(a_only, chi_lo),
                            direct_product(pred(n, a), chi_hi));
    return Interval{std::move(bottom), std::move(top)};
}

std::string format_poset(const IntervalPoset& p) {
    std::string out;
    if (p.empty()) return "empty\n";
    for (int l = p.m(); l <= p.M(); ++l) {
        auto lv = p.level(l);
        out += "level " + std::to_string(l) + ":";
        bool first = true;
        for (Mask x : lv) {
            out += first ? " " : ",";
            out += format_mask(x);
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace aclat
