#include "counting.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_map>

namespace aclat {

namespace {

using Bits = std::uint64_t;

// Index view of a poset: per level the member list plus, for each member,
// the bitmask of its in-poset immediate predecessors on the level below.
struct LevelContext {
    int n = 0;
    int m = 0;
    int M = -1;
    std::vector<std::vector<Mask>> mem;        // mem[l], l = 0..M
    std::vector<std::vector<Bits>> pred_bits;  // pred_bits[l][i] over mem[l-1]

    int level_size(int l) const {
        return (l < 0 || l > M) ? 0 : static_cast<int>(mem[l].size());
    }

    Bits full_bits(int l) const {
        int k = level_size(l);
        return k == 64 ? ~Bits{0} : (Bits{1} << k) - 1;
    }

    Bits down_bits(int l, Bits s) const {
        Bits out = 0;
        const auto& pb = pred_bits[l];
        for (int i = 0; s; ++i, s >>= 1)
            if (s & 1) out |= pb[i];
        return out;
    }

    Bits up_bits(int l, Bits s) const {
        if (l + 1 > M) return 0;
        Bits out = 0;
        const auto& pb = pred_bits[l + 1];
        for (std::size_t j = 0; j < pb.size(); ++j)
            if ((pb[j] & ~s) == 0) out |= Bits{1} << j;
        return out;
    }

    int up_count(int l, Bits s) const { return std::popcount(up_bits(l, s)); }

    Antichain to_antichain(int l, Bits s) const {
        std::vector<Mask> out;
        for (int i = 0; s; ++i, s >>= 1)
            if (s & 1) out.push_back(mem[l][i]);
        return Antichain::from_sets(n, std::move(out));
    }

    Bits to_bits(int l, const Antichain& a) const {
        Bits out = 0;
        for (Mask x : a.sets()) {
            auto it = std::find(mem[l].begin(), mem[l].end(), x);
            if (it == mem[l].end())
                throw precondition_error("antichain member outside poset level " + std::to_string(l));
            out |= Bits{1} << (it - mem[l].begin());
        }
        return out;
    }
};

LevelContext build_context(const IntervalPoset& p) {
    LevelContext c;
    c.n = p.n();
    if (p.empty()) return c;
    c.m = p.m();
    c.M = p.M();
    c.mem.resize(c.M + 1);
    c.pred_bits.resize(c.M + 1);
    for (int l = c.m; l <= c.M; ++l) {
        c.mem[l] = p.level(l);
        if (c.mem[l].size() > 63)
            throw usage_error("poset level " + std::to_string(l) +
                              " has more than 63 members; subset enumeration is infeasible");
    }
    for (int l = c.m; l <= c.M; ++l) {
        c.pred_bits[l].assign(c.mem[l].size(), 0);
        if (l == c.m) continue;
        const auto& below = c.mem[l - 1];
        for (std::size_t i = 0; i < c.mem[l].size(); ++i) {
            Mask x = c.mem[l][i];
            for (std::size_t j = 0; j < below.size(); ++j)
                if (proper_subset_of(below[j], x) && set_size(below[j]) == l - 1)
                    c.pred_bits[l][i] |= Bits{1} << j;
        }
    }
    return c;
}

Count pow2(int e) { return Count{1} << e; }

using Memo = std::vector<std::unordered_map<Bits, Count>>;

// Algorithm "NumberAntiChains": the number of antichains gamma with set sizes
// <= l whose level-l canonical layer equals chi_l.
Count nac(const LevelContext& c, int l, Bits chi_l, Memo& memo) {
    if (l == c.m) return 1;
    Bits dn = c.down_bits(l, chi_l);
    if (l == c.m + 1)
        return pow2(c.level_size(c.m) - std::popcount(dn));
    auto& cache = memo[l];
    if (auto it = cache.find(chi_l); it != cache.end()) return it->second;
    const int dcount = std::popcount(dn);
    const Bits core = c.down_bits(l - 1, dn);  // chi_l^{--}
    const Bits free = c.full_bits(l - 2) & ~core;
    Count sum = 0;
    // chi_{l-2} ranges over supersets of the forced core.
    Bits sub = free;
    for (;;) {
        Bits t = core | sub;
        sum += pow2(c.up_count(l - 2, t) - dcount) * nac(c, l - 2, t, memo);
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    cache.emplace(chi_l, sum);
    return sum;
}

// Splits the outer subset range [0, 2^level_size) into contiguous chunks, one
// per thread, and adds the partial sums in chunk order.
Count subset_sum(const LevelContext& c, int level, int threads,
                 const std::function<Count(const LevelContext&, Bits, Bits, Memo&)>& body) {
    const Bits total = c.full_bits(level) + 1;  // number of subsets
    if (threads < 1) threads = 1;
    if (threads == 1 || total < 16) {
        Memo memo(c.M + 1);
        return body(c, 0, total, memo);
    }
    const Bits chunk = (total + threads - 1) / threads;
    std::vector<Count> partial(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        Bits lo = std::min<Bits>(t * chunk, total);
        Bits hi = std::min<Bits>(lo + chunk, total);
        pool.emplace_back([&, t, lo, hi] {
            Memo memo(c.M + 1);
            partial[t] = body(c, lo, hi, memo);
        });
    }
    for (auto& th : pool) th.join();
    Count sum = 0;
    for (const Count& p : partial) sum += p;
    return sum;
}

Parity pick_parity(const LevelContext& c) {
    if (c.M <= c.m) return Parity::FormulaI;
    int largest = c.m;
    for (int l = c.m; l <= c.M; ++l)
        if (c.level_size(l) > c.level_size(largest)) largest = l;
    // Formula (i) sums the levels M, M-2, ...; avoid the one holding the
    // largest level.
    return ((c.M - largest) % 2 == 0) ? Parity::FormulaII : Parity::FormulaI;
}

Count sized_context(const LevelContext& c, Parity parity, int threads) {
    if (c.M < c.m) return 1;  // empty poset: only alpha itself
    if (parity == Parity::Auto) parity = pick_parity(c);
    if (c.M == c.m) return pow2(c.level_size(c.m));
    if (parity == Parity::FormulaI) {
        return subset_sum(c, c.M, threads,
                          [](const LevelContext& cc, Bits lo, Bits hi, Memo& memo) {
                              Count sum = 0;
                              for (Bits s = lo; s < hi; ++s) sum += nac(cc, cc.M, s, memo);
                              return sum;
                          });
    }
    return subset_sum(c, c.M - 1, threads,
                      [](const LevelContext& cc, Bits lo, Bits hi, Memo& memo) {
                          Count sum = 0;
                          for (Bits s = lo; s < hi; ++s)
                              sum += pow2(cc.up_count(cc.M - 1, s)) * nac(cc, cc.M - 1, s, memo);
                          return sum;
                      });
}

Antichain join_levels(const Interval& i, const LevelContext& c, int from, int to,
                      std::vector<Mask> extra) {
    std::vector<Mask> all(i.bottom.sets());
    for (int l = from; l <= to && l <= c.M; ++l)
        if (l >= c.m) all.insert(all.end(), c.mem[l].begin(), c.mem[l].end());
    all.insert(all.end(), extra.begin(), extra.end());
    return Antichain::max_ac(i.n(), std::move(all));
}

std::vector<Mask> bits_masks(const LevelContext& c, int l, Bits s) {
    std::vector<Mask> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1) out.push_back(c.mem[l][i]);
    return out;
}

// alpha v chi_k v chi_k^+ v ... v chi_k^{+(upto-k)}
Antichain join_up_chain(const Interval& i, const LevelContext& c, int k, Bits s, int upto) {
    std::vector<Mask> all(i.bottom.sets());
    Bits cur = s;
    for (int l = k; l <= upto; ++l) {
        auto ms = bits_masks(c, l, cur);
        all.insert(all.end(), ms.begin(), ms.end());
        cur = c.up_bits(l, cur);
    }
    return Antichain::max_ac(i.n(), std::move(all));
}

}  // namespace

Antichain level(const IntervalPoset& p, int l) {
    return Antichain::from_sets(p.n(), p.level(l));
}

namespace {

// Returns the (uniform) level of chi's members; throws if mixed or outside p.
int uniform_level(const Antichain& chi, const IntervalPoset& p) {
    int l = -1;
    for (Mask x : chi.sets()) {
        if (!p.contains(x))
            throw precondition_error("antichain member " + format_mask(x) + " is outside the poset");
        int s = set_size(x);
        if (l == -1) l = s;
        else if (l != s)
            throw precondition_error("antichain is not uniform");
    }
    return l;
}

}  // namespace

Antichain down(const Antichain& chi, const IntervalPoset& p) {
    uniform_level(chi, p);
    std::vector<Mask> out;
    for (Mask x : chi.sets()) {
        Antichain ps = pred(chi.n(), x);
        for (Mask q : ps.sets())
            if (p.contains(q)) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Antichain::from_sets(chi.n(), std::move(out));
}

Antichain up(const Antichain& chi, const IntervalPoset& p, std::optional<int> chi_level) {
    int l = uniform_level(chi, p);
    if (l == -1) {
        if (chi_level) l = *chi_level;
        else if (p.m() == 0) l = -1;  // bottom^+ = {emptyset} convention
        else throw usage_error("up of the empty antichain needs an explicit level");
    } else if (chi_level && *chi_level != l) {
        throw usage_error("declared level does not match the antichain");
    }
    std::vector<Mask> out;
    for (Mask x : p.level(l + 1)) {
        bool ok = true;
        Antichain ps = pred(chi.n(), x);
        for (Mask q : ps.sets())
            if (p.contains(q) && !chi.contains(q)) { ok = false; break; }
        if (ok) out.push_back(x);
    }
    return Antichain::from_sets(chi.n(), std::move(out));
}

LevelDecomposition canonical_decomposition(const Interval& i, const Antichain& chi) {
    if (!interval_contains(i, chi))
        throw precondition_error("antichain lies outside the interval");
    IntervalPoset p = underlying_poset(i);
    LevelDecomposition d;
    d.alpha = i.bottom;
    if (p.empty()) return d;
    d.m = p.m();
    d.M = p.M();
    d.layers.assign(d.M - d.m + 1, Antichain::bottom(i.n()));
    // chi - alpha, split by level.
    std::vector<std::vector<Mask>> lv(d.M + 1);
    for (Mask x : chi.sets())
        if (!i.bottom.contains(x)) lv[set_size(x)].push_back(x);
    Antichain above = Antichain::bottom(i.n());  // chi_{l+1}^-
    for (int l = d.M; l >= d.m; --l) {
        std::vector<Mask> layer = lv[l];
        layer.insert(layer.end(), above.sets().begin(), above.sets().end());
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        d.layers[l - d.m] = Antichain::from_sets(i.n(), std::move(layer));
        above = down(d.layers[l - d.m], p);
    }
    return d;
}

Antichain recombine(const LevelDecomposition& d) {
    Antichain out = d.alpha;
    for (const Antichain& layer : d.layers) out = join(out, layer);
    return out;
}

Count size_even_odd(const Interval& i, Parity parity, int threads) {
    if (i.empty()) return 0;
    LevelContext c = build_context(underlying_poset(i));
    return sized_context(c, parity, threads);
}

Count size_pivot(const Interval& i, int k, int threads) {
    if (i.empty()) return 0;
    LevelContext c = build_context(underlying_poset(i));
    if (c.M < c.m || !(c.m < k && k < c.M))
        throw usage_error("pivot level must satisfy m < k < M");
    return subset_sum(c, k, threads,
                      [&i, k](const LevelContext& cc, Bits lo, Bits hi, Memo&) {
                          Count sum = 0;
                          for (Bits s = lo; s < hi; ++s) {
                              Antichain bottom = join_levels(i, cc, 0, -1, bits_masks(cc, k, s));
                              Antichain lower_top = join_levels(i, cc, cc.m, k - 1, bits_masks(cc, k, s));
                              Antichain upper_top = join_up_chain(i, cc, k, s, cc.M);
                              sum += size_even_odd(Interval{bottom, lower_top}) *
                                     size_even_odd(Interval{bottom, upper_top});
                          }
                          return sum;
                      });
}

namespace {

// Inner sums of the multilevel expansion: given the fixed layer at ks[j],
// sum over the admissible layers at ks[j+1] of the horizontal-block size
// times the rest; the innermost factor is the upper tail above ks.back().
Count multilevel_rest(const Interval& i, const LevelContext& c, const std::vector<int>& ks,
                      std::size_t j, Bits s, const Antichain& bottom) {
    const int k = ks[j];
    if (j + 1 == ks.size()) {
        Antichain tail_top = join(join_up_chain(i, c, k, s, c.M), bottom);
        return size_even_odd(Interval{bottom, tail_top});
    }
    const int k2 = ks[j + 1];
    // Admissible chi_{k2} are subsets of chi_k^{+(k2-k)}.
    Bits allowed = s;
    for (int l = k; l < k2; ++l) allowed = c.up_bits(l, allowed);
    Count sum = 0;
    Bits t = allowed;
    for (;;) {
        Antichain next_bottom = join(bottom, c.to_antichain(k2, t));
        // Horizontal block: everything strictly between k and k2 is free up
        // to the chain chi_k^+, ..., chi_k^{+(k2-k-1)}.
        Antichain h_top = join(join_up_chain(i, c, k, s, k2 - 1), next_bottom);
        Count h = size_even_odd(Interval{next_bottom, h_top});
        if (h != 0)
            sum += h * multilevel_rest(i, c, ks, j + 1, t, next_bottom);
        if (t == 0) break;
        t = (t - 1) & allowed;
    }
    return sum;
}

}  // namespace

Count size_multilevel(const Interval& i, const std::vector<int>& ks, int threads) {
    if (i.empty()) return 0;
    LevelContext c = build_context(underlying_poset(i));
    if (ks.empty()) throw usage_error("multilevel needs at least one level");
    for (std::size_t j = 0; j + 1 < ks.size(); ++j)
        if (ks[j] >= ks[j + 1]) throw usage_error("multilevel levels must be strictly ascending");
    if (c.M < c.m || ks.front() <= c.m || ks.back() >= c.M)
        throw usage_error("multilevel levels must lie strictly between m and M");
    const int k1 = ks.front();
    return subset_sum(c, k1, threads,
                      [&](const LevelContext& cc, Bits lo, Bits hi, Memo&) {
                          Count sum = 0;
                          for (Bits s = lo; s < hi; ++s) {
                              Antichain bottom = join_levels(i, cc, 0, -1, bits_masks(cc, k1, s));
                              Antichain b_top = join_levels(i, cc, cc.m, k1 - 1, bits_masks(cc, k1, s));
                              Count b = size_even_odd(Interval{bottom, b_top});
                              if (b != 0)
                                  sum += b * multilevel_rest(i, cc, ks, 0, s, bottom);
                          }
                          return sum;
                      });
}

IntervalPoset horizontal_poset(const Interval& i,
                               const std::vector<std::pair<int, Antichain>>& layers) {
    if (layers.size() < 2)
        throw usage_error("horizontal poset needs at least two fixed layers");
    IntervalPoset p = underlying_poset(i);
    LevelContext c = build_context(p);
    std::vector<std::pair<int, Bits>> fixed;
    for (const auto& [k, chi] : layers) {
        if (!(c.m < k && k < c.M))
            throw usage_error("layer level must satisfy m < k < M");
        fixed.emplace_back(k, c.to_bits(k, chi));
    }
    for (std::size_t j = 0; j + 1 < fixed.size(); ++j) {
        auto [k, s] = fixed[j];
        auto [k2, t] = fixed[j + 1];
        if (k >= k2) throw usage_error("layer levels must be strictly ascending");
        Bits allowed = s;
        for (int l = k; l < k2; ++l) allowed = c.up_bits(l, allowed);
        if (t & ~allowed)
            throw precondition_error("inconsistent layers: chi_" + std::to_string(k2) +
                                     " is not below the up-chain of chi_" + std::to_string(k));
    }
    auto [kp1, sp1] = fixed[fixed.size() - 2];
    auto [kp, sp] = fixed.back();
    std::vector<Mask> members;
    Bits up_chain = sp1;
    std::vector<Bits> dn(kp + 1, 0);
    dn[kp] = sp;
    for (int l = kp - 1; l > kp1; --l) dn[l] = c.down_bits(l + 1, dn[l + 1]);
    for (int l = kp1 + 1; l < kp; ++l) {
        up_chain = c.up_bits(l - 1, up_chain);
        auto ms = bits_masks(c, l, up_chain & ~dn[l]);
        members.insert(members.end(), ms.begin(), ms.end());
    }
    return IntervalPoset(i.n(), std::move(members));
}

Interval layer_membership_interval(const Interval& i, int k, const Antichain& rho) {
    IntervalPoset p = underlying_poset(i);
    LevelContext c = build_context(p);
    if (c.M < c.m || !(c.m < k && k < c.M))
        throw usage_error("level must satisfy m < k < M");
    Bits s;
    try {
        s = c.to_bits(k, rho);
    } catch (const precondition_error&) {
        throw precondition_error("rho is not a subset of poset level " + std::to_string(k));
    }
    Antichain bottom = join_levels(i, c, 0, -1, bits_masks(c, k, s));
    std::vector<Mask> low;
    for (int l = c.m; l < k; ++l)
        low.insert(low.end(), c.mem[l].begin(), c.mem[l].end());
    Antichain top = join(join_up_chain(i, c, k, s, c.M),
                         Antichain::max_ac(i.n(), std::move(low)));
    return Interval{std::move(bottom), std::move(top)};
}

}  // namespace aclat
