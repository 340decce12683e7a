#include "decomp.hpp"

#include <algorithm>
#include <thread>

namespace aclat {

namespace {

// Exact antichain-level disjointness check; only affordable at small n.
constexpr int kOracleCheckMaxN = 4;

Antichain complement_singletons(int n, Mask x) {
    // check({X}) = {N - {a} | a in X}
    std::vector<Mask> out;
    Mask rest = x;
    const Mask full = full_mask(n);
    while (rest) {
        Mask bit = rest & (~rest + 1);
        out.push_back(full & ~bit);
        rest &= rest - 1;
    }
    return Antichain::from_sets(n, std::move(out));
}

// Member-subsets of alpha in ascending bit order over its canonical list.
void for_each_member_subset(const Antichain& alpha,
                            const std::function<void(const Antichain&)>& fn) {
    const auto& sets = alpha.sets();
    if (sets.size() > 63) throw usage_error("antichain too large for subset enumeration");
    const std::uint64_t total = std::uint64_t{1} << sets.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<Mask> chosen;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (bits & (std::uint64_t{1} << i)) chosen.push_back(sets[i]);
        fn(Antichain::from_sets(alpha.n(), std::move(chosen)));
    }
}

void finish_report(PartitionReport& r, int n, const Count& total,
                   const std::function<void(const std::function<void(const Antichain&)>&)>& domain) {
    r.covered = 0;
    for (const auto& b : r.blocks) r.covered += b.size;
    r.complete = (r.covered == total);
    if (n <= kOracleCheckMaxN) {
        bool ok = true;
        domain([&](const Antichain& x) {
            int hits = 0;
            for (const auto& b : r.blocks)
                if (!b.interval.empty() && interval_contains(b.interval, x)) ++hits;
            if (hits != 1) ok = false;
        });
        r.disjoint = ok;
    } else {
        // Size accounting: a complete cover whose sizes sum to the total
        // cannot overlap.
        r.disjoint = r.complete;
    }
}

}  // namespace

Antichain largest_nondominating(const Antichain& chi) {
    const int n = chi.n();
    Antichain acc = Antichain::top(n);
    for (Mask x : chi.sets())
        acc = meet(acc, complement_singletons(n, x));
    return acc;
}

Antichain member_difference(const Antichain& a, const Antichain& b) {
    std::vector<Mask> out;
    for (Mask x : a.sets())
        if (!b.contains(x)) out.push_back(x);
    return Antichain::from_sets(a.n(), std::move(out));
}

PartitionReport partition_by_nondominating(const Antichain& alpha) {
    const int n = alpha.n();
    PartitionReport r;
    for_each_member_subset(alpha, [&](const Antichain& chi) {
        Interval block{chi, largest_nondominating(member_difference(alpha, chi))};
        Count sz = size_even_odd(block);
        r.blocks.push_back({format(chi), block, std::move(sz)});
    });
    finish_report(r, n, dedekind_levels(n), [n](const auto& fn) {
        enumerate_all(n, {}, fn);
    });
    return r;
}

PartitionReport partition_interval_by_nondominating(const Interval& i, const Antichain& gamma) {
    if (!interval_contains(i, gamma))
        throw precondition_error("gamma lies outside the interval");
    PartitionReport r;
    for_each_member_subset(gamma, [&](const Antichain& chi) {
        Interval block{join(i.bottom, chi),
                       meet(i.top, largest_nondominating(member_difference(gamma, chi)))};
        Count sz = size_even_odd(block);
        r.blocks.push_back({format(chi), block, std::move(sz)});
    });
    finish_report(r, i.n(), size_even_odd(i), [&i](const auto& fn) {
        enumerate_interval(i, {}, fn);
    });
    return r;
}

std::pair<Antichain, Antichain> direct_join_split(const Antichain& alpha,
                                                  const Antichain& nu1,
                                                  const Antichain& nu2,
                                                  const Antichain& chi) {
    Antichain top = join(nu1, nu2);
    if (!leq(meet(nu1, nu2), alpha))
        throw precondition_error("direct join requires nu1 ^ nu2 <= alpha");
    if (!leq(alpha, top))
        throw precondition_error("direct join requires alpha <= nu1 v nu2");
    if (!leq(alpha, chi) || !leq(chi, top))
        throw precondition_error("chi lies outside [alpha, nu1 v nu2]");
    return {join(meet(chi, nu1), alpha), join(meet(chi, nu2), alpha)};
}

void for_each_product_block(
    int n, Mask n1, Mask n2,
    const std::function<void(const Antichain&, const Antichain&, const Interval&)>& fn) {
    if ((n1 | n2) != full_mask(n) || (n1 & n2) != 0 || n1 == 0 || n2 == 0)
        throw usage_error("split must be a two-part partition of {1.." + std::to_string(n) + "}");
    EnumerationBudget part_budget{6, 50'000'000};
    std::vector<Antichain> part1;
    enumerate_over(n, n1, part_budget, [&](const Antichain& a) {
        if (!a.is_bottom()) part1.push_back(a);
    });
    enumerate_over(n, n2, part_budget, [&](const Antichain& a2) {
        if (a2.is_bottom()) return;
        for (const Antichain& a1 : part1)
            fn(a1, a2, Interval{join(a1, a2), direct_product(a1, a2)});
    });
}

PartitionReport partition_by_product(int n, Mask n1, Mask n2) {
    PartitionReport r;
    Antichain bot = Antichain::bottom(n);
    r.blocks.push_back({"(bottom)", Interval{bot, bot}, 1});
    for_each_product_block(n, n1, n2, [&](const Antichain& a1, const Antichain& a2, const Interval& b) {
        r.blocks.push_back({format(a1) + "|" + format(a2), b, size_even_odd(b)});
    });
    finish_report(r, n, dedekind_levels(n), [n](const auto& fn) {
        enumerate_all(n, {}, fn);
    });
    return r;
}

Count dedekind_product(int n, Mask n1, Mask n2, int threads) {
    std::vector<Interval> blocks;
    for_each_product_block(n, n1, n2, [&](const Antichain&, const Antichain&, const Interval& b) {
        blocks.push_back(b);
    });
    if (threads < 1) threads = 1;
    const std::size_t chunk = (blocks.size() + threads - 1) / std::max(threads, 1);
    std::vector<Count> partial(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = std::min(chunk * t, blocks.size());
        std::size_t hi = std::min(lo + chunk, blocks.size());
        pool.emplace_back([&, t, lo, hi] {
            Count sum = 0;
            for (std::size_t j = lo; j < hi; ++j) sum += size_even_odd(blocks[j]);
            partial[t] = std::move(sum);
        });
    }
    for (auto& th : pool) th.join();
    Count total = 1;  // the [bottom, bottom] block
    for (const Count& p : partial) total += p;
    return total;
}

Count dedekind_levels(int n, Parity parity, int threads) {
    return size_even_odd(Interval{Antichain::bottom(n), Antichain::top(n)}, parity, threads);
}

std::string partition_csv(const PartitionReport& r) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    };
    std::string out = "key,bottom,top,size\n";
    for (const auto& b : r.blocks) {
        out += quote(b.key) + ',' + quote(format(b.interval.bottom)) + ',' +
               quote(format(b.interval.top)) + ',' + b.size.str() + '\n';
    }
    return out;
}

}  // namespace aclat
