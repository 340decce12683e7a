#include "verify.hpp"

#include <optional>
#include <random>

namespace aclat {

namespace {

struct Rng {
    std::mt19937_64 g;

    explicit Rng(std::uint64_t seed) : g(seed) {}

    std::uint64_t next(std::uint64_t bound) {  // uniform in [0, bound)
        return bound ? g() % bound : 0;
    }

    Mask mask(int n) { return static_cast<Mask>(g()) & full_mask(n); }

    Antichain antichain(int n) {
        std::vector<Mask> fam;
        std::size_t k = next(static_cast<std::uint64_t>(n) + 3);
        for (std::size_t i = 0; i < k; ++i) fam.push_back(mask(n));
        return Antichain::max_ac(n, std::move(fam));
    }

    Interval interval(int n) {
        Antichain a = antichain(n), b = antichain(n);
        return Interval{meet(a, b), join(a, b)};
    }

    // Nonempty-poset interval with M - m >= span.
    Interval wide_interval(int n, int span) {
        for (int tries = 0; tries < 1000; ++tries) {
            Interval i = interval(n);
            if (i.empty()) continue;
            IntervalPoset p = underlying_poset(i);
            if (!p.empty() && p.M() - p.m() >= span) return i;
        }
        // Always wide enough as a fallback.
        return Interval{Antichain::bottom(n), Antichain::top(n)};
    }

    // Random subset of a mask list, as an antichain.
    Antichain subset_of_level(int n, const std::vector<Mask>& lv) {
        std::vector<Mask> chosen;
        for (Mask x : lv)
            if (g() & 1) chosen.push_back(x);
        return Antichain::from_sets(n, std::move(chosen));
    }
};

struct Runner {
    int n;
    int trials;
    Rng rng;
    VerifyReport report;

    Runner(int n, std::uint64_t seed, int trials) : n(n), trials(trials), rng(seed) {}

    // Runs `trial` `trials` times; it returns a counterexample string on
    // failure and nullopt otherwise.
    void check(const std::string& name,
               const std::function<std::optional<std::string>(Rng&)>& trial) {
        CheckResult r{name, true, ""};
        try {
            for (int t = 0; t < trials; ++t) {
                if (auto ce = trial(rng)) {
                    r.pass = false;
                    r.detail = "trial " + std::to_string(t) + ": " + *ce;
                    break;
                }
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        report.checks.push_back(std::move(r));
    }

    void once(const std::string& name,
              const std::function<std::optional<std::string>()>& body) {
        check(name, [&](Rng&) { return body(); });
    }
};

std::string ce(const std::string& what, const Antichain& a) {
    return what + " witness " + format(a);
}

// ---------------------------------------------------------------- partitions

void suite_partitions(Runner& r) {
    const int n = r.n;
    r.once("nondominating partition covers A_n for every alpha (n <= 3)", [&]() -> std::optional<std::string> {
        const int nn = std::min(n, 3);
        for (const Antichain& alpha : all_antichains(nn)) {
            PartitionReport pr = partition_by_nondominating(alpha);
            if (!pr.complete || !pr.disjoint)
                return ce("partition failed for alpha =", alpha);
        }
        return std::nullopt;
    });
    r.check("nondominating partition, random alpha", [&](Rng& rng) -> std::optional<std::string> {
        Antichain alpha = rng.antichain(n);
        PartitionReport pr = partition_by_nondominating(alpha);
        if (!pr.complete || !pr.disjoint) return ce("partition failed for alpha =", alpha);
        return std::nullopt;
    });
    r.check("interval partition over gamma", [&](Rng& rng) -> std::optional<std::string> {
        Interval i = rng.interval(n);
        if (i.empty()) return std::nullopt;
        Antichain gamma = clamp(i, rng.antichain(n));
        PartitionReport pr = partition_interval_by_nondominating(i, gamma);
        if (!pr.complete || !pr.disjoint)
            return "failed for [" + format(i.bottom) + "," + format(i.top) + "], gamma = " + format(gamma);
        return std::nullopt;
    });
    r.check("block-key lemma: (sigma ^ alpha) n alpha recovers chi", [&](Rng& rng) -> std::optional<std::string> {
        Antichain alpha = rng.antichain(n);
        PartitionReport pr = partition_by_nondominating(alpha);
        for (const auto& b : pr.blocks) {
            if (b.interval.empty()) continue;
            std::optional<std::string> bad;
            enumerate_interval(b.interval, {}, [&](const Antichain& sigma) {
                // (sigma ^ alpha) n alpha, member-wise
                std::vector<Mask> keep;
                Antichain met = meet(sigma, alpha);
                for (Mask x : met.sets())
                    if (alpha.contains(x)) keep.push_back(x);
                Antichain key = Antichain::from_sets(n, std::move(keep));
                if (format(key) != b.key && !bad)
                    bad = "sigma " + format(sigma) + " keyed " + format(key) + " in block " + b.key;
            });
            if (bad) return bad;
        }
        return std::nullopt;
    });
    if (n >= 2) {
        r.once("product partition, both split shapes", [&]() -> std::optional<std::string> {
            std::vector<std::pair<Mask, Mask>> splits;
            splits.emplace_back(Mask{1}, full_mask(n) & ~Mask{1});
            Mask half = full_mask(n / 2);
            if (half != 0 && half != full_mask(n))
                splits.emplace_back(half, full_mask(n) & ~half);
            for (auto [n1, n2] : splits) {
                PartitionReport pr = partition_by_product(n, n1, n2);
                if (!pr.complete || !pr.disjoint)
                    return "product partition failed for split " + format_mask(n1) + "|" + format_mask(n2);
            }
            return std::nullopt;
        });
        r.check("projection lemma keys every chi", [&](Rng& rng) -> std::optional<std::string> {
            Mask n1 = Mask{1} | (rng.mask(n) & ~Mask{1});
            if (n1 == full_mask(n)) n1 &= ~(Mask{1} << (n - 1));
            Mask n2 = full_mask(n) & ~n1;
            Antichain chi = rng.antichain(n);
            if (chi.is_bottom()) return std::nullopt;
            Antichain a1 = meet(chi, Antichain::from_sets(n, {n1}));
            Antichain a2 = meet(chi, Antichain::from_sets(n, {n2}));
            if (a1.is_bottom() || a2.is_bottom()) return std::nullopt;
            if (!interval_contains(Interval{join(a1, a2), direct_product(a1, a2)}, chi))
                return ce("chi outside its product block:", chi);
            return std::nullopt;
        });
    }
}

// ---------------------------------------------------------------- directjoin

void suite_directjoin(Runner& r) {
    const int n = r.n;
    auto valid_triple = [n](Rng& rng) {
        Antichain nu1 = rng.antichain(n), nu2 = rng.antichain(n);
        Antichain alpha = clamp(Interval{meet(nu1, nu2), join(nu1, nu2)}, rng.antichain(n));
        return std::tuple{alpha, nu1, nu2};
    };
    r.check("direct join: formula pair recombines uniquely", [&](Rng& rng) -> std::optional<std::string> {
        auto [alpha, nu1, nu2] = valid_triple(rng);
        Interval whole{alpha, join(nu1, nu2)};
        std::vector<Antichain> f1, f2;
        enumerate_interval(Interval{alpha, join(alpha, nu1)}, {}, [&](const Antichain& x) { f1.push_back(x); });
        enumerate_interval(Interval{alpha, join(alpha, nu2)}, {}, [&](const Antichain& x) { f2.push_back(x); });
        std::optional<std::string> bad;
        enumerate_interval(whole, {}, [&](const Antichain& chi) {
            if (bad) return;
            auto [c1, c2] = direct_join_split(alpha, nu1, nu2, chi);
            if (join(c1, c2) != chi) { bad = ce("formula pair does not recombine", chi); return; }
            int count = 0;
            for (const Antichain& x1 : f1)
                for (const Antichain& x2 : f2)
                    if (join(x1, x2) == chi) ++count;
            if (count != 1) bad = "chi " + format(chi) + " has " + std::to_string(count) + " pairs";
        });
        return bad;
    });
    r.check("direct join, second form", [&](Rng& rng) -> std::optional<std::string> {
        auto [alpha, nu1, nu2] = valid_triple(rng);
        Interval whole{alpha, join(nu1, nu2)};
        std::vector<Antichain> f1, f2;
        enumerate_interval(Interval{meet(alpha, nu1), nu1}, {}, [&](const Antichain& x) { f1.push_back(x); });
        enumerate_interval(Interval{meet(alpha, nu2), nu2}, {}, [&](const Antichain& x) { f2.push_back(x); });
        std::optional<std::string> bad;
        enumerate_interval(whole, {}, [&](const Antichain& chi) {
            if (bad) return;
            int count = 0;
            for (const Antichain& x1 : f1)
                for (const Antichain& x2 : f2)
                    if (join(x1, x2) == chi) ++count;
            if (count != 1) bad = "chi " + format(chi) + " has " + std::to_string(count) + " pairs";
        });
        return bad;
    });
    r.check("incomparable poset union is an interval poset with product size", [&](Rng& rng) -> std::optional<std::string> {
        Interval i1 = rng.interval(n), i2 = rng.interval(n);
        if (i1.empty() || i2.empty()) return std::nullopt;
        IntervalPoset p1 = underlying_poset(i1), p2 = underlying_poset(i2);
        for (Mask x1 : p1.members())
            for (Mask x2 : p2.members())
                if (comparable(x1, x2)) return std::nullopt;  // hypothesis fails; skip
        if (p1.empty() && p2.empty()) return std::nullopt;
        std::vector<Mask> both = p1.members();
        both.insert(both.end(), p2.members().begin(), p2.members().end());
        if (!is_interval_poset(n, both)) return "poset union violates [*]";
        Count prod = size_brute(interval_from_poset(n, p1.members()), {}) *
                     size_brute(interval_from_poset(n, p2.members()), {});
        if (size_brute(interval_from_poset(n, both), {}) != prod)
            return "direct-join size is not the product";
        return std::nullopt;
    });
}

// -------------------------------------------------------------------- updown

void suite_updown(Runner& r) {
    const int n = r.n;
    r.check("up/down calculus (i)-(v)", [&](Rng& rng) -> std::optional<std::string> {
        Interval i = rng.wide_interval(n, 1);
        IntervalPoset p = underlying_poset(i);
        int l = p.m() + static_cast<int>(rng.next(p.M() - p.m()));
        Antichain delta = rng.subset_of_level(n, p.level(l));
        Antichain gamma = rng.subset_of_level(n, p.level(l + 1));
        auto includes = [](const Antichain& a, const Antichain& b) {  // a subset of b, member-wise
            for (Mask x : a.sets())
                if (!b.contains(x)) return false;
            return true;
        };
        Antichain d_up = up(delta, p, l);
        Antichain g_dn = down(gamma, p);
        if (includes(gamma, d_up) != includes(g_dn, delta))
            return "(i) fails at level " + std::to_string(l);
        // (ii) holds as delta <= (delta^-)^+; the reverse inclusion fails for
        // e.g. delta = {{1,2},{3,4}}, where {1,3} joins (delta^-)^+.
        if (!includes(delta, up(down(delta, p), p, l - 1))) return "(ii) fails";
        if (!includes(down(d_up, p), delta)) return "(iii) fails";
        if (includes(gamma, d_up)) {
            if (!includes(up(gamma, p, l + 1), up(d_up, p, l + 1))) return "(iv) fails";
        }
        if (includes(g_dn, delta)) {
            if (!includes(down(g_dn, p), down(delta, p))) return "(v) fails";
        }
        return std::nullopt;
    });
    r.check("middle-layer choice count is 2^(|lo^+|-|hi^-|)", [&](Rng& rng) -> std::optional<std::string> {
        Interval i = rng.wide_interval(n, 2);
        IntervalPoset p = underlying_poset(i);
        int l = p.m() + static_cast<int>(rng.next(p.M() - p.m() - 1));
        Antichain lo = rng.subset_of_level(n, p.level(l));
        Antichain hi = rng.subset_of_level(n, up(up(lo, p, l), p, l + 1).sets());
        Antichain lo_up = up(lo, p, l);
        Antichain hi_dn = down(hi, p);
        std::uint64_t expect = std::uint64_t{1} << (lo_up.size() - hi_dn.size());
        std::uint64_t got = 0;
        auto lv = p.level(l + 1);
        if (lv.size() > 20) return std::nullopt;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << lv.size()); ++bits) {
            std::vector<Mask> mid;
            for (std::size_t j = 0; j < lv.size(); ++j)
                if (bits & (std::uint64_t{1} << j)) mid.push_back(lv[j]);
            Antichain middle = Antichain::from_sets(n, std::move(mid));
            auto member_subset = [](const Antichain& a, const Antichain& b) {
                for (Mask x : a.sets())
                    if (!b.contains(x)) return false;
                return true;
            };
            if (member_subset(down(middle, p), lo) && member_subset(hi_dn, middle)) ++got;
        }
        if (got != expect)
            return "expected " + std::to_string(expect) + " middles, found " + std::to_string(got);
        return std::nullopt;
    });
    r.check("meet acts layerwise on canonical decompositions", [&](Rng& rng) -> std::optional<std::string> {
        Interval i = rng.wide_interval(n, 0);
        Antichain chi = clamp(i, rng.antichain(n));
        Antichain gam = clamp(i, rng.antichain(n));
        LevelDecomposition dc = canonical_decomposition(i, chi);
        LevelDecomposition dg = canonical_decomposition(i, gam);
        Antichain expect = i.bottom;
        for (int l = dc.m; l <= dc.M; ++l) {
            std::vector<Mask> inter;
            for (Mask x : dc.layer(l).sets())
                if (dg.layer(l).contains(x)) inter.push_back(x);
            expect = join(expect, Antichain::from_sets(i.n(), std::move(inter)));
        }
        if (meet(chi, gam) != expect)
            return "meet of " + format(chi) + " and " + format(gam) + " is not layerwise";
        return std::nullopt;
    });
    r.check("chi <= gamma gives member-wise included layers", [&](Rng& rng) -> std::optional<std::string> {
        Interval i = rng.wide_interval(n, 0);
        Antichain gam = clamp(i, rng.antichain(n));
        Antichain chi = clamp(Interval{i.bottom, gam}, rng.antichain(n));
        LevelDecomposition dc = canonical_decomposition(i, chi);
        LevelDecomposition dg = canonical_decomposition(i, gam);
        for (int l = dc.m; l <= dc.M; ++l)
            for (Mask x : dc.layer(l).sets())
                if (!dg.layer(l).contains(x))
                    return "layer " + std::to_string(l) + " not included for chi = " + format(chi);
        return std::nullopt;
    });
    r.check("upper pivot block levels are iterated up", [&](Rng& rng) -> std::optional<std::string> {
        Interval i = rng.wide_interval(n, 2);
        IntervalPoset p = underlying_poset(i);
        int k = p.m() + 1 + static_cast<int>(rng.next(p.M() - p.m() - 1));
        Antichain chi_k = rng.subset_of_level(n, p.level(k));
        Antichain bottom = join(i.bottom, chi_k);
        Antichain top = bottom;
        Antichain cur = chi_k;
        std::vector<Antichain> chain;
        for (int l = k; l < p.M(); ++l) {
            cur = up(cur, p, l);
            chain.push_back(cur);
            top = join(top, cur);
        }
        Interval upper{bottom, top};
        IntervalPoset pu = underlying_poset(upper);
        for (int l = k + 1; l <= p.M(); ++l) {
            Antichain expect = chain[static_cast<std::size_t>(l - k - 1)];
            if (level(pu, l) != expect)
                return "level " + std::to_string(l) + " of the upper block mismatches";
        }
        // Split lemma: lower ^ upper = alpha v chi_k.
        std::vector<Mask> low;
        for (int l = p.m(); l < k; ++l) {
            auto lv = p.level(l);
            low.insert(low.end(), lv.begin(), lv.end());
        }
        Antichain lower_top = join(join(i.bottom, Antichain::max_ac(n, std::move(low))), chi_k);
        if (meet(lower_top, top) != bottom) return "split lemma fails";
        return std::nullopt;
    });
    r.check("horizontal poset closed formula", [&](Rng& rng) -> std::optional<std::string> {
        Interval i = rng.wide_interval(n, 3);
        IntervalPoset p = underlying_poset(i);
        if (p.M() - p.m() < 3) return std::nullopt;
        int k1 = p.m() + 1;
        int k2 = k1 + 1 + static_cast<int>(rng.next(p.M() - k1 - 1));
        if (k2 >= p.M()) return std::nullopt;
        Antichain chi1 = rng.subset_of_level(n, p.level(k1));
        Antichain allowed = chi1;
        for (int l = k1; l < k2; ++l) allowed = up(allowed, p, l);
        Antichain chi2 = rng.subset_of_level(n, allowed.sets());
        IntervalPoset formula = horizontal_poset(i, {{k1, chi1}, {k2, chi2}});
        // Explicit construction of I_{k2}.
        Antichain bottom = join(join(i.bottom, chi1), chi2);
        Antichain top = bottom;
        Antichain cur = chi1;
        for (int l = k1; l < k2 - 1; ++l) {
            cur = up(cur, p, l);
            top = join(top, cur);
        }
        IntervalPoset explicit_p = underlying_poset(Interval{bottom, top});
        if (formula.members() != explicit_p.members())
            return "horizontal formula mismatch at k1=" + std::to_string(k1) + " k2=" + std::to_string(k2);
        return std::nullopt;
    });
}

}  // namespace

VerifyReport run_suite(const std::string& suite, int n, std::uint64_t seed, int trials) {
    Runner r(n, seed, trials);
    bool known = false;
    if (suite == "partitions" || suite == "all") { suite_partitions(r); known = true; }
    if (suite == "directjoin" || suite == "all") { suite_directjoin(r); known = true; }
    if (suite == "updown" || suite == "all") { suite_updown(r); known = true; }
    if (!known) throw usage_error("unknown suite '" + suite + "' (partitions|directjoin|updown|all)");
    return r.report;
}

std::string format_report(const VerifyReport& r) {
    std::string out;
    for (const auto& c : r.checks) {
        out += (c.pass ? "PASS " : "FAIL ") + c.name;
        if (!c.pass && !c.detail.empty()) out += "\n     " + c.detail;
        out += '\n';
    }
    return out;
}

}  // namespace aclat
