#include "aclat.h"

#include <cstring>
#include <string>

#include "counting.hpp"
#include "decomp.hpp"
#include "interval.hpp"
#include "oracle.hpp"
#include "verify.hpp"

using namespace aclat;

struct aclat_antichain {
    Antichain value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
aclat_status guarded(Fn&& fn) {
    try {
        fn();
        return ACLAT_OK;
    } catch (const parse_error& e) {
        g_last_error = e.what();
        return ACLAT_ERR_PARSE;
    } catch (const precondition_error& e) {
        g_last_error = e.what();
        return ACLAT_ERR_PRECONDITION;
    } catch (const budget_error& e) {
        g_last_error = e.what();
        return ACLAT_ERR_BUDGET;
    } catch (const usage_error& e) {
        g_last_error = e.what();
        return ACLAT_ERR_USAGE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ACLAT_ERR_USAGE;
    }
}

const Antichain& deref(const aclat_antichain* a) {
    if (!a) throw usage_error("null antichain handle");
    return a->value;
}

std::vector<int> parse_levels(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (out.empty()) throw usage_error("empty level list");
    return out;
}

Count sized_by_method(const Interval& i, const std::string& method, int threads) {
    if (method == "brute") return size_brute(i);
    if (method == "auto" || method.empty()) return size_even_odd(i, Parity::Auto, threads);
    if (method == "even") return size_even_odd(i, Parity::FormulaI, threads);
    if (method == "odd") return size_even_odd(i, Parity::FormulaII, threads);
    if (method.rfind("pivot:", 0) == 0) {
        auto ks = parse_levels(method.substr(6));
        if (ks.size() != 1) throw usage_error("pivot takes one level, e.g. pivot:2");
        return size_pivot(i, ks[0], threads);
    }
    if (method.rfind("multi:", 0) == 0)
        return size_multilevel(i, parse_levels(method.substr(6)), threads);
    throw usage_error("unknown method '" + method + "' (brute|even|odd|auto|pivot:K|multi:K1,K2,...)");
}

std::pair<Mask, Mask> parse_split(int n, const char* split) {
    int s;
    if (!split || !*split) {
        s = (n + 1) / 2;
    } else {
        auto parts = parse_levels(split);
        if (parts.size() != 2 || parts[0] + parts[1] != n || parts[0] < 1 || parts[1] < 1)
            throw usage_error("split must be two positive sizes summing to n, e.g. 3,3");
        s = parts[0];
    }
    if (s < 1 || s >= n)
        throw usage_error("no valid two-part split for n = " + std::to_string(n) +
                          "; the product method needs n >= 2");
    Mask n1 = full_mask(s);
    return {n1, full_mask(n) & ~n1};
}

}  // namespace

extern "C" {

const char* aclat_last_error(void) { return g_last_error.c_str(); }

void aclat_string_free(char* s) { delete[] s; }

void aclat_antichain_free(aclat_antichain* a) { delete a; }

aclat_status aclat_antichain_parse(int n, const char* text, aclat_antichain** out) {
    return guarded([&] {
        if (!text || !out) throw usage_error("null argument");
        *out = new aclat_antichain{parse_antichain(n, text)};
    });
}

aclat_status aclat_antichain_parse_family(int n, const char* text, aclat_antichain** out) {
    return guarded([&] {
        if (!text || !out) throw usage_error("null argument");
        *out = new aclat_antichain{parse_family(n, text)};
    });
}

aclat_status aclat_antichain_format(const aclat_antichain* a, char** out) {
    return guarded([&] { *out = dup_string(format(deref(a))); });
}

aclat_status aclat_join(const aclat_antichain* a, const aclat_antichain* b, aclat_antichain** out) {
    return guarded([&] { *out = new aclat_antichain{join(deref(a), deref(b))}; });
}

aclat_status aclat_meet(const aclat_antichain* a, const aclat_antichain* b, aclat_antichain** out) {
    return guarded([&] { *out = new aclat_antichain{meet(deref(a), deref(b))}; });
}

aclat_status aclat_direct_product(const aclat_antichain* a, const aclat_antichain* b,
                                  aclat_antichain** out) {
    return guarded([&] { *out = new aclat_antichain{direct_product(deref(a), deref(b))}; });
}

aclat_status aclat_leq(const aclat_antichain* a, const aclat_antichain* b, int* out) {
    return guarded([&] { *out = leq(deref(a), deref(b)) ? 1 : 0; });
}

aclat_status aclat_nondominating(const aclat_antichain* a, aclat_antichain** out) {
    return guarded([&] { *out = new aclat_antichain{largest_nondominating(deref(a))}; });
}

aclat_status aclat_interval_size(const aclat_antichain* bottom, const aclat_antichain* top,
                                 const char* method, int threads, char** out_decimal) {
    return guarded([&] {
        Interval i = make_interval(deref(bottom), deref(top));
        Count c = sized_by_method(i, method ? method : "auto", threads);
        *out_decimal = dup_string(c.str());
    });
}

aclat_status aclat_interval_poset(const aclat_antichain* bottom, const aclat_antichain* top,
                                  char** out) {
    return guarded([&] {
        Interval i = make_interval(deref(bottom), deref(top));
        *out = dup_string(format_poset(underlying_poset(i)));
    });
}

aclat_status aclat_interval_decompose(const aclat_antichain* bottom, const aclat_antichain* top,
                                      const aclat_antichain* chi, char** out) {
    return guarded([&] {
        Interval i = make_interval(deref(bottom), deref(top));
        LevelDecomposition d = canonical_decomposition(i, deref(chi));
        std::string text;
        for (int l = d.m; l <= d.M; ++l) {
            if (!text.empty()) text += ' ';
            text += std::to_string(l) + ":" + format(d.layer(l));
        }
        *out = dup_string(text);
    });
}

aclat_status aclat_dedekind(int n, const char* method, const char* split, int threads,
                            char** out_decimal) {
    return guarded([&] {
        std::string m = method ? method : "levels";
        Count c;
        if (m == "brute") {
            c = dedekind_brute(n);
        } else if (m == "levels") {
            c = dedekind_levels(n, Parity::Auto, threads);
        } else if (m == "product") {
            auto [n1, n2] = parse_split(n, split);
            c = dedekind_product(n, n1, n2, threads);
        } else {
            throw usage_error("unknown dedekind method '" + m + "' (brute|levels|product)");
        }
        *out_decimal = dup_string(c.str());
    });
}

aclat_status aclat_partition_csv(int n, const char* kind, const char* arg, char** out) {
    return guarded([&] {
        std::string k = kind ? kind : "";
        PartitionReport r;
        if (k == "nondominating") {
            r = partition_by_nondominating(parse_antichain(n, arg ? arg : "{}"));
        } else if (k == "product") {
            auto [n1, n2] = parse_split(n, arg);
            r = partition_by_product(n, n1, n2);
        } else {
            throw usage_error("unknown partition kind '" + k + "' (nondominating|product)");
        }
        *out = dup_string(partition_csv(r));
    });
}

aclat_status aclat_verify(const char* suite, int n, uint64_t seed, int trials,
                          char** out, int* all_pass) {
    return guarded([&] {
        VerifyReport r = run_suite(suite ? suite : "all", n, seed, trials);
        *out = dup_string(format_report(r));
        *all_pass = r.all_pass() ? 1 : 0;
    });
}

}  // extern "C"
