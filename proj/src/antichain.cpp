#include "antichain.hpp"

#include <algorithm>
#include <cctype>

namespace aclat {

namespace {

void check_n(int n) {
    if (n < 0 || n > 64)
        throw usage_error("universe size must be in 0..64, got " + std::to_string(n));
}

void check_masks(int n, const std::vector<Mask>& sets) {
    const Mask full = full_mask(n);
    for (Mask s : sets)
        if (!subset_of(s, full))
            throw usage_error("set exceeds the universe {1.." + std::to_string(n) + "}");
}

}  // namespace

Antichain::Antichain(int n, std::vector<Mask> sets) : n_(n), sets_(std::move(sets)) {
    check_n(n);
    check_masks(n, sets_);
}

Antichain Antichain::max_ac(int n, std::vector<Mask> family) {
    check_n(n);
    check_masks(n, family);
    // Sort by popcount descending: a kept set can only be dominated by an
    // earlier (larger) one.
    std::sort(family.begin(), family.end(), [](Mask a, Mask b) {
        int pa = set_size(a), pb = set_size(b);
        return pa != pb ? pa > pb : a < b;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<Mask> kept;
    kept.reserve(family.size());
    for (Mask s : family) {
        bool dominated = false;
        for (Mask k : kept)
            if (proper_subset_of(s, k)) { dominated = true; break; }
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return Antichain(n, std::move(kept));
}

Antichain Antichain::from_sets(int n, std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    Antichain a(n, std::move(sets));
    for (std::size_t i = 0; i < a.sets_.size(); ++i)
        for (std::size_t j = i + 1; j < a.sets_.size(); ++j)
            if (comparable(a.sets_[i], a.sets_[j]))
                throw precondition_error("family is not an antichain: " + format_mask(a.sets_[i]) +
                                  " and " + format_mask(a.sets_[j]) + " are comparable");
    return a;
}

bool Antichain::contains(Mask x) const {
    return std::binary_search(sets_.begin(), sets_.end(), x);
}

void require_same_universe(const Antichain& a, const Antichain& b) {
    if (a.n() != b.n())
        throw usage_error("antichains live in different universes (n=" +
                          std::to_string(a.n()) + " vs n=" + std::to_string(b.n()) + ")");
}

bool leq(const Antichain& a, const Antichain& b) {
    require_same_universe(a, b);
    for (Mask x : a.sets()) {
        bool covered = false;
        for (Mask y : b.sets())
            if (subset_of(x, y)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

Antichain join(const Antichain& a, const Antichain& b) {
    require_same_universe(a, b);
    std::vector<Mask> all(a.sets());
    all.insert(all.end(), b.sets().begin(), b.sets().end());
    return Antichain::max_ac(a.n(), std::move(all));
}

Antichain meet(const Antichain& a, const Antichain& b) {
    require_same_universe(a, b);
    std::vector<Mask> inters;
    inters.reserve(a.size() * b.size());
    for (Mask x : a.sets())
        for (Mask y : b.sets())
            inters.push_back(x & y);
    return Antichain::max_ac(a.n(), std::move(inters));
}

Antichain direct_product(const Antichain& a, const Antichain& b) {
    require_same_universe(a, b);
    if (support(a) & support(b))
        throw precondition_error("direct product requires disjoint supports");
    std::vector<Mask> unions;
    unions.reserve(a.size() * b.size());
    for (Mask x : a.sets())
        for (Mask y : b.sets())
            unions.push_back(x | y);
    // Disjoint supports guarantee the unions are pairwise incomparable.
    return Antichain::from_sets(a.n(), std::move(unions));
}

Mask support(const Antichain& a) {
    Mask u = 0;
    for (Mask x : a.sets()) u |= x;
    return u;
}

Antichain relabel(const Antichain& a, const std::vector<int>& perm) {
    const int n = a.n();
    if (static_cast<int>(perm.size()) != n)
        throw usage_error("permutation must have length n");
    Mask seen = 0;
    for (int v : perm) {
        if (v < 1 || v > n) throw usage_error("permutation value out of range 1..n");
        seen |= Mask{1} << (v - 1);
    }
    if (seen != full_mask(n)) throw usage_error("mapping is not a bijection on {1..n}");
    std::vector<Mask> out;
    out.reserve(a.size());
    for (Mask x : a.sets()) {
        Mask y = 0;
        for (int i = 0; i < n; ++i)
            if (x & (Mask{1} << i)) y |= Mask{1} << (perm[i] - 1);
        out.push_back(y);
    }
    return Antichain::from_sets(n, std::move(out));
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    int n;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " at position " + std::to_string(pos), pos);
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    int parse_int() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected element number");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 64) fail("element out of range");
            ++pos;
        }
        if (v < 1 || v > n) fail("element out of range 1.." + std::to_string(n));
        return static_cast<int>(v);
    }

    Mask parse_set() {
        expect('{');
        Mask m = 0;
        if (!peek('}')) {
            for (;;) {
                m |= Mask{1} << (parse_int() - 1);
                if (!peek(',')) break;
                ++pos;
            }
        }
        expect('}');
        return m;
    }

    std::vector<Mask> parse_family() {
        expect('{');
        std::vector<Mask> sets;
        if (peek('{')) {
            for (;;) {
                sets.push_back(parse_set());
                if (!peek(',')) break;
                ++pos;
            }
        }
        expect('}');
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return sets;
    }
};

}  // namespace

Antichain parse_antichain(int n, std::string_view text) {
    Parser p{text, 0, n};
    return Antichain::from_sets(n, p.parse_family());
}

Antichain parse_family(int n, std::string_view text) {
    Parser p{text, 0, n};
    return Antichain::max_ac(n, p.parse_family());
}

std::string format_mask(Mask x) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 64; ++i) {
        if (x & (Mask{1} << i)) {
            if (!first) out += ',';
            out += std::to_string(i + 1);
            first = false;
        }
    }
    out += '}';
    return out;
}

std::string format(const Antichain& a) {
    std::string out = "{";
    bool first = true;
    for (Mask x : a.sets()) {
        if (!first) out += ',';
        out += format_mask(x);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace aclat
