#ifndef ACLAT_VERIFY_HPP
#define ACLAT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "decomp.hpp"

namespace aclat {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample, when failing
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// suite: "partitions", "directjoin", "updown" or "all".  Deterministic for a
// fixed (n, seed, trials).
VerifyReport run_suite(const std::string& suite, int n, std::uint64_t seed,
                       int trials = 200);

std::string format_report(const VerifyReport& r);

}  // namespace aclat

#endif
