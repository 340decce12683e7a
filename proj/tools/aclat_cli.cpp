// Command-line front end; talks to the library exclusively through the
// C API in aclat.h.
//
// Exit codes: 0 success, 1 usage/parse error, 2 precondition violation,
// 3 verification failure.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aclat.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerify = 3;

int exit_code_for(aclat_status s) {
    switch (s) {
        case ACLAT_OK: return 0;
        case ACLAT_ERR_PARSE:
        case ACLAT_ERR_USAGE: return kExitUsage;
        case ACLAT_ERR_PRECONDITION:
        case ACLAT_ERR_BUDGET: return kExitPrecondition;
        case ACLAT_ERR_VERIFY: return kExitVerify;
    }
    return kExitUsage;
}

[[noreturn]] void fail(aclat_status s) {
    std::cerr << "error: " << aclat_last_error() << "\n";
    std::exit(exit_code_for(s));
}

struct StringOut {
    char* s = nullptr;
    ~StringOut() { aclat_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct AcHandle {
    aclat_antichain* h = nullptr;
    ~AcHandle() { aclat_antichain_free(h); }
};

std::string read_arg(const std::string& text) {
    if (text != "-") return text;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

AcHandle parse_or_die(int n, const std::string& text, bool from_family = false) {
    AcHandle a;
    aclat_status s = from_family
                         ? aclat_antichain_parse_family(n, read_arg(text).c_str(), &a.h)
                         : aclat_antichain_parse(n, read_arg(text).c_str(), &a.h);
    if (s != ACLAT_OK) fail(s);
    return a;
}

int default_threads() {
    if (const char* env = std::getenv("AC_LATTICE_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        if (next > pos) out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Antichain lattice toolkit"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads for summations");

    // normalize
    auto* cmd_norm = app.add_subcommand("normalize", "print the canonical form");
    int norm_n = 0;
    bool from_family = false;
    std::string norm_text;
    cmd_norm->add_option("--n", norm_n, "universe size")->required();
    cmd_norm->add_flag("--from-family", from_family, "apply maxAC to non-antichain input");
    cmd_norm->add_option("text", norm_text, "antichain text ('-' for stdin)")->required();

    // op
    auto* cmd_op = app.add_subcommand("op", "lattice operation");
    int op_n = 0;
    std::string op_name;
    std::vector<std::string> op_args;
    cmd_op->add_option("name", op_name, "join|meet|prod|leq|check")->required();
    cmd_op->add_option("--n", op_n, "universe size")->required();
    cmd_op->add_option("operands", op_args, "antichain operands")->expected(1, 2);

    // interval
    auto* cmd_iv = app.add_subcommand("interval", "interval computations");
    int iv_n = 0;
    std::string iv_what, iv_bottom, iv_top, iv_chi, iv_method = "auto";
    cmd_iv->add_option("what", iv_what, "size|poset|decompose")->required();
    cmd_iv->add_option("--n", iv_n, "universe size")->required();
    cmd_iv->add_option("--bottom", iv_bottom, "bottom antichain")->required();
    cmd_iv->add_option("--top", iv_top, "top antichain")->required();
    cmd_iv->add_option("--chi", iv_chi, "antichain to decompose");
    cmd_iv->add_option("--method", iv_method, "brute|even|odd|auto|pivot:K|multi:K1,K2,...");

    // dedekind
    auto* cmd_dd = app.add_subcommand("dedekind", "Dedekind number M(n)");
    int dd_n = 0;
    std::string dd_method = "levels", dd_split;
    cmd_dd->add_option("--n", dd_n, "universe size")->required();
    cmd_dd->add_option("--method", dd_method, "brute|levels|product");
    cmd_dd->add_option("--split", dd_split, "product split sizes, e.g. 3,3");

    // verify
    auto* cmd_vf = app.add_subcommand("verify", "run a theorem suite");
    int vf_n = 0, vf_trials = 200;
    std::string vf_suite = "all";
    std::uint64_t vf_seed = 1;
    cmd_vf->add_option("--suite", vf_suite, "partitions|directjoin|updown|all");
    cmd_vf->add_option("--n", vf_n, "universe size")->required();
    cmd_vf->add_option("--seed", vf_seed, "PRNG seed");
    cmd_vf->add_option("--trials", vf_trials, "randomized trials per check");

    // bench
    auto* cmd_bm = app.add_subcommand("bench", "time counting methods");
    int bm_n = 0, bm_repeats = 1;
    std::string bm_methods;
    cmd_bm->add_option("--n", bm_n, "universe size")->required();
    cmd_bm->add_option("--methods", bm_methods, "comma-separated methods")->required();
    cmd_bm->add_option("--repeats", bm_repeats, "repetitions per method");

    // partition
    auto* cmd_pt = app.add_subcommand("partition", "partition blocks as CSV");
    int pt_n = 0;
    std::string pt_kind, pt_arg;
    cmd_pt->add_option("--n", pt_n, "universe size")->required();
    cmd_pt->add_option("--kind", pt_kind, "nondominating|product")->required();
    cmd_pt->add_option("--arg", pt_arg, "antichain text or split sizes");

    for (CLI::App* sc : {cmd_norm, cmd_op, cmd_iv, cmd_dd, cmd_vf, cmd_bm, cmd_pt})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (cmd_norm->parsed()) {
        AcHandle a = parse_or_die(norm_n, norm_text, from_family);
        StringOut out;
        if (aclat_status s = aclat_antichain_format(a.h, &out.s); s != ACLAT_OK) fail(s);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (cmd_op->parsed()) {
        const bool binary = (op_name == "join" || op_name == "meet" || op_name == "prod" ||
                             op_name == "leq");
        if (binary && op_args.size() != 2) {
            std::cerr << "error: op " << op_name << " takes two operands\n";
            return kExitUsage;
        }
        if (op_name == "check" && op_args.size() != 1) {
            std::cerr << "error: op check takes one operand\n";
            return kExitUsage;
        }
        AcHandle a = parse_or_die(op_n, op_args.at(0));
        if (op_name == "leq") {
            AcHandle b = parse_or_die(op_n, op_args.at(1));
            int le = 0;
            if (aclat_status s = aclat_leq(a.h, b.h, &le); s != ACLAT_OK) fail(s);
            std::cout << (le ? "true" : "false") << "\n";
            return 0;
        }
        AcHandle result;
        aclat_status s;
        if (op_name == "check") {
            s = aclat_nondominating(a.h, &result.h);
        } else {
            AcHandle b = parse_or_die(op_n, op_args.at(1));
            if (op_name == "join") s = aclat_join(a.h, b.h, &result.h);
            else if (op_name == "meet") s = aclat_meet(a.h, b.h, &result.h);
            else if (op_name == "prod") s = aclat_direct_product(a.h, b.h, &result.h);
            else {
                std::cerr << "error: unknown op '" << op_name << "'\n";
                return kExitUsage;
            }
        }
        if (s != ACLAT_OK) fail(s);
        StringOut out;
        if (aclat_status fs = aclat_antichain_format(result.h, &out.s); fs != ACLAT_OK) fail(fs);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (cmd_iv->parsed()) {
        AcHandle bottom = parse_or_die(iv_n, iv_bottom);
        AcHandle top = parse_or_die(iv_n, iv_top);
        StringOut out;
        aclat_status s;
        if (iv_what == "size") {
            s = aclat_interval_size(bottom.h, top.h, iv_method.c_str(), threads, &out.s);
        } else if (iv_what == "poset") {
            s = aclat_interval_poset(bottom.h, top.h, &out.s);
        } else if (iv_what == "decompose") {
            if (iv_chi.empty()) {
                std::cerr << "error: decompose needs --chi\n";
                return kExitUsage;
            }
            AcHandle chi = parse_or_die(iv_n, iv_chi);
            s = aclat_interval_decompose(bottom.h, top.h, chi.h, &out.s);
        } else {
            std::cerr << "error: unknown interval command '" << iv_what << "'\n";
            return kExitUsage;
        }
        if (s != ACLAT_OK) fail(s);
        std::cout << out.str();
        if (iv_what != "poset") std::cout << "\n";
        return 0;
    }

    if (cmd_dd->parsed()) {
        StringOut out;
        aclat_status s = aclat_dedekind(dd_n, dd_method.c_str(),
                                        dd_split.empty() ? nullptr : dd_split.c_str(),
                                        threads, &out.s);
        if (s != ACLAT_OK) fail(s);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (cmd_vf->parsed()) {
        StringOut out;
        int ok = 0;
        aclat_status s = aclat_verify(vf_suite.c_str(), vf_n, vf_seed, vf_trials, &out.s, &ok);
        if (s != ACLAT_OK) fail(s);
        std::cout << out.str();
        return ok ? 0 : kExitVerify;
    }

    if (cmd_pt->parsed()) {
        StringOut out;
        aclat_status s = aclat_partition_csv(pt_n, pt_kind.c_str(),
                                             pt_arg.empty() ? nullptr : pt_arg.c_str(), &out.s);
        if (s != ACLAT_OK) fail(s);
        std::cout << out.str();
        return 0;
    }

    if (cmd_bm->parsed()) {
        auto methods = split_list(bm_methods);
        if (methods.empty()) {
            std::cerr << "error: no methods given\n";
            return kExitUsage;
        }
        std::cout << "method,n,result,wall_ms\n";
        std::string reference;
        bool mismatch = false;
        for (const auto& m : methods) {
            for (int rep = 0; rep < bm_repeats; ++rep) {
                StringOut out;
                auto t0 = std::chrono::steady_clock::now();
                aclat_status s;
                if (m == "brute" || m == "levels" || m == "product")
                    s = aclat_dedekind(bm_n, m.c_str(), nullptr, threads, &out.s);
                else {
                    // Interval-size methods run on [bottom, top] = the whole lattice.
                    AcHandle bot = parse_or_die(bm_n, "{}");
                    std::string top_text = "{{";
                    for (int e = 1; e <= bm_n; ++e) top_text += (e > 1 ? "," : "") + std::to_string(e);
                    top_text += "}}";
                    AcHandle top = parse_or_die(bm_n, bm_n == 0 ? "{{}}" : top_text);
                    s = aclat_interval_size(bot.h, top.h, m.c_str(), threads, &out.s);
                }
                if (s != ACLAT_OK) fail(s);
                auto ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0).count();
                std::cout << csv_quote(m) << ',' << bm_n << ',' << out.str() << ',' << ms << "\n";
                if (reference.empty()) reference = out.str();
                else if (out.str() != reference) mismatch = true;
            }
        }
        if (mismatch) {
            std::cerr << "error: methods disagree on the count\n";
            return kExitVerify;
        }
        return 0;
    }

    return kExitUsage;
}
