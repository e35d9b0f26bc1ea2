// apcqc: APC distance of logic functions over F_p, logic-state code
// construction, and exact Knill-Laflamme verification.
//
// Exit codes: 0 = computed/verified, 1 = claim refuted (witness in the
// report), 2 = input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "apcqc/apc.hpp"
#include "apcqc/codec.hpp"
#include "apcqc/klverify.hpp"
#include "apcqc/logicfn.hpp"
#include "apcqc/parallel.hpp"
#include "apcqc/report.hpp"

namespace {

using apcqc::ApcResult;
using apcqc::CodeSpec;
using apcqc::FpFunction;
using apcqc::FpVector;
using nlohmann::json;

struct FunctionInput {
    std::string poly;
    std::string file;
    int p = 0;
    int n = 0;

    void attach(CLI::App* cmd) {
        auto* poly_opt = cmd->add_option("--poly", poly, "polynomial expression in x1..xn");
        auto* file_opt = cmd->add_option("--file", file, "truth table file");
        cmd->add_option("--p", p, "prime modulus (with --poly)");
        cmd->add_option("--n", n, "variable count (with --poly)");
        poly_opt->excludes(file_opt);
    }

    FpFunction load(json& echo) const {
        if (!poly.empty()) {
            if (p == 0 || n == 0) {
                throw std::invalid_argument("--poly requires --p and --n");
            }
            echo["poly"] = poly;
            return apcqc::parse_poly(poly, p, n);
        }
        if (!file.empty()) {
            echo["file"] = file;
            return apcqc::load_truth_table(file);
        }
        throw std::invalid_argument("provide a function via --poly or --file");
    }
};

struct Output {
    std::string json_path;
    bool timing = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--json", json_path, "write the JSON report to this path");
        // Timing is opt-in so that reports stay byte-identical across runs.
        cmd->add_flag("--timing", timing, "include wall-clock timing in the report");
    }

    void emit(json& report, double elapsed_ms) const {
        if (timing) report["timing_ms"] = elapsed_ms;
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) throw std::runtime_error("cannot write report to " + json_path);
            out << report.dump(2) << '\n';
        }
        std::fprintf(stderr, "elapsed: %.1f ms\n", elapsed_ms);
    }
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Selects the family construction the way the basic-state recipe does:
// the prefix family when p >= n-k+1 (and always for k <= 1, where the
// other family is undefined), the sparse-tail family otherwise.
std::vector<FpVector> build_family(int n, int k, int p, std::string& branch) {
    if (k <= 1 || p >= n - k + 1) {
        branch = "large_p";
        return apcqc::build_betas_large_p(n, k, p);
    }
    branch = "small_p";
    return apcqc::build_betas_small_p(n, k, p);
}

json theorem_flags(const CodeSpec& code) {
    json out;
    int k = code.d_prime - code.d_claimed;
    bool thm1 = code.d_claimed <= code.d_prime;
    if (code.d_claimed == code.d_prime) {
        for (const auto& beta : code.betas) thm1 = thm1 && beta.is_zero();
    }
    if (k > 0 && k <= code.d_prime - 2) {
        thm1 = thm1 && apcqc::check_wh_constraint(code.betas, k);
    }
    out["distance_bounds_ok"] = thm1;

    if (k >= 0 && (k < 2 || k <= code.d_prime - 2)) {
        long long bound = apcqc::max_K(code.n(), code.p(), code.d_prime, k);
        out["max_K"] = bound;
        out["dimension_bound_ok"] = static_cast<long long>(code.K()) <= bound;
    } else {
        out["max_K"] = nullptr;
        out["dimension_bound_ok"] = nullptr;
    }

    int exponent = code.n() - 2 * code.d_claimed + 2;
    if (code.d_claimed >= 1 && code.d_claimed <= code.n() && exponent >= 0) {
        out["singleton_bound_K"] = apcqc::singleton_bound_K(code.n(), code.d_claimed, code.p());
        out["mds"] = apcqc::mds_saturates(code.n(), static_cast<long long>(code.K()),
                                          code.d_claimed, code.p());
    } else {
        out["singleton_bound_K"] = nullptr;
        out["mds"] = nullptr;
    }

    if (k >= 0 && k <= code.d_prime && 2 * (code.d_prime - k) <= code.n() + 2) {
        auto cond = apcqc::mds_condition(code.n(), code.p(), code.d_prime, k);
        out["mds_case"] = cond.case_id;
        out["mds_condition_holds"] = cond.holds;
    } else {
        out["mds_case"] = nullptr;
        out["mds_condition_holds"] = nullptr;
    }
    return out;
}

int cmd_apc(const FunctionInput& input, const Output& output) {
    Timer timer;
    json report{{"command", "apc"}};
    json echo;
    FpFunction f = input.load(echo);
    json fecho = apcqc::function_echo_json(f);
    fecho.update(echo);
    report["input"] = fecho;

    ApcResult result = apcqc::apc_distance(f);
    report["apc"] = apcqc::apc_result_json(result);
    output.emit(report, timer.ms());
    if (result.attained()) {
        std::printf("apc distance: %d  witness a=%s b=%s\n", *result.distance,
                    result.witness->a.str().c_str(), result.witness->b.str().c_str());
    } else {
        std::printf("apc distance: unattained (every nonzero pair sums to zero)\n");
    }
    return 0;
}

int cmd_build(const FunctionInput& input, const Output& output, int k, bool force,
              const std::string& spec_out) {
    Timer timer;
    json report{{"command", "build"}};
    json echo;
    FpFunction f = input.load(echo);
    json fecho = apcqc::function_echo_json(f);
    fecho.update(echo);
    report["input"] = fecho;
    report["k"] = k;

    ApcResult apc = apcqc::apc_distance(f);
    report["apc"] = apcqc::apc_result_json(apc);
    if (!apc.attained()) {
        throw std::invalid_argument("APC distance unattained; nothing to build on");
    }
    int d_prime = *apc.distance;
    if (d_prime < 2) {
        throw std::invalid_argument("function has APC distance " + std::to_string(d_prime) +
                                    " < 2; the construction requires at least 2");
    }
    if (k < 0 || (k > d_prime - 2 && !force)) {
        throw std::invalid_argument("k must lie in [0, d'-2] = [0, " +
                                    std::to_string(d_prime - 2) + "] (use --force to override)");
    }

    std::string branch;
    std::vector<FpVector> betas = build_family(f.n(), k, f.p(), branch);
    int d = apcqc::code_distance(betas, d_prime, f.p(), f.n());
    CodeSpec code{f, std::move(betas), d_prime, d};

    report["branch"] = branch;
    report["code"] = apcqc::codespec_json(code);
    report["K"] = code.K();
    report["theorems"] = theorem_flags(code);
    for (const auto& w : code.warnings()) {
        report["warnings"].push_back(w);
    }

    if (!spec_out.empty()) apcqc::save_codespec(spec_out, code);
    output.emit(report, timer.ms());
    std::printf("built ((%d, %zu, %d))_%d from d'=%d, k=%d (%s branch)\n", f.n(), code.K(), d,
                f.p(), d_prime, k, branch.c_str());
    return 0;
}

int cmd_verify(const std::string& spec_path, const Output& output, std::optional<int> t_flag) {
    Timer timer;
    json report{{"command", "verify"}};
    CodeSpec code = apcqc::load_codespec(spec_path);
    report["code"] = apcqc::codespec_json(code);
    for (const auto& w : code.warnings()) {
        report["warnings"].push_back(w);
    }

    // Default depth: exactly what the claimed distance requires.
    int t = t_flag.value_or(code.d_claimed - 1);
    if (t < 0) t = 0;
    report["checked_t"] = t;

    apcqc::KlCheckResult result = apcqc::kl_check(code, t);
    json oracle;
    oracle["passed"] = result.ok;
    if (result.ok) {
        oracle["kl_distance_lower_bound"] = std::min(t, code.n()) + 1;
        oracle["witness"] = nullptr;
    } else {
        // Shells below the witness weight all passed, so this pins the
        // oracle distance exactly.
        oracle["kl_distance"] = apcqc::ws(result.witness->a, result.witness->b);
        oracle["witness"] = apcqc::kl_witness_json(*result.witness);
    }
    report["oracle"] = oracle;

    bool verified = result.ok
                        ? std::min(t, code.n()) + 1 >= code.d_claimed
                        : apcqc::ws(result.witness->a, result.witness->b) >= code.d_claimed;
    report["claim"] = {{"d_claimed", code.d_claimed}, {"verified", verified}};
    output.emit(report, timer.ms());
    if (verified) {
        std::printf("verified: distance >= %d holds up to checked weight %d\n", code.d_claimed, t);
        return 0;
    }
    std::printf("refuted: weight-%d error violates the conditions (states %d,%d; %s)\n",
                apcqc::ws(result.witness->a, result.witness->b), result.witness->i,
                result.witness->j, result.witness->kind_str().c_str());
    return 1;
}

int cmd_mds(const Output& output, int n, int p, int d_prime, int k) {
    Timer timer;
    json report{{"command", "mds"}};
    report["params"] = {{"n", n}, {"p", p}, {"d_prime", d_prime}, {"k", k}};

    apcqc::MdsCondition cond = apcqc::mds_condition(n, p, d_prime, k);
    report["case"] = cond.case_id;
    report["condition_holds"] = cond.holds;
    report["beyond_k_bound_range"] = cond.beyond_k_bound_range;

    int d = d_prime - k;
    if (d >= 1 && d <= n && n - 2 * d + 2 >= 0) {
        report["singleton_bound_K"] = apcqc::singleton_bound_K(n, d, p);
    } else {
        report["singleton_bound_K"] = nullptr;
    }
    output.emit(report, timer.ms());
    std::printf("case %d: condition %s%s\n", cond.case_id, cond.holds ? "holds" : "fails",
                cond.beyond_k_bound_range ? " (k beyond the K-bound range)" : "");
    return 0;
}

// Quadratic forms sum c_ij x_i x_j over i < j, enumerated exhaustively when
// the space fits in the budget and sampled reproducibly otherwise.
int cmd_search(const Output& output, int n, int p, std::optional<int> target,
               std::uint64_t budget, std::uint64_t seed) {
    Timer timer;
    if (!apcqc::is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 2) throw std::invalid_argument("search needs n >= 2");
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");

    json report{{"command", "search"}};
    report["params"] = {{"n", n},
                        {"p", p},
                        {"target", target ? json(*target) : json(nullptr)},
                        {"budget", budget},
                        {"seed", seed}};

    std::vector<std::pair<int, int>> slots;  // 0-based (i, j), i < j
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }

    double log_total = static_cast<double>(slots.size()) * std::log2(static_cast<double>(p));
    bool exhaustive = log_total <= 62 &&
                      static_cast<double>(budget) >= std::exp2(log_total);
    std::uint64_t total = exhaustive ? static_cast<std::uint64_t>(std::exp2(log_total) + 0.5)
                                     : budget;

    std::mt19937_64 rng(seed);
    std::vector<int> coeffs(slots.size());
    std::optional<int> best;
    std::vector<int> best_coeffs;
    std::uint64_t examined = 0;
    bool reached = false;

    for (std::uint64_t candidate = 0; candidate < total; ++candidate) {
        if (exhaustive) {
            std::uint64_t rest = candidate;
            for (std::size_t s = slots.size(); s-- > 0;) {
                coeffs[s] = static_cast<int>(rest % static_cast<std::uint64_t>(p));
                rest /= static_cast<std::uint64_t>(p);
            }
        } else {
            for (auto& c : coeffs) c = static_cast<int>(rng() % static_cast<std::uint64_t>(p));
        }
        // Build the truth table of the form.
        std::vector<int> table(apcqc::table_size(p, n));
        apcqc::PointIter it(p, n);
        do {
            long long acc = 0;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                acc += static_cast<long long>(coeffs[s]) *
                       it.coords()[static_cast<std::size_t>(slots[s].first)] *
                       it.coords()[static_cast<std::size_t>(slots[s].second)];
            }
            table[it.index()] = static_cast<int>(acc % p);
        } while (it.next());
        FpFunction f(p, n, std::move(table));
        ApcResult result = apcqc::apc_distance(f);
        ++examined;
        int distance = result.attained() ? *result.distance : 0;
        if (!best || distance > *best) {
            best = distance;
            best_coeffs = coeffs;
        }
        if (target && distance >= *target) {
            reached = true;
            break;
        }
    }

    report["exhaustive"] = exhaustive;
    report["examined"] = examined;
    report["target_reached"] = target ? json(reached) : json(nullptr);
    json coeff_list = json::array();
    std::string poly;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (best_coeffs[s] == 0) continue;
        coeff_list.push_back({{"i", slots[s].first + 1},
                              {"j", slots[s].second + 1},
                              {"c", best_coeffs[s]}});
        if (!poly.empty()) poly += "+";
        if (best_coeffs[s] != 1) poly += std::to_string(best_coeffs[s]) + "*";
        poly += "x" + std::to_string(slots[s].first + 1) + "*x" +
                std::to_string(slots[s].second + 1);
    }
    if (poly.empty()) poly = "0";
    report["best"] = {{"apc", *best}, {"coeffs", coeff_list}, {"poly", poly}};
    output.emit(report, timer.ms());
    std::printf("best apc: %d over %llu forms%s  f = %s\n", *best,
                static_cast<unsigned long long>(examined),
                exhaustive ? " (exhaustive)" : "", poly.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"APC distance and logic-state quantum code toolkit over F_p"};
    app.require_subcommand(1);

    FunctionInput apc_in, build_in;
    Output apc_out, build_out, verify_out, mds_out, search_out;

    auto* apc_cmd = app.add_subcommand("apc", "compute the APC distance of a function");
    apc_in.attach(apc_cmd);
    apc_out.attach(apc_cmd);

    auto* build_cmd = app.add_subcommand("build", "construct a code from a function");
    build_in.attach(build_cmd);
    build_out.attach(build_cmd);
    int build_k = 0;
    bool build_force = false;
    std::string spec_out;
    build_cmd->add_option("--k", build_k, "distance reduction d = d' - k")->required();
    build_cmd->add_flag("--force", build_force, "allow k outside [0, d'-2]");
    build_cmd->add_option("--spec-out", spec_out, "write the code spec JSON to this path");

    auto* verify_cmd = app.add_subcommand("verify", "check a code spec against the KL oracle");
    std::string spec_path;
    verify_cmd->add_option("spec", spec_path, "code spec JSON file")->required();
    int verify_t = -1;
    auto* t_opt = verify_cmd->add_option("--t", verify_t, "check errors up to this weight");
    verify_out.attach(verify_cmd);

    auto* mds_cmd = app.add_subcommand("mds", "Singleton-saturation condition for (n,p,d',k)");
    int mds_n = 0, mds_p = 0, mds_dprime = 0, mds_k = 0;
    mds_cmd->add_option("--n", mds_n)->required();
    mds_cmd->add_option("--p", mds_p)->required();
    mds_cmd->add_option("--dprime", mds_dprime)->required();
    mds_cmd->add_option("--k", mds_k)->required();
    mds_out.attach(mds_cmd);

    auto* search_cmd = app.add_subcommand("search", "search quadratic forms for high APC");
    int search_n = 0, search_p = 0, search_target = -1;
    std::uint64_t search_budget = 4096, search_seed = 0;
    search_cmd->add_option("--n", search_n)->required();
    search_cmd->add_option("--p", search_p)->required();
    auto* target_opt = search_cmd->add_option("--target", search_target, "stop at this APC");
    search_cmd->add_option("--budget", search_budget, "max forms to examine (default 4096)");
    search_cmd->add_option("--seed", search_seed, "sampling seed (default 0)");
    search_out.attach(search_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(apc_cmd)) return cmd_apc(apc_in, apc_out);
        if (app.got_subcommand(build_cmd))
            return cmd_build(build_in, build_out, build_k, build_force, spec_out);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(spec_path, verify_out,
                              t_opt->count() ? std::optional<int>(verify_t) : std::nullopt);
        if (app.got_subcommand(mds_cmd)) return cmd_mds(mds_out, mds_n, mds_p, mds_dprime, mds_k);
        if (app.got_subcommand(search_cmd))
            return cmd_search(search_out, search_n, search_p,
                              target_opt->count() ? std::optional<int>(search_target)
                                                  : std::nullopt,
                              search_budget, search_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
