#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "collatz/audit.hpp"
#include "collatz/enumerate.hpp"
#include "collatz/oracle.hpp"
#include "collatz/report.hpp"
#include "collatz/solver.hpp"

namespace {

using collatz::BigInt;
using collatz::ClaimResult;
using collatz::LogBase;
using collatz::Path;
using nlohmann::ordered_json;

enum ExitCode {
    kOk = 0,
    kRefuted = 1,
    kUsage = 2,
    kInternal = 3,
};

BigInt parse_bigint(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw collatz::ValidationError("\"" + s +
                                       "\" is not a nonnegative integer");
    }
    return BigInt(s);
}

LogBase parse_log_base(const std::string& s) {
    if (s == "natural") return LogBase::Natural;
    if (s == "base10") return LogBase::Base10;
    if (s == "base2") return LogBase::Base2;
    throw collatz::ValidationError("unknown log base \"" + s + "\"");
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

struct AuditOptions {
    std::uint32_t max_moves_2_1 = 8;
    std::uint64_t x_bound_2_1 = 2048;
    std::uint64_t x_bound_2_3 = 2048;
    std::uint32_t budget_2_3 = 6;
    std::uint32_t max_moves_thm = 8;
    std::uint32_t max_moves_3_1 = 6;
    std::uint64_t x_bound_3_1 = 65536;
    std::uint32_t descent_n_max = 10000;
    std::uint32_t rhin_n_lo = 1;
    std::uint32_t rhin_n_hi = 1000;
    LogBase log_base = LogBase::Natural;
    std::uint32_t precision = 60;
    std::uint32_t max_moves_3_3 = 20;
    std::uint64_t scan_x_bound = 100000;
    std::uint64_t scan_move_cap = 10000;
    std::size_t cex_cap = collatz::kDefaultCounterexampleCap;
};

ClaimResult run_claim(const std::string& id, const AuditOptions& o) {
    if (id == "lemma-2.1")
        return collatz::audit_lemma_2_1(o.max_moves_2_1, o.x_bound_2_1,
                                        o.cex_cap);
    if (id == "lemma-2.3")
        return collatz::audit_lemma_2_3(o.x_bound_2_3, o.budget_2_3, o.cex_cap);
    if (id == "thm-2.3")
        return collatz::audit_thm_2_3(o.max_moves_thm, o.cex_cap);
    if (id == "lemma-3.1")
        return collatz::audit_lemma_3_1(o.max_moves_3_1, o.x_bound_3_1,
                                        o.cex_cap);
    if (id == "descent-inequality-exact")
        return collatz::audit_descent_inequality_exact(o.descent_n_max,
                                                       o.cex_cap);
    if (id == "rhin-crossover")
        return collatz::audit_rhin_crossover(o.rhin_n_lo, o.rhin_n_hi,
                                             o.log_base, o.precision,
                                             o.cex_cap);
    if (id == "lemma-3.3")
        return collatz::audit_lemma_3_3(o.max_moves_3_3, o.cex_cap);
    if (id == "theorem-3.4-scan")
        return collatz::audit_theorem_3_4_scan(o.scan_x_bound, o.scan_move_cap,
                                               o.cex_cap);
    throw collatz::ValidationError("unknown claim id \"" + id + "\"");
}

const std::vector<std::string> kAllClaims = {
    "lemma-2.1",    "lemma-2.3", "thm-2.3",
    "lemma-3.1",    "descent-inequality-exact",
    "rhin-crossover", "lemma-3.3", "theorem-3.4-scan"};

ordered_json config_json(const std::vector<std::string>& claims,
                         const AuditOptions& o) {
    ordered_json cfg;
    cfg["claims"] = claims;
    cfg["lemma_2_1_max_moves"] = std::to_string(o.max_moves_2_1);
    cfg["lemma_2_1_x_bound"] = std::to_string(o.x_bound_2_1);
    cfg["lemma_2_3_x_bound"] = std::to_string(o.x_bound_2_3);
    cfg["lemma_2_3_horizontal_budget"] = std::to_string(o.budget_2_3);
    cfg["thm_2_3_max_moves"] = std::to_string(o.max_moves_thm);
    cfg["lemma_3_1_max_moves"] = std::to_string(o.max_moves_3_1);
    cfg["lemma_3_1_x_bound"] = std::to_string(o.x_bound_3_1);
    cfg["descent_n_max"] = std::to_string(o.descent_n_max);
    cfg["rhin_n_lo"] = std::to_string(o.rhin_n_lo);
    cfg["rhin_n_hi"] = std::to_string(o.rhin_n_hi);
    cfg["log_base"] = to_string(o.log_base);
    cfg["precision_digits"] = std::to_string(o.precision);
    cfg["lemma_3_3_max_moves"] = std::to_string(o.max_moves_3_3);
    cfg["scan_x_bound"] = std::to_string(o.scan_x_bound);
    cfg["scan_move_cap"] = std::to_string(o.scan_move_cap);
    cfg["counterexample_cap"] = std::to_string(o.cex_cap);
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collatz path algebra: simulation, Diophantine path solving, "
                 "and empirical lemma audits"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --format/--out after the subcommand

    std::string format = "text";
    std::string out_file;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_file, "Write output to FILE instead of stdout");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Parity-forced trajectory");
    std::string sim_x0;
    std::uint64_t sim_moves = 0, sim_cap = 10000;
    bool until_one = false;
    sim->add_option("x0", sim_x0)->required();
    auto* sim_moves_opt = sim->add_option("--moves", sim_moves,
                                          "Number of accelerated moves");
    sim->add_flag("--until-one", until_one, "Run until 1 or the cap");
    sim->add_option("--cap", sim_cap, "Move cap for --until-one");
    sim_moves_opt->excludes("--until-one");

    // apply / coeff / solve / min-follower
    auto* apply = app.add_subcommand("apply", "Closed-form path map");
    std::string apply_x0, apply_path;
    apply->add_option("x0", apply_x0)->required();
    apply->add_option("--path", apply_path, "Path literal n:k:r1,...,rk")
        ->required();

    auto* coeff = app.add_subcommand("coeff", "Coefficient a and affine form");
    std::string coeff_path;
    coeff->add_option("--path", coeff_path)->required();

    auto* solve = app.add_subcommand("solve", "Characteristic solution");
    std::string solve_path;
    solve->add_option("--path", solve_path)->required();

    auto* minf = app.add_subcommand("min-follower", "Smallest follower");
    std::string minf_path, minf_bound;
    bool minf_oracle = false, any_end = false;
    minf->add_option("--path", minf_path)->required();
    minf->add_flag("--oracle", minf_oracle, "Brute-force search instead of solver");
    minf->add_option("--bound", minf_bound, "Brute-force search bound");
    minf->add_flag("--any-end", any_end,
                   "Drop the odd-final-value requirement (oracle only)");

    // audit
    auto* audit = app.add_subcommand("audit", "Empirical claim audits");
    std::string claim;
    AuditOptions opts;
    std::optional<std::uint32_t> a_max_moves;
    std::optional<std::uint64_t> a_x_bound;
    std::optional<std::uint32_t> a_n_lo, a_n_hi, a_precision;
    std::string a_log_base;
    audit->add_option("claim", claim, "Claim id or \"all\"")->required();
    audit->add_option("--max-moves", a_max_moves);
    audit->add_option("--x-bound", a_x_bound);
    audit->add_option("--n-lo", a_n_lo);
    audit->add_option("--n-hi", a_n_hi);
    audit->add_option("--log-base", a_log_base)
        ->check(CLI::IsMember({"natural", "base10", "base2"}));
    audit->add_option("--precision", a_precision);

    // scan
    auto* scan = app.add_subcommand("scan", "Bounded reach-1 scan");
    std::uint64_t scan_bound = 1000000, scan_cap = 10000;
    scan->add_option("--x-bound", scan_bound)->required();
    scan->add_option("--cap", scan_cap)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    std::string output;
    int exit_code = kOk;
    try {
        if (*sim) {
            const BigInt x0 = parse_bigint(sim_x0);
            if (x0 < 1) throw collatz::ValidationError("x0 must be >= 1");
            if (until_one) {
                const collatz::ReachOutcome out =
                    collatz::reaches_one(x0, sim_cap);
                ordered_json j;
                j["x0"] = x0.get_str();
                switch (out.status) {
                    case collatz::ReachOutcome::Status::ReachedOne:
                        j["status"] = "reached-one";
                        j["moves"] = std::to_string(out.moves);
                        break;
                    case collatz::ReachOutcome::Status::EnteredCycle:
                        j["status"] = "entered-cycle";
                        j["period"] = std::to_string(out.period);
                        break;
                    case collatz::ReachOutcome::Status::Undetermined:
                        j["status"] = "undetermined";
                        j["move_cap"] = std::to_string(sim_cap);
                        break;
                }
                output = format == "json"
                             ? dump(j)
                             : j["status"].get<std::string>() +
                                   (out.status == collatz::ReachOutcome::
                                                      Status::ReachedOne
                                        ? " in " + std::to_string(out.moves) +
                                              " moves\n"
                                        : "\n");
            } else {
                const collatz::Trajectory t = collatz::simulate(x0, sim_moves);
                if (format == "json") {
                    ordered_json j;
                    j["x0"] = x0.get_str();
                    auto values = ordered_json::array();
                    for (const BigInt& v : t.values) values.push_back(v.get_str());
                    j["values"] = std::move(values);
                    std::string moves;
                    for (collatz::Move m : t.moves) moves += move_letter(m);
                    j["moves"] = moves;
                    auto grid = ordered_json::array();
                    for (const collatz::GridPoint& g : t.grid) {
                        grid.push_back({std::to_string(g.n), std::to_string(g.k)});
                    }
                    j["grid"] = std::move(grid);
                    output = dump(j);
                } else {
                    for (std::size_t i = 0; i < t.values.size(); ++i) {
                        if (i) output += " -";
                        if (i) output += move_letter(t.moves[i - 1]);
                        if (i) output += "-> ";
                        output += t.values[i].get_str();
                    }
                    output += "\n";
                }
            }
        } else if (*apply) {
            const BigInt x0 = parse_bigint(apply_x0);
            const Path p = Path::parse(apply_path);
            const BigInt result = collatz::apply_path(x0, p);
            if (format == "json") {
                ordered_json j;
                j["x0"] = x0.get_str();
                j["path"] = p.literal();
                j["result"] = result.get_str();
                output = dump(j);
            } else {
                output = result.get_str() + "\n";
            }
        } else if (*coeff) {
            const Path p = Path::parse(coeff_path);
            const collatz::AffineForm f = collatz::affine_form(p);
            if (format == "json") {
                ordered_json j;
                j["path"] = p.literal();
                j["a"] = f.add.get_str();
                j["mul"] = f.mul.get_str();
                j["div"] = f.div.get_str();
                output = dump(j);
            } else {
                output = f.add.get_str() + "\n";
            }
        } else if (*solve) {
            const Path p = Path::parse(solve_path);
            const collatz::CharacteristicSolution sol =
                collatz::characteristic_solution(p);
            ordered_json j;
            j["path"] = p.literal();
            auto cs = ordered_json::array();
            auto ts = ordered_json::array();
            for (const collatz::CResult& c : sol.c) {
                cs.push_back(c.c.get_str());
                ts.push_back(c.t.get_str());
            }
            j["c"] = std::move(cs);
            j["t"] = std::move(ts);
            j["x_residue"] = sol.x_residue.get_str();
            j["x_modulus"] = sol.x_modulus.get_str();
            j["lambda_residue"] = sol.lambda_residue.get_str();
            j["lambda_modulus"] = sol.lambda_modulus.get_str();
            j["min_follower"] = sol.min_follower.get_str();
            if (format == "json") {
                output = dump(j);
            } else {
                output = "x = " + sol.x_residue.get_str() + " (mod " +
                         sol.x_modulus.get_str() + "), lambda = " +
                         sol.lambda_residue.get_str() + " (mod " +
                         sol.lambda_modulus.get_str() + "), min follower " +
                         sol.min_follower.get_str() + "\n";
            }
        } else if (*minf) {
            const Path p = Path::parse(minf_path);
            if (any_end && !minf_oracle) {
                throw collatz::ValidationError(
                    "--any-end requires --oracle (the solver is odd-end only)");
            }
            BigInt result;
            if (minf_oracle) {
                const BigInt bound = minf_bound.empty()
                                         ? collatz::pow2(p.total_moves() + 2)
                                         : parse_bigint(minf_bound);
                const auto found =
                    collatz::brute_force_min_follower(p, !any_end, bound);
                if (!found) {
                    throw collatz::ValidationError(
                        "no follower below bound " + bound.get_str());
                }
                result = *found;
            } else {
                result = collatz::smallest_follower(p);
            }
            if (format == "json") {
                ordered_json j;
                j["path"] = p.literal();
                j["min_follower"] = result.get_str();
                output = dump(j);
            } else {
                output = result.get_str() + "\n";
            }
        } else if (*audit) {
            if (a_max_moves) {
                opts.max_moves_2_1 = *a_max_moves;
                opts.budget_2_3 = *a_max_moves;
                opts.max_moves_thm = *a_max_moves;
                opts.max_moves_3_1 = *a_max_moves;
                opts.max_moves_3_3 = *a_max_moves;
            }
            if (a_x_bound) {
                opts.x_bound_2_1 = *a_x_bound;
                opts.x_bound_2_3 = *a_x_bound;
                opts.x_bound_3_1 = *a_x_bound;
                opts.scan_x_bound = *a_x_bound;
            }
            if (a_n_lo) opts.rhin_n_lo = *a_n_lo;
            if (a_n_hi) {
                opts.rhin_n_hi = *a_n_hi;
                opts.descent_n_max = *a_n_hi;
            }
            if (!a_log_base.empty()) opts.log_base = parse_log_base(a_log_base);
            if (a_precision) opts.precision = *a_precision;

            const std::vector<std::string> claims =
                claim == "all" ? kAllClaims : std::vector<std::string>{claim};
            collatz::AuditReport report;
            report.configuration = config_json(claims, opts);
            for (const std::string& id : claims) {
                report.results.push_back(run_claim(id, opts));
            }
            report.timestamp = collatz::current_utc_timestamp();

            bool refuted = false;
            for (const ClaimResult& r : report.results) {
                if (r.verdict == collatz::Verdict::Refuted) refuted = true;
            }
            if (format == "json") {
                output = dump(to_json(report));
            } else if (format == "csv") {
                const auto it = std::find_if(
                    report.results.begin(), report.results.end(),
                    [](const ClaimResult& r) { return r.claim_id == "lemma-3.3"; });
                if (it == report.results.end()) {
                    throw collatz::ValidationError(
                        "csv output is defined only for the lemma-3.3 growth table");
                }
                output = render_growth_csv(*it);
            } else {
                output = render_text(report);
            }
            if (refuted) exit_code = kRefuted;
        } else if (*scan) {
            const ClaimResult r =
                collatz::audit_theorem_3_4_scan(scan_bound, scan_cap);
            output = format == "json" ? dump(to_json(r)) : render_text(r);
            if (r.verdict == collatz::Verdict::Refuted) exit_code = kRefuted;
        }
    } catch (const collatz::VerificationFailedError& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kInternal;
    } catch (const collatz::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const collatz::PrecisionInsufficientError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    // Single atomic write at completion.
    if (out_file.empty()) {
        std::cout << output;
    } else {
        std::ofstream f(out_file, std::ios::binary | std::ios::trunc);
        if (!f) {
            std::cerr << "error: cannot open " << out_file << "\n";
            return kUsage;
        }
        f << output;
    }
    return exit_code;
}
