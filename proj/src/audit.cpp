#include "collatz/audit.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include <mpfr.h>

#include "collatz/enumerate.hpp"
#include "collatz/oracle.hpp"
#include "collatz/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace collatz {

namespace {

Counterexample make_cex(
    std::initializer_list<std::pair<std::string, std::string>> fields) {
    Counterexample c;
    c.fields.assign(fields.begin(), fields.end());
    return c;
}

void cap_counterexamples(ClaimResult& res, std::size_t max_cex) {
    if (res.counterexamples.size() > max_cex) {
        res.counterexamples.resize(max_cex);
    }
}

void finish_verdict(ClaimResult& res, std::size_t max_cex) {
    res.verdict =
        res.counterexamples.empty() ? Verdict::Holds : Verdict::Refuted;
    cap_counterexamples(res, max_cex);
}

int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int worker_id() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Refuted: return "refuted";
        case Verdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

std::string to_string(LogBase b) {
    switch (b) {
        case LogBase::Natural: return "natural";
        case LogBase::Base10: return "base10";
        case LogBase::Base2: return "base2";
    }
    return "natural";
}

bool descent_condition(const Path& path) {
    return pow2(path.total_moves()) > pow3(path.n());
}

bool escape_constraints(const Path& path) {
    if (pow3(path.n()) <= pow2(path.total_moves())) return false;
    for (std::size_t i = 1; i <= path.k(); ++i) {
        const std::uint32_t r = path.r()[i - 1];
        if (pow3(r) <= pow2(r + i)) return false;
    }
    return true;
}

ClaimResult audit_lemma_2_1(std::uint32_t max_moves, std::uint64_t x_bound,
                            std::size_t max_cex) {
    ClaimResult res;
    res.claim_id = "lemma-2.1";
    res.domain_description = "x0 in [1, " + std::to_string(x_bound) +
                             "], move counts in [0, " +
                             std::to_string(max_moves) + "]";
    res.instances_tested = x_bound * (std::uint64_t{max_moves} + 1);

    std::vector<std::vector<Counterexample>> cexs(x_bound + 1);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t xi = 1; xi <= static_cast<std::int64_t>(x_bound); ++xi) {
        const BigInt x0(static_cast<unsigned long>(xi));
        const Trajectory t = simulate(x0, max_moves);
        std::uint32_t n = 0, k = 0;
        std::vector<std::uint32_t> r;
        BigInt a_rec = 0;
        for (std::uint32_t m = 0; m <= max_moves; ++m) {
            const Path p = Path::validate(n, k, r);
            const BigInt a = coefficient_a(p);
            const BigInt num = pow3(n) * x0 + a;
            const BigInt div = pow2(n + k);
            const bool exact = mpz_divisible_p(num.get_mpz_t(),
                                               div.get_mpz_t());
            const BigInt closed = exact ? BigInt(num / div) : BigInt(-1);
            if (!exact || closed != t.values[m] || a != a_rec) {
                cexs[xi].push_back(make_cex(
                    {{"x0", x0.get_str()},
                     {"moves", std::to_string(m)},
                     {"path", p.literal()},
                     {"simulated", t.values[m].get_str()},
                     {"closed_form", closed.get_str()},
                     {"a_closed", a.get_str()},
                     {"a_recurrence", a_rec.get_str()}}));
            }
            if (m < max_moves) {
                if (t.moves[m] == Move::Horizontal) {
                    a_rec = 3 * a_rec + pow2(n + k);
                    ++n;
                } else {
                    r.push_back(n);
                    ++k;
                }
            }
        }
    }
    for (auto& v : cexs) {
        res.counterexamples.insert(res.counterexamples.end(), v.begin(),
                                   v.end());
    }
    finish_verdict(res, max_cex);
    return res;
}

ClaimResult audit_lemma_2_3(std::uint64_t x_bound,
                            std::uint32_t horizontal_budget,
                            std::size_t max_cex) {
    ClaimResult res;
    res.claim_id = "lemma-2.3";
    res.domain_description = "x0 in [1, " + std::to_string(x_bound) +
                             "], horizontal budget " +
                             std::to_string(horizontal_budget);
    res.instances_tested = x_bound * horizontal_budget;

    std::vector<std::vector<Counterexample>> cexs(x_bound + 1);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t xi = 1; xi <= static_cast<std::int64_t>(x_bound); ++xi) {
        std::vector<std::uint64_t> odd_in_column(horizontal_budget, 0);
        BigInt x(static_cast<unsigned long>(xi));
        std::uint32_t n = 0;
        // A column is complete once the horizontal move out of it happens;
        // every vertical streak is finite, so this loop terminates.
        while (n < horizontal_budget) {
            if (mpz_odd_p(x.get_mpz_t())) {
                ++odd_in_column[n];
                x = (3 * x + 1) / 2;
                ++n;
            } else {
                x /= 2;
            }
        }
        for (std::uint32_t n0 = 0; n0 < horizontal_budget; ++n0) {
            if (odd_in_column[n0] != 1) {
                cexs[xi].push_back(
                    make_cex({{"x0", std::to_string(xi)},
                              {"n0", std::to_string(n0)},
                              {"odd_count", std::to_string(odd_in_column[n0])}}));
            }
        }
    }
    for (auto& v : cexs) {
        res.counterexamples.insert(res.counterexamples.end(), v.begin(),
                                   v.end());
    }
    finish_verdict(res, max_cex);
    return res;
}

ClaimResult audit_thm_2_3(std::uint32_t max_moves, std::size_t max_cex) {
    ClaimResult res;
    res.claim_id = "thm-2.3";
    res.domain_description = "all valid paths with n+k <= " +
                             std::to_string(max_moves);
    const std::vector<Path> paths = enumerate_paths(max_moves);
    res.instances_tested = paths.size();

    std::vector<std::vector<Counterexample>> cexs(paths.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t pi = 0; pi < static_cast<std::int64_t>(paths.size());
         ++pi) {
        const Path& p = paths[pi];
        auto bad = [&](const std::string& what, const BigInt& got,
                       const BigInt& want) {
            cexs[pi].push_back(make_cex({{"path", p.literal()},
                                         {"check", what},
                                         {"got", got.get_str()},
                                         {"want", want.get_str()}}));
        };

        const CharacteristicSolution sol = characteristic_solution(p);
        const BigInt x_min = smallest_follower(p);
        const BigInt end = apply_path(x_min, p);
        const BigInt lambda = (end - 1) / 2;

        if (diophantine_residual(p, x_min, lambda) != 0) {
            bad("residual", diophantine_residual(p, x_min, lambda), 0);
        }
        BigInt lam_mod;
        mpz_mod(lam_mod.get_mpz_t(), lambda.get_mpz_t(),
                sol.lambda_modulus.get_mpz_t());
        if (lam_mod != sol.lambda_residue) {
            bad("lambda_residue", lam_mod, sol.lambda_residue);
        }

        const BigInt bound = pow2(p.total_moves() + 2);
        const auto oracle_min = brute_force_min_follower(p, true, bound);
        if (!oracle_min || *oracle_min != x_min) {
            bad("oracle_min", oracle_min ? *oracle_min : BigInt(-1), x_min);
        }

        // Follower sets must be exactly the predicted residue classes.
        const BigInt hi = pow2(p.total_moves() + 3);
        const BigInt any_mod = pow2(p.total_moves());
        BigInt any_start;
        mpz_mod(any_start.get_mpz_t(), x_min.get_mpz_t(), any_mod.get_mpz_t());
        if (any_start == 0) any_start = any_mod;

        const auto check_set = [&](bool odd_end, const BigInt& start,
                                   const BigInt& step, const char* what) {
            const std::vector<BigInt> got =
                followers_in_range_serial(p, 1, hi, odd_end);
            std::vector<BigInt> want;
            for (BigInt x = start; x <= hi; x += step) want.push_back(x);
            if (got != want) {
                cexs[pi].push_back(make_cex(
                    {{"path", p.literal()},
                     {"check", what},
                     {"got_size", BigInt(static_cast<unsigned long>(got.size())).get_str()},
                     {"want_size", BigInt(static_cast<unsigned long>(want.size())).get_str()}}));
            }
        };
        check_set(false, any_start, any_mod, "any_end_progression");
        check_set(true, x_min, sol.x_modulus, "odd_end_progression");
    }
    for (auto& v : cexs) {
        res.counterexamples.insert(res.counterexamples.end(), v.begin(),
                                   v.end());
    }
    finish_verdict(res, max_cex);
    return res;
}

ClaimResult audit_lemma_3_1(std::uint32_t max_moves, std::uint64_t x_bound,
                            std::size_t max_cex) {
    ClaimResult res;
    res.claim_id = "lemma-3.1";
    res.domain_description = "paths with n+k <= " + std::to_string(max_moves) +
                             ", followers x0 <= " + std::to_string(x_bound);
    const std::vector<Path> paths = enumerate_paths(max_moves);

    std::vector<std::vector<Counterexample>> cexs(paths.size());
    std::vector<std::uint64_t> counts(paths.size(), 0);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t pi = 0; pi < static_cast<std::int64_t>(paths.size());
         ++pi) {
        const Path& p = paths[pi];
        const bool descent = descent_condition(p);
        const BigInt step = pow2(p.total_moves());
        // follows() depends only on x0 mod 2^{n+k}, so the follower set is
        // one residue class; find its first member, then stride.
        std::optional<BigInt> first;
        for (BigInt x = 1; x <= step; ++x) {
            if (follows(x, p)) {
                first = x;
                break;
            }
        }
        if (!first) continue;
        for (BigInt x = *first; x <= static_cast<unsigned long>(x_bound);
             x += step) {
            ++counts[pi];
            const BigInt fx = apply_path(x, p);
            const bool fell = fx < x;
            if (fell != descent) {
                cexs[pi].push_back(
                    make_cex({{"path", p.literal()},
                              {"x0", x.get_str()},
                              {"result", fx.get_str()},
                              {"descent_condition", descent ? "1" : "0"}}));
            }
        }
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
        res.instances_tested += counts[i];
        res.counterexamples.insert(res.counterexamples.end(), cexs[i].begin(),
                                   cexs[i].end());
    }
    finish_verdict(res, max_cex);
    return res;
}

std::vector<std::uint32_t> descent_inequality_violations_serial(
    std::uint32_t n_lo, std::uint32_t n_hi) {
    std::vector<std::uint32_t> bad;
    BigInt three = pow3(n_lo);
    for (std::uint32_t n = n_lo; n <= n_hi; ++n, three *= 3) {
        // 2^t > 3^n exactly when t >= bitlength(3^n): powers of 3 are never
        // powers of 2, so the minimal k is bitlength(3^n) - n.
        const std::size_t bits = mpz_sizeinbase(three.get_mpz_t(), 2);
        const std::uint32_t k = static_cast<std::uint32_t>(bits) - n;
        BigInt lhs = pow2(n + 1) - 1;
        lhs <<= k;
        if (lhs <= 2 * three - 1) bad.push_back(n);
    }
    return bad;
}

std::vector<std::uint32_t> descent_inequality_violations(std::uint32_t n_lo,
                                                         std::uint32_t n_hi) {
    if (n_hi < n_lo) return {};
    constexpr std::uint32_t kChunk = 2048;
    const std::uint32_t chunks = (n_hi - n_lo) / kChunk + 1;
    std::vector<std::vector<std::uint32_t>> found(chunks);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        const std::uint32_t lo = n_lo + static_cast<std::uint32_t>(c) * kChunk;
        const std::uint32_t hi = std::min(n_hi, lo + kChunk - 1);
        found[c] = descent_inequality_violations_serial(lo, hi);
    }
    std::vector<std::uint32_t> bad;
    for (auto& f : found) bad.insert(bad.end(), f.begin(), f.end());
    return bad;
}

ClaimResult audit_descent_inequality_exact(std::uint32_t n_max,
                                           std::size_t max_cex) {
    ClaimResult res;
    res.claim_id = "descent-inequality-exact";
    res.domain_description =
        "n in [1, " + std::to_string(n_max) +
        "], k minimal with 2^{n+k} > 3^n; exact arithmetic";
    res.instances_tested = n_max;
    for (std::uint32_t n : descent_inequality_violations(1, n_max)) {
        const std::size_t bits =
            mpz_sizeinbase(pow3(n).get_mpz_t(), 2);
        res.counterexamples.push_back(make_cex(
            {{"n", std::to_string(n)},
             {"k", std::to_string(bits - n)}}));
    }
    finish_verdict(res, max_cex);
    return res;
}

namespace {

// Outward-rounded bounds [lo, hi] containing the true value.
struct Bounds {
    mpfr_t lo, hi;

    explicit Bounds(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
    }
    ~Bounds() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Bounds(const Bounds&) = delete;
    Bounds& operator=(const Bounds&) = delete;
};

// log in the requested base, rounded in direction rnd.
void directed_log(mpfr_t out, const mpfr_t in, LogBase base, mpfr_rnd_t rnd) {
    switch (base) {
        case LogBase::Natural: mpfr_log(out, in, rnd); break;
        case LogBase::Base10: mpfr_log10(out, in, rnd); break;
        case LogBase::Base2: mpfr_log2(out, in, rnd); break;
    }
}

// L(n) = 1 / (457 * n^{133/10})
void rhin_lhs(Bounds& out, std::uint32_t n, mpfr_prec_t prec) {
    Bounds e(prec);
    mpfr_set_ui(e.lo, n, MPFR_RNDD);
    mpfr_set_ui(e.hi, n, MPFR_RNDU);
    mpfr_log(e.lo, e.lo, MPFR_RNDD);
    mpfr_log(e.hi, e.hi, MPFR_RNDU);
    mpfr_mul_ui(e.lo, e.lo, 133, MPFR_RNDD);
    mpfr_mul_ui(e.hi, e.hi, 133, MPFR_RNDU);
    mpfr_div_ui(e.lo, e.lo, 10, MPFR_RNDD);
    mpfr_div_ui(e.hi, e.hi, 10, MPFR_RNDU);
    mpfr_exp(e.lo, e.lo, MPFR_RNDD);
    mpfr_exp(e.hi, e.hi, MPFR_RNDU);
    mpfr_mul_ui(e.lo, e.lo, 457, MPFR_RNDD);
    mpfr_mul_ui(e.hi, e.hi, 457, MPFR_RNDU);
    // reciprocal flips the bounds
    mpfr_ui_div(out.lo, 1, e.hi, MPFR_RNDD);
    mpfr_ui_div(out.hi, 1, e.lo, MPFR_RNDU);
}

// R(n) = log(1 - 1/(2*3^n)) - log(1 - 1/(2*2^n))
void rhin_rhs(Bounds& out, std::uint32_t n, LogBase base, mpfr_prec_t prec) {
    Bounds log3(prec), log2b(prec);
    {
        const BigInt q = 2 * pow3(n);
        Bounds t(prec), a(prec);
        mpfr_set_z(t.lo, q.get_mpz_t(), MPFR_RNDU); // larger q -> smaller 1/q
        mpfr_set_z(t.hi, q.get_mpz_t(), MPFR_RNDD);
        mpfr_ui_div(t.lo, 1, t.lo, MPFR_RNDD);
        mpfr_ui_div(t.hi, 1, t.hi, MPFR_RNDU);
        mpfr_ui_sub(a.lo, 1, t.hi, MPFR_RNDD);
        mpfr_ui_sub(a.hi, 1, t.lo, MPFR_RNDU);
        directed_log(log3.lo, a.lo, base, MPFR_RNDD);
        directed_log(log3.hi, a.hi, base, MPFR_RNDU);
    }
    {
        Bounds t(prec), b(prec);
        // 1/(2*2^n) is an exact power of two
        mpfr_set_ui_2exp(t.lo, 1, -static_cast<mpfr_exp_t>(n) - 1, MPFR_RNDD);
        mpfr_set(t.hi, t.lo, MPFR_RNDN);
        mpfr_ui_sub(b.lo, 1, t.hi, MPFR_RNDD);
        mpfr_ui_sub(b.hi, 1, t.lo, MPFR_RNDU);
        directed_log(log2b.lo, b.lo, base, MPFR_RNDD);
        directed_log(log2b.hi, b.hi, base, MPFR_RNDU);
    }
    mpfr_sub(out.lo, log3.lo, log2b.hi, MPFR_RNDD);
    mpfr_sub(out.hi, log3.hi, log2b.lo, MPFR_RNDU);
}

} // namespace

ClaimResult audit_rhin_crossover(std::uint32_t n_lo, std::uint32_t n_hi,
                                 LogBase base, std::uint32_t precision_digits,
                                 std::size_t max_cex) {
    ClaimResult res;
    res.claim_id = "rhin-crossover";
    res.domain_description = "n in [" + std::to_string(n_lo) + ", " +
                             std::to_string(n_hi) + "], log base " +
                             to_string(base) + ", " +
                             std::to_string(precision_digits) +
                             " certified digits";
    res.instances_tested = n_hi >= n_lo ? n_hi - n_lo + 1 : 0;

    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(precision_digits * 3.3219280948873626) + 64;

    std::optional<std::uint32_t> first_gt;
    std::optional<std::uint32_t> persistent_from;
    bool claim_scanned = false;
    bool claim_holds = true;
    for (std::uint32_t n = n_lo; n <= n_hi; ++n) {
        Bounds lhs(prec), rhs(prec);
        rhin_lhs(lhs, n, prec);
        rhin_rhs(rhs, n, base, prec);
        bool gt;
        if (mpfr_cmp(lhs.lo, rhs.hi) > 0) {
            gt = true;
        } else if (mpfr_cmp(lhs.hi, rhs.lo) <= 0) {
            gt = false;
        } else {
            throw PrecisionInsufficientError(
                "intervals overlap at n=" + std::to_string(n) +
                "; raise precision_digits above " +
                std::to_string(precision_digits));
        }
        if (gt) {
            if (!first_gt) first_gt = n;
            if (!persistent_from) persistent_from = n;
        } else {
            persistent_from.reset();
        }
        if (n >= 96) {
            claim_scanned = true;
            if (!gt) {
                claim_holds = false;
                res.counterexamples.push_back(
                    make_cex({{"n", std::to_string(n)}}));
            }
        }
    }

    res.details["log_base"] = to_string(base);
    res.details["precision_digits"] = std::to_string(precision_digits);
    res.details["first_n_gt"] =
        first_gt ? std::to_string(*first_gt) : std::string("none");
    res.details["first_persistent_n"] =
        persistent_from ? std::to_string(*persistent_from) : std::string("none");
    res.verdict = !claim_scanned ? Verdict::Undetermined
                  : claim_holds  ? Verdict::Holds
                                 : Verdict::Refuted;
    cap_counterexamples(res, max_cex);
    return res;
}

ClaimResult audit_lemma_3_3(std::uint32_t moves_max, std::size_t max_cex) {
    ClaimResult res;
    res.claim_id = "lemma-3.3";
    res.domain_description =
        "escape-constrained paths with n+k <= " + std::to_string(moves_max) +
        "; growth table plus nondecreasing check, limit claim not asserted";

    std::vector<GrowthRow> rows;
    for (const Path& p : enumerate_paths(moves_max)) {
        if (!escape_constraints(p)) continue;
        rows.push_back({p, smallest_follower(p)});
    }
    res.instances_tested = rows.size();

    std::map<std::uint32_t, BigInt> min_by_moves;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const GrowthRow& row : rows) {
        const std::uint32_t s = row.path.total_moves();
        auto it = min_by_moves.find(s);
        if (it == min_by_moves.end() || row.min_follower < it->second) {
            min_by_moves.insert_or_assign(s, row.min_follower);
        }
        nlohmann::ordered_json j;
        j["total_moves"] = std::to_string(s);
        j["n"] = std::to_string(row.path.n());
        j["k"] = std::to_string(row.path.k());
        j["r"] = [&] {
            auto arr = nlohmann::ordered_json::array();
            for (std::uint32_t v : row.path.r()) arr.push_back(std::to_string(v));
            return arr;
        }();
        j["min_follower"] = row.min_follower.get_str();
        table.push_back(std::move(j));
    }

    nlohmann::ordered_json mins = nlohmann::ordered_json::array();
    const std::uint32_t* prev_s = nullptr;
    const BigInt* prev_m = nullptr;
    for (const auto& [s, m] : min_by_moves) {
        nlohmann::ordered_json j;
        j["total_moves"] = std::to_string(s);
        j["min_follower"] = m.get_str();
        mins.push_back(std::move(j));
        if (prev_m && m < *prev_m) {
            res.counterexamples.push_back(
                make_cex({{"total_moves_prev", std::to_string(*prev_s)},
                          {"min_prev", prev_m->get_str()},
                          {"total_moves", std::to_string(s)},
                          {"min", m.get_str()}}));
        }
        prev_s = &s;
        prev_m = &m;
    }
    res.details["growth_table"] = std::move(table);
    res.details["min_by_total_moves"] = std::move(mins);

    // Undetermined covers the n -> infinity claim; only an observed decrease
    // in the finite table refutes anything here.
    res.verdict = res.counterexamples.empty() ? Verdict::Undetermined
                                              : Verdict::Refuted;
    cap_counterexamples(res, max_cex);
    return res;
}

ClaimResult audit_theorem_3_4_scan(std::uint64_t x_bound,
                                   std::uint64_t move_cap,
                                   std::size_t max_cex) {
    ClaimResult res;
    res.claim_id = "theorem-3.4-scan";
    res.domain_description = "x0 in [1, " + std::to_string(x_bound) +
                             "], move cap " + std::to_string(move_cap) +
                             "; bounded empirical probe only";
    res.instances_tested = x_bound;

    const ScanResult scan = scan_reaches_one(x_bound, move_cap);
    std::uint64_t undetermined = 0;
    for (const ScanFinding& f : scan.not_reached) {
        if (f.outcome.status == ReachOutcome::Status::EnteredCycle) {
            res.counterexamples.push_back(
                make_cex({{"x0", std::to_string(f.x0)},
                          {"cycle_period", std::to_string(f.outcome.period)}}));
        } else {
            ++undetermined;
        }
    }
    res.details["max_moves_to_one"] = std::to_string(scan.max_moves);
    res.details["max_moves_x0"] = std::to_string(scan.max_moves_x0);
    res.details["undetermined_count"] = std::to_string(undetermined);

    res.verdict = !res.counterexamples.empty() ? Verdict::Refuted
                  : undetermined > 0           ? Verdict::Undetermined
                                               : Verdict::Holds;
    cap_counterexamples(res, max_cex);
    return res;
}

} // namespace collatz
