// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All comparisons are exact.

#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "collatz/audit.hpp"
#include "collatz/enumerate.hpp"
#include "collatz/oracle.hpp"
#include "collatz/report.hpp"
#include "collatz/solver.hpp"

using namespace collatz;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool ok) {
    std::printf("criterion %d [%s]: %s\n", criterion, ok ? "PASS" : "FAIL",
                what);
    std::fflush(stdout);
    if (!ok) ++failures;
}

Path P(std::uint32_t n, std::uint32_t k, std::vector<std::uint32_t> r) {
    return Path::validate(n, k, std::move(r));
}

std::string field(const Counterexample& c, const std::string& name) {
    for (const auto& [k, v] : c.fields) {
        if (k == name) return v;
    }
    return {};
}

// 1. Paper-example golden values, exact equality.
void criterion_1() {
    bool ok = apply_path(22, P(2, 2, {0, 2})) == 13;
    ok = ok && smallest_follower(P(1, 3, {1, 1, 1})) == 5;
    ok = ok && coefficient_a(P(4, 3, {0, 2, 4})) == 170;
    ok = ok && apply_path(118, P(4, 3, {0, 2, 4})) == 76;

    const CharacteristicSolution ex24 = characteristic_solution(P(4, 2, {3, 4}));
    ok = ok && ex24.c.size() == 2 && ex24.c[0].c == 5 && ex24.c[1].c == 20 &&
         ex24.min_follower == 71;

    const CharacteristicSolution ex25 = characteristic_solution(P(1, 1, {0}));
    ok = ok && ex25.x_residue == 6 && ex25.x_modulus == 8 &&
         ex25.min_follower == 6;
    ok = ok && brute_force_min_follower(P(1, 1, {0}), false, 512) == BigInt(2);

    for (std::uint32_t n = 1; n <= 10 && ok; ++n) {
        std::vector<std::uint32_t> r(n);
        for (std::uint32_t i = 0; i < n; ++i) r[i] = i + 1;
        ok = smallest_follower(P(n, n, std::move(r))) == 1;
    }
    for (std::uint32_t n = 1; n <= 12 && ok; ++n) {
        ok = smallest_follower(P(n, 0, {})) == pow2(n + 1) - 1;
    }
    ok = ok && smallest_follower(P(4, 0, {})) == 31;

    ok = ok && coefficient_a(P(1, 2, {1, 1})) == 1 &&
         affine_form(P(1, 2, {1, 1})) == AffineForm{3, 1, 8};
    report(1, "paper-example golden values", ok);
}

// 2. Solver vs oracle over every path with n+k <= 10.
void criterion_2() {
    const ClaimResult res = audit_thm_2_3(10);
    report(2, "oracle equivalence for all paths with n+k <= 10",
           res.verdict == Verdict::Holds && res.instances_tested == 2047);
}

// 3. Closed form vs simulation for all x0 <= 2^16, move counts <= 12, and
//    closed-form a vs recurrence a over all paths with n+k <= 12.
void criterion_3() {
    const ClaimResult res = audit_lemma_2_1(12, 1 << 16);
    bool ok = res.verdict == Verdict::Holds;
    for (const Path& p : enumerate_paths(12)) {
        if (coefficient_a(p) != coefficient_a_recurrence(p)) {
            ok = false;
            break;
        }
    }
    report(3, "closed form = simulation (x0 <= 2^16, moves <= 12)", ok);
}

// 4. Lemma 2.3 uniqueness.
void criterion_4() {
    const ClaimResult res = audit_lemma_2_3(1 << 11, 6);
    report(4, "lemma 2.3 uniqueness (x0 <= 2^11, budget 6)",
           res.verdict == Verdict::Holds);
}

// 5. Lemma 3.1 refuted, with the trivial-cycle counterexamples, replayable.
void criterion_5() {
    const ClaimResult res = audit_lemma_3_1(6, 1 << 16);
    bool ok = res.verdict == Verdict::Refuted;
    bool c2 = false, c1 = false;
    for (const Counterexample& c : res.counterexamples) {
        if (field(c, "path") == "1:1:0" && field(c, "x0") == "2") c2 = true;
        if (field(c, "path") == "1:1:1" && field(c, "x0") == "1") c1 = true;
        const Path p = Path::parse(field(c, "path"));
        const BigInt x0(field(c, "x0"));
        const BigInt fx = apply_path(x0, p);
        if (fx.get_str() != field(c, "result")) ok = false;
        if ((fx < x0) == descent_condition(p)) ok = false; // must violate
    }
    report(5, "lemma 3.1 audit refuted with 1<->2 counterexamples, replayed",
           ok && c1 && c2);
}

// 6. Exact descent inequality up to n = 10^5 plus spot values.
void criterion_6() {
    bool ok = pow2(1) * (pow2(2) - 1) > 2 * pow3(1) - 1;   // 6 > 5
    ok = ok && pow2(2) * (pow2(3) - 1) > 2 * pow3(2) - 1;  // 28 > 17
    ok = ok && pow2(3) * (pow2(6) - 1) > 2 * pow3(5) - 1;  // 504 > 485
    const ClaimResult res = audit_descent_inequality_exact(100000);
    report(6, "exact descent inequality for n <= 10^5",
           ok && res.verdict == Verdict::Holds);
}

// 7. Rhin crossover holds on [96, 1000] and the per-base smallest
//    persistent n values match the pinned regressions.
void criterion_7() {
    const ClaimResult natural =
        audit_rhin_crossover(96, 1000, LogBase::Natural, 60);
    bool ok = natural.verdict == Verdict::Holds;

    struct Pin {
        LogBase base;
        const char* expected;
    };
    // Values produced by the tool on first run, pinned as regressions.
    const Pin pins[] = {
        {LogBase::Natural, "96"},
        {LogBase::Base10, "94"},
        {LogBase::Base2, "96"},
    };
    for (const Pin& pin : pins) {
        const ClaimResult res = audit_rhin_crossover(1, 1000, pin.base, 60);
        if (res.details["first_persistent_n"] != pin.expected) {
            std::printf("  rhin %s: first_persistent_n = %s (expected %s)\n",
                        to_string(pin.base).c_str(),
                        res.details["first_persistent_n"]
                            .get<std::string>()
                            .c_str(),
                        pin.expected);
            ok = false;
        }
    }
    report(7, "rhin crossover certified on [96,1000], pinned per-base onsets",
           ok);
}

// 8. Bounded conjecture scan to 10^6.
void criterion_8() {
    const ClaimResult res = audit_theorem_3_4_scan(1000000, 10000);
    report(8, "every x0 <= 10^6 reaches 1; no cycle found",
           res.verdict == Verdict::Holds && res.counterexamples.empty());
}

// 9. Byte-identical audit-all reports across runs and worker counts.
void criterion_9() {
    const auto run_all = [] {
        AuditReport report;
        report.configuration["suite"] = "acceptance";
        report.results.push_back(audit_lemma_2_1(8, 2048));
        report.results.push_back(audit_lemma_2_3(2048, 6));
        report.results.push_back(audit_thm_2_3(8));
        report.results.push_back(audit_lemma_3_1(6, 65536));
        report.results.push_back(audit_descent_inequality_exact(10000));
        report.results.push_back(
            audit_rhin_crossover(1, 1000, LogBase::Natural, 60));
        report.results.push_back(audit_lemma_3_3(20));
        report.results.push_back(audit_theorem_3_4_scan(100000, 10000));
        return to_json(report).dump(2); // timestamp not set: excluded
    };
    omp_set_num_threads(4);
    const std::string a = run_all();
    omp_set_num_threads(2);
    const std::string b = run_all();
    omp_set_num_threads(1);
    const std::string c = run_all();
    omp_set_num_threads(omp_get_num_procs());
    report(9, "audit-all reports byte-identical across worker counts",
           a == b && b == c);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
