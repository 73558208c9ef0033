#include <doctest.h>

#include <omp.h>

#include "collatz/audit.hpp"
#include "collatz/oracle.hpp"
#include "collatz/report.hpp"
#include "collatz/solver.hpp"

using namespace collatz;

namespace {

Path P(std::uint32_t n, std::uint32_t k, std::vector<std::uint32_t> r) {
    return Path::validate(n, k, std::move(r));
}

std::string field(const Counterexample& c, const std::string& name) {
    for (const auto& [k, v] : c.fields) {
        if (k == name) return v;
    }
    return {};
}

bool has_cex(const ClaimResult& res, const std::string& path_literal,
             const std::string& x0) {
    for (const Counterexample& c : res.counterexamples) {
        if (field(c, "path") == path_literal && field(c, "x0") == x0) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("descent_condition is the exact power comparison") {
    CHECK(descent_condition(P(1, 2, {1, 1})));  // 8 > 3
    CHECK_FALSE(descent_condition(P(2, 1, {0}))); // 8 < 9
    CHECK_FALSE(descent_condition(P(0, 0, {}))); // 1 > 1 fails
}

TEST_CASE("escape_constraints exact integer form") {
    CHECK(escape_constraints(P(3, 1, {2})));       // 27 > 16 and 9 > 8
    CHECK_FALSE(escape_constraints(P(3, 1, {1}))); // 3 > 4 fails
    CHECK_FALSE(escape_constraints(P(0, 0, {})));  // 3^0 > 2^0 fails
    CHECK(escape_constraints(P(4, 0, {})));        // pure horizontal family
    CHECK_FALSE(escape_constraints(P(2, 2, {0, 2})));
}

TEST_CASE("audit_lemma_2_1 holds at desk scale") {
    const ClaimResult res = audit_lemma_2_1(7, 512);
    CHECK(res.verdict == Verdict::Holds);
    CHECK(res.counterexamples.empty());
    CHECK(res.instances_tested == 512 * 8);
}

TEST_CASE("audit_lemma_2_3 uniqueness holds") {
    const ClaimResult res = audit_lemma_2_3(512, 6);
    CHECK(res.verdict == Verdict::Holds);
    // Example 2.6: 1,2,1,2,... stays within budget
    CHECK(audit_lemma_2_3(1, 3).verdict == Verdict::Holds);
}

TEST_CASE("audit_thm_2_3 holds at desk scale") {
    const ClaimResult res = audit_thm_2_3(6);
    CHECK(res.verdict == Verdict::Holds);
    CHECK(res.instances_tested == (1u << 7) - 1);
}

TEST_CASE("audit_lemma_3_1 is refuted by the 1<->2 cycle") {
    const ClaimResult res = audit_lemma_3_1(4, 4096);
    CHECK(res.verdict == Verdict::Refuted);
    CHECK(has_cex(res, "1:1:0", "2"));
    CHECK(has_cex(res, "1:1:1", "1"));

    // Replay soundness: each record reproduces the recorded violation.
    for (const Counterexample& c : res.counterexamples) {
        const Path p = Path::parse(field(c, "path"));
        const BigInt x0(field(c, "x0"));
        const BigInt fx = apply_path(x0, p);
        CHECK(fx.get_str() == field(c, "result"));
        CHECK((fx < x0) != (field(c, "descent_condition") == "1"));
        CHECK(descent_condition(p) == (field(c, "descent_condition") == "1"));
    }
}

TEST_CASE("descent inequality: spot values and scan") {
    // n=1,k=1: 2*3 = 6 > 5; n=2,k=2: 4*7 = 28 > 17; n=5,k=3: 8*63 = 504 > 485
    CHECK(pow2(1) * (pow2(2) - 1) > 2 * pow3(1) - 1);
    CHECK(pow2(2) * (pow2(3) - 1) > 2 * pow3(2) - 1);
    CHECK(pow2(3) * (pow2(6) - 1) > 2 * pow3(5) - 1);

    const ClaimResult res = audit_descent_inequality_exact(2000);
    CHECK(res.verdict == Verdict::Holds);
    CHECK(res.instances_tested == 2000);

    CHECK(descent_inequality_violations(1, 5000) ==
          descent_inequality_violations_serial(1, 5000));
}

TEST_CASE("rhin crossover certification") {
    const ClaimResult res = audit_rhin_crossover(96, 150, LogBase::Natural, 60);
    CHECK(res.verdict == Verdict::Holds);
    CHECK(res.details["first_persistent_n"] == "96");

    // Below the crossover the bound is too weak; the claim starts at 96.
    const ClaimResult low = audit_rhin_crossover(1, 50, LogBase::Natural, 60);
    CHECK(low.verdict == Verdict::Undetermined);
    CHECK(low.details["first_persistent_n"] == "none");
}

TEST_CASE("rhin crossover: tightening precision never flips a verdict") {
    const ClaimResult a = audit_rhin_crossover(60, 200, LogBase::Natural, 60);
    const ClaimResult b = audit_rhin_crossover(60, 200, LogBase::Natural, 200);
    CHECK(a.verdict == b.verdict);
    CHECK(a.details["first_n_gt"] == b.details["first_n_gt"]);
    CHECK(a.details["first_persistent_n"] == b.details["first_persistent_n"]);

    for (LogBase base : {LogBase::Base10, LogBase::Base2}) {
        const ClaimResult c = audit_rhin_crossover(60, 200, base, 60);
        const ClaimResult d = audit_rhin_crossover(60, 200, base, 200);
        CHECK(c.details["first_persistent_n"] == d.details["first_persistent_n"]);
    }
}

TEST_CASE("audit_lemma_3_3 growth table") {
    const ClaimResult res = audit_lemma_3_3(14);
    // The per-move-count minima are NOT nondecreasing at desk scale:
    // M(3) = 11 via path 2:1:2 but M(4) = 7 via path 3:1:3
    // (7 -> 11 -> 17 -> 26 -> 13, odd end, escape-constrained).
    CHECK(res.verdict == Verdict::Refuted);
    REQUIRE_FALSE(res.counterexamples.empty());
    CHECK(field(res.counterexamples.front(), "min_prev") == "11");
    CHECK(field(res.counterexamples.front(), "min") == "7");
    CHECK(smallest_follower(P(3, 1, {3})) == 7);
    CHECK(escape_constraints(P(3, 1, {3})));
    // Pure-horizontal paths qualify and pin the family 2^{n+1}-1.
    bool found_31 = false;
    for (const auto& row : res.details["growth_table"]) {
        if (row["n"] == "4" && row["k"] == "0") {
            CHECK(row["min_follower"] == "31");
            found_31 = true;
        }
    }
    CHECK(found_31);

    const std::string csv = render_growth_csv(res);
    CHECK(csv.starts_with("total_moves,n,k,r_list,min_follower\n"));
    CHECK(csv.find("4,4,0,,31") != std::string::npos);
}

TEST_CASE("audit_theorem_3_4_scan") {
    const ClaimResult res = audit_theorem_3_4_scan(50000, 10000);
    CHECK(res.verdict == Verdict::Holds);
    CHECK(res.counterexamples.empty());
    CHECK(audit_theorem_3_4_scan(1, 1).verdict == Verdict::Holds);
    // Too small a cap leaves stragglers undetermined, never refuted.
    const ClaimResult capped = audit_theorem_3_4_scan(1000, 10);
    CHECK(capped.verdict == Verdict::Undetermined);
    CHECK(capped.counterexamples.empty());
}

TEST_CASE("counterexample cap bounds report size") {
    const ClaimResult res = audit_lemma_3_1(6, 65536, 5);
    CHECK(res.verdict == Verdict::Refuted);
    CHECK(res.counterexamples.size() == 5);
}

TEST_CASE("reports are deterministic across worker counts") {
    std::string first;
    for (int threads : {1, 4, 2}) {
        omp_set_num_threads(threads);
        AuditReport report;
        report.configuration["probe"] = "determinism";
        report.results.push_back(audit_lemma_3_1(5, 8192));
        report.results.push_back(audit_thm_2_3(5));
        report.results.push_back(audit_theorem_3_4_scan(20000, 5000));
        const std::string bytes = to_json(report).dump(2);
        if (first.empty()) {
            first = bytes;
        } else {
            CHECK(bytes == first);
        }
    }
    omp_set_num_threads(omp_get_num_procs());
}
