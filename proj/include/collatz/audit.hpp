#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "collatz/path.hpp"

namespace collatz {

enum class Verdict { Holds, Refuted, Undetermined };

std::string to_string(Verdict v);

// One violating instance, as named integer fields (decimal strings).
struct Counterexample {
    std::vector<std::pair<std::string, std::string>> fields;
};

struct ClaimResult {
    std::string claim_id;
    std::string domain_description;
    std::uint64_t instances_tested = 0;
    Verdict verdict = Verdict::Undetermined;
    std::vector<Counterexample> counterexamples;
    nlohmann::ordered_json details; // claim-specific structured extras
};

inline constexpr std::size_t kDefaultCounterexampleCap = 100;

// Exact comparison 2^{n+k} > 3^n. Integer arithmetic only.
bool descent_condition(const Path& path);

// Exact integer form of the escape system:
// 3^{r_i} > 2^{r_i+i} for every i, and 3^n > 2^{n+k}.
bool escape_constraints(const Path& path);

// Closed form vs simulation over x0 <= x_bound, move counts <= max_moves.
ClaimResult audit_lemma_2_1(std::uint32_t max_moves, std::uint64_t x_bound,
                            std::size_t max_cex = kDefaultCounterexampleCap);

// Per horizontal position, exactly one odd value in the trajectory column.
ClaimResult audit_lemma_2_3(std::uint64_t x_bound,
                            std::uint32_t horizontal_budget,
                            std::size_t max_cex = kDefaultCounterexampleCap);

// Solver vs oracle over every valid path with n+k <= max_moves: zero
// residual, matching minima, follower sets exactly the residue classes.
ClaimResult audit_thm_2_3(std::uint32_t max_moves,
                          std::size_t max_cex = kDefaultCounterexampleCap);

// Both directions of [f(x0,P) < x0 <=> 2^{n+k} > 3^n] over all followers
// x0 <= x_bound of every path with n+k <= max_moves. The strict "<" is
// tested literally, so trajectory fixed points count as violations.
ClaimResult audit_lemma_3_1(std::uint32_t max_moves, std::uint64_t x_bound,
                            std::size_t max_cex = kDefaultCounterexampleCap);

// For each n, with k minimal such that 2^{n+k} > 3^n, verify exactly that
// 2^k (2^{n+1} - 1) > 2*3^n - 1.
ClaimResult audit_descent_inequality_exact(
    std::uint32_t n_max, std::size_t max_cex = kDefaultCounterexampleCap);
// Serial reference for the same scan; returns violating n values.
std::vector<std::uint32_t> descent_inequality_violations_serial(
    std::uint32_t n_lo, std::uint32_t n_hi);
std::vector<std::uint32_t> descent_inequality_violations(std::uint32_t n_lo,
                                                         std::uint32_t n_hi);

enum class LogBase { Natural, Base10, Base2 };

std::string to_string(LogBase b);

// Certified comparison of L(n) = 1/(457 n^{13.3}) against
// R(n) = log(1 - 1/(2*3^n)) - log(1 - 1/(2*2^n)) with outward-rounded
// bounds; 13.3 is treated as the exact rational 133/10. Throws
// PrecisionInsufficientError when an interval comparison is inconclusive.
ClaimResult audit_rhin_crossover(std::uint32_t n_lo, std::uint32_t n_hi,
                                 LogBase base,
                                 std::uint32_t precision_digits,
                                 std::size_t max_cex = kDefaultCounterexampleCap);

// Growth table of smallest followers over escape-constrained paths with
// n+k <= moves_max, plus a nondecreasing check on the per-move-count
// minima. The limit claim itself is reported Undetermined.
struct GrowthRow {
    Path path;
    BigInt min_follower;
};
ClaimResult audit_lemma_3_3(std::uint32_t moves_max,
                            std::size_t max_cex = kDefaultCounterexampleCap);

// Bounded empirical probe: reaches_one over all x0 <= x_bound.
ClaimResult audit_theorem_3_4_scan(
    std::uint64_t x_bound, std::uint64_t move_cap,
    std::size_t max_cex = kDefaultCounterexampleCap);

} // namespace collatz
