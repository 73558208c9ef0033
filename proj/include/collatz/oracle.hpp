#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "collatz/path.hpp"

namespace collatz {

// Bounded reach-1 verdict. C[x]=0 is never certified: within a move cap the
// outcome is ReachedOne, EnteredCycle (a value recurred before 1 was hit),
// or Undetermined.
struct ReachOutcome {
    enum class Status { ReachedOne, EnteredCycle, Undetermined };

    Status status = Status::Undetermined;
    std::uint64_t moves = 0;  // ReachedOne: exact accelerated move count
    std::uint64_t period = 0; // EnteredCycle: cycle length

    static ReachOutcome reached(std::uint64_t m) {
        return {Status::ReachedOne, m, 0};
    }
    static ReachOutcome cycled(std::uint64_t p) {
        return {Status::EnteredCycle, 0, p};
    }
    static ReachOutcome undetermined() { return {}; }

    bool operator==(const ReachOutcome&) const = default;
};

// All x0 in [lo, hi] with follows(x0, path); odd apply_path result required
// when require_odd_end. Ascending order. The parallel version partitions the
// range across OpenMP workers; output is identical to the serial one.
std::vector<BigInt> followers_in_range(const Path& path, const BigInt& lo,
                                       const BigInt& hi, bool require_odd_end);
std::vector<BigInt> followers_in_range_serial(const Path& path,
                                              const BigInt& lo,
                                              const BigInt& hi,
                                              bool require_odd_end);

std::optional<BigInt> brute_force_min_follower(const Path& path,
                                               bool require_odd_end,
                                               const BigInt& bound);

// Tracks the full visited set within the cap. The 1->2->1 accelerated cycle
// reports as ReachedOne because 1 is hit first.
ReachOutcome reaches_one(const BigInt& x0, std::uint64_t move_cap);

// Range scan of reaches_one over x0 in [1, x_bound].
struct ScanFinding {
    std::uint64_t x0 = 0;
    ReachOutcome outcome;
};

struct ScanResult {
    std::uint64_t scanned = 0;
    std::vector<ScanFinding> not_reached; // cycles + undetermined, ascending x0
    std::uint64_t max_moves = 0;          // largest move count to reach 1
    std::uint64_t max_moves_x0 = 0;       // smallest x0 attaining it
};

ScanResult scan_reaches_one(std::uint64_t x_bound, std::uint64_t move_cap);
ScanResult scan_reaches_one_serial(std::uint64_t x_bound,
                                   std::uint64_t move_cap);

} // namespace collatz
