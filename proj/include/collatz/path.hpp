#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "collatz/errors.hpp"

namespace collatz {

using BigInt = mpz_class;

BigInt pow2(std::uint64_t e);
BigInt pow3(std::uint64_t e);

enum class Move : std::uint8_t {
    Horizontal, // odd x   ->  (3x+1)/2
    Vertical    // even x  ->  x/2
};

char move_letter(Move m); // 'H' or 'V'

// Grid coordinates: n_i horizontal moves taken, k_i vertical moves taken.
struct GridPoint {
    std::uint32_t n = 0;
    std::uint32_t k = 0;

    bool operator==(const GridPoint&) const = default;
};

// A move schedule (n, k, r_1..r_k): n horizontal moves, k vertical moves,
// r_i = how many horizontal moves precede the i-th vertical move.
// Constructed only through validate(), so every Path in circulation
// satisfies |r| = k, r non-decreasing, 0 <= r_i <= n.
class Path {
public:
    static Path validate(std::uint32_t n, std::uint32_t k,
                         std::vector<std::uint32_t> r);

    // Parses the shared literal syntax "n:k:r1,...,rk" ("4:0:" for empty r).
    static Path parse(const std::string& literal);

    std::uint32_t n() const { return n_; }
    std::uint32_t k() const { return k_; }
    const std::vector<std::uint32_t>& r() const { return r_; }
    std::uint32_t total_moves() const { return n_ + k_; }

    std::string literal() const;

    bool operator==(const Path&) const = default;

private:
    Path(std::uint32_t n, std::uint32_t k, std::vector<std::uint32_t> r)
        : n_(n), k_(k), r_(std::move(r)) {}

    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::vector<std::uint32_t> r_;
};

// The exact map x -> (mul*x + add) / div with mul = 3^n, div = 2^{n+k}.
struct AffineForm {
    BigInt mul;
    BigInt add;
    BigInt div;

    bool operator==(const AffineForm&) const = default;
};

// A realized value sequence: values has one more element than moves,
// grid has one point per value, starting at (0,0).
struct Trajectory {
    std::vector<BigInt> values;
    std::vector<Move> moves;
    std::vector<GridPoint> grid;
};

// One accelerated step: odd x -> (Horizontal, (3x+1)/2), even x -> (Vertical, x/2).
std::pair<Move, BigInt> collatz_step(const BigInt& x);

// The move order encoded by a path: at each horizontal position j = 0..n,
// first the verticals scheduled there (ascending i), then one horizontal
// if j < n. Length n+k.
std::vector<Move> move_sequence(const Path& path);

// Parity-forced trajectory of exactly num_moves steps from x0.
Trajectory simulate(const BigInt& x0, std::size_t num_moves);

// True iff x0's parity-forced moves realize the path's move sequence.
bool follows(const BigInt& x0, const Path& path);

// a(n,k,r) = 3^n - 2^{n+k} + sum_{i=1..k} 3^{n-r_i} 2^{r_i+i-1}
BigInt coefficient_a(const Path& path);

// Same coefficient, computed by replaying the two recurrences
// a <- 3a + 2^{n'+k'} on a horizontal step, a unchanged on a vertical step,
// along the path's move sequence.
BigInt coefficient_a_recurrence(const Path& path);

AffineForm affine_form(const Path& path);

// (3^n x0 + a) / 2^{n+k}; throws DoesNotFollowError unless follows(x0, path).
BigInt apply_path(const BigInt& x0, const Path& path);

// The n+k+1 grid points from (0,0) induced by move_sequence(path).
std::vector<GridPoint> grid_points(const Path& path);

// The unique path with total_moves = num_moves that x0 follows.
Path trajectory_path(const BigInt& x0, std::size_t num_moves);

} // namespace collatz
