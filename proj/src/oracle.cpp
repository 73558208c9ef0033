#include "collatz/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace collatz {

namespace {

// True iff x0 realizes the path's moves; on success *end gets the final value.
bool follows_with_end(const BigInt& x0, const std::vector<Move>& want,
                      BigInt* end) {
    BigInt x = x0;
    for (Move m : want) {
        auto [got, next] = collatz_step(x);
        if (got != m) return false;
        x = std::move(next);
    }
    *end = std::move(x);
    return true;
}

bool is_follower(const BigInt& x0, const std::vector<Move>& want,
                 bool require_odd_end) {
    BigInt end;
    if (!follows_with_end(x0, want, &end)) return false;
    return !require_odd_end || mpz_odd_p(end.get_mpz_t());
}

// 64-bit iteration; nullopt when 3x+1 would overflow (caller retries bignum).
std::optional<ReachOutcome> reaches_one_fast(std::uint64_t x0,
                                             std::uint64_t move_cap) {
    constexpr std::uint64_t kMax3 =
        (std::numeric_limits<std::uint64_t>::max() - 1) / 3;
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    std::uint64_t x = x0;
    for (std::uint64_t s = 0;; ++s) {
        if (x == 1) return ReachOutcome::reached(s);
        if (s >= move_cap) return ReachOutcome::undetermined();
        auto [it, fresh] = seen.emplace(x, s);
        if (!fresh) return ReachOutcome::cycled(s - it->second);
        if (x & 1) {
            if (x > kMax3) return std::nullopt;
            x = (3 * x + 1) / 2;
        } else {
            x >>= 1;
        }
    }
}

ReachOutcome reaches_one_big(const BigInt& x0, std::uint64_t move_cap) {
    std::map<BigInt, std::uint64_t> seen;
    BigInt x = x0;
    for (std::uint64_t s = 0;; ++s) {
        if (x == 1) return ReachOutcome::reached(s);
        if (s >= move_cap) return ReachOutcome::undetermined();
        auto [it, fresh] = seen.emplace(x, s);
        if (!fresh) return ReachOutcome::cycled(s - it->second);
        x = collatz_step(x).second;
    }
}

} // namespace

std::vector<BigInt> followers_in_range_serial(const Path& path,
                                              const BigInt& lo,
                                              const BigInt& hi,
                                              bool require_odd_end) {
    const std::vector<Move> want = move_sequence(path);
    std::vector<BigInt> out;
    for (BigInt x = lo; x <= hi; ++x) {
        if (is_follower(x, want, require_odd_end)) out.push_back(x);
    }
    return out;
}

std::vector<BigInt> followers_in_range(const Path& path, const BigInt& lo,
                                       const BigInt& hi,
                                       bool require_odd_end) {
    if (hi < lo) return {};
    const BigInt span = hi - lo + 1;
    if (!span.fits_ulong_p()) return followers_in_range_serial(path, lo, hi,
                                                               require_odd_end);
    const std::uint64_t count = span.get_ui();
    const std::vector<Move> want = move_sequence(path);
    std::vector<char> hit(count, 0);
#pragma omp parallel for schedule(dynamic, 4096)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(count); ++idx) {
        const BigInt x = lo + static_cast<unsigned long>(idx);
        if (is_follower(x, want, require_odd_end)) hit[idx] = 1;
    }
    std::vector<BigInt> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        if (hit[idx]) out.push_back(lo + static_cast<unsigned long>(idx));
    }
    return out;
}

std::optional<BigInt> brute_force_min_follower(const Path& path,
                                               bool require_odd_end,
                                               const BigInt& bound) {
    const std::vector<Move> want = move_sequence(path);
    for (BigInt x = 1; x <= bound; ++x) {
        if (is_follower(x, want, require_odd_end)) return x;
    }
    return std::nullopt;
}

ReachOutcome reaches_one(const BigInt& x0, std::uint64_t move_cap) {
    if (x0.fits_ulong_p()) {
        if (auto fast = reaches_one_fast(x0.get_ui(), move_cap)) return *fast;
    }
    return reaches_one_big(x0, move_cap);
}

ScanResult scan_reaches_one_serial(std::uint64_t x_bound,
                                   std::uint64_t move_cap) {
    ScanResult res;
    res.scanned = x_bound;
    for (std::uint64_t x0 = 1; x0 <= x_bound; ++x0) {
        const ReachOutcome out = reaches_one(BigInt(static_cast<unsigned long>(x0)),
                                             move_cap);
        if (out.status != ReachOutcome::Status::ReachedOne) {
            res.not_reached.push_back({x0, out});
        } else if (out.moves > res.max_moves) {
            res.max_moves = out.moves;
            res.max_moves_x0 = x0;
        }
    }
    return res;
}

ScanResult scan_reaches_one(std::uint64_t x_bound, std::uint64_t move_cap) {
    ScanResult res;
    res.scanned = x_bound;
#ifdef _OPENMP
    const int nthreads = omp_get_max_threads();
#else
    const int nthreads = 1;
#endif
    std::vector<std::vector<ScanFinding>> findings(nthreads);
    std::vector<std::uint64_t> tmax(nthreads, 0), targ(nthreads, 0);
#pragma omp parallel for schedule(dynamic, 1024)
    for (std::int64_t x0 = 1; x0 <= static_cast<std::int64_t>(x_bound); ++x0) {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        const ReachOutcome out =
            reaches_one(BigInt(static_cast<unsigned long>(x0)), move_cap);
        if (out.status != ReachOutcome::Status::ReachedOne) {
            findings[tid].push_back({static_cast<std::uint64_t>(x0), out});
        } else if (out.moves > tmax[tid] ||
                   (out.moves == tmax[tid] &&
                    (targ[tid] == 0 ||
                     static_cast<std::uint64_t>(x0) < targ[tid]))) {
            if (out.moves > tmax[tid]) {
                tmax[tid] = out.moves;
                targ[tid] = static_cast<std::uint64_t>(x0);
            }
        }
    }
    // Canonical merge: findings ascending by x0, max tie broken by smallest x0.
    for (auto& f : findings) {
        res.not_reached.insert(res.not_reached.end(), f.begin(), f.end());
    }
    std::sort(res.not_reached.begin(), res.not_reached.end(),
              [](const ScanFinding& a, const ScanFinding& b) {
                  return a.x0 < b.x0;
              });
    for (int t = 0; t < nthreads; ++t) {
        if (tmax[t] > res.max_moves ||
            (tmax[t] == res.max_moves && targ[t] != 0 &&
             (res.max_moves_x0 == 0 || targ[t] < res.max_moves_x0))) {
            res.max_moves = tmax[t];
            res.max_moves_x0 = targ[t];
        }
    }
    return res;
}

} // namespace collatz
