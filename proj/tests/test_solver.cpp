#include <doctest.h>

#include "collatz/enumerate.hpp"
#include "collatz/oracle.hpp"
#include "collatz/solver.hpp"

using namespace collatz;

namespace {

Path P(std::uint32_t n, std::uint32_t k, std::vector<std::uint32_t> r) {
    return Path::validate(n, k, std::move(r));
}

} // namespace

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(128, 27) == 23);
    CHECK((BigInt(128) * 23) % 27 == 1);
    CHECK(mod_inverse(1, 3) == 1);
    CHECK_THROWS_AS(mod_inverse(2, 4), NotCoprimeError);
}

TEST_CASE("solve_c canonical constants") {
    const Path p = P(4, 2, {3, 4});
    CHECK(solve_c(p, 1).c == 5);
    CHECK(solve_c(p, 2).c == 20);

    const CResult deg = solve_c(P(1, 1, {0}), 1);
    CHECK(deg.c == 0);
    CHECK(deg.t == 1);
}

TEST_CASE("solve_c quotient identity") {
    const Path p = P(4, 2, {3, 4});
    for (std::size_t i = 1; i <= 2; ++i) {
        const CResult res = solve_c(p, i);
        const std::uint32_t r = p.r()[i - 1];
        CHECK(res.c * pow2(p.total_moves() + 1) + pow2(r + i - 1) ==
              res.p * pow3(r));
        CHECK(res.t == res.p);
        CHECK(res.c >= 0);
        CHECK(res.c < pow3(r));
    }
}

TEST_CASE("characteristic_solution worked examples") {
    const CharacteristicSolution a = characteristic_solution(P(4, 2, {3, 4}));
    CHECK(a.x_residue == 71);
    CHECK(a.x_modulus == 128);
    CHECK(a.min_follower == 71);

    const CharacteristicSolution b = characteristic_solution(P(1, 1, {0}));
    CHECK(b.x_residue == 6);
    CHECK(b.x_modulus == 8);
    CHECK(b.min_follower == 6);

    const CharacteristicSolution c = characteristic_solution(P(4, 0, {}));
    CHECK(c.x_residue == 31);
    CHECK(c.x_modulus == 32);
    CHECK(c.min_follower == 31);

    CHECK(characteristic_solution(P(1, 3, {1, 1, 1})).min_follower == 5);
}

TEST_CASE("smallest_follower") {
    CHECK(smallest_follower(P(1, 3, {1, 1, 1})) == 5);
    CHECK(smallest_follower(P(1, 1, {0})) == 6);
    for (std::uint32_t n = 1; n <= 10; ++n) {
        std::vector<std::uint32_t> r(n);
        for (std::uint32_t i = 0; i < n; ++i) r[i] = i + 1;
        CHECK(smallest_follower(P(n, n, std::move(r))) == 1);
    }
}

TEST_CASE("diophantine_residual") {
    const Path p = P(1, 1, {0});
    CHECK(diophantine_residual(p, 6, 2) == 0);
    // Perturbing x0 from 6 down to 5 adds 3^n = 3 to the residual.
    CHECK(diophantine_residual(p, 5, 2) == 3);

    const Path q = P(4, 2, {3, 4});
    const BigInt lambda = (apply_path(71, q) - 1) / 2;
    CHECK(diophantine_residual(q, 71, lambda) == 0);
}

TEST_CASE("property: residual linearity") {
    for (const Path& p : enumerate_paths(6)) {
        const BigInt x0 = characteristic_solution(p).min_follower;
        const BigInt lambda = (apply_path(x0, p) - 1) / 2;
        const BigInt base = diophantine_residual(p, x0, lambda);
        CHECK(diophantine_residual(p, x0 + pow2(p.total_moves() + 1),
                                   lambda + pow3(p.n())) == base);
    }
}

TEST_CASE("property: solver equals oracle minimum, n+k <= 8") {
    for (const Path& p : enumerate_paths(8)) {
        CAPTURE(p.literal());
        const BigInt bound = pow2(p.total_moves() + 2);
        const auto oracle = brute_force_min_follower(p, true, bound);
        REQUIRE(oracle.has_value());
        CHECK(smallest_follower(p) == *oracle);
    }
}

TEST_CASE("property: odd-end follower sets are progressions, n+k <= 6") {
    for (const Path& p : enumerate_paths(6)) {
        const BigInt start = smallest_follower(p);
        const BigInt step = pow2(p.total_moves() + 1);
        const BigInt hi = pow2(p.total_moves() + 3);
        std::vector<BigInt> want;
        for (BigInt x = start; x <= hi; x += step) want.push_back(x);
        CHECK(followers_in_range_serial(p, 1, hi, true) == want);
    }
}

TEST_CASE("property: lambda consistency, n+k <= 7") {
    for (const Path& p : enumerate_paths(7)) {
        const CharacteristicSolution sol = characteristic_solution(p);
        const BigInt x0 = sol.min_follower;
        const BigInt lambda = (apply_path(x0, p) - 1) / 2;
        CHECK(diophantine_residual(p, x0, lambda) == 0);
        BigInt lam_mod;
        mpz_mod(lam_mod.get_mpz_t(), lambda.get_mpz_t(),
                sol.lambda_modulus.get_mpz_t());
        CHECK(lam_mod == sol.lambda_residue);
    }
}

TEST_CASE("descent_slack exact rational") {
    // (4,2,[3,4]): min follower 71 = 128*1 - 57, so m = 1 and the slack is
    // 1 - 5/27 - 20/81 = 46/81.
    CHECK(descent_slack(P(4, 2, {3, 4}), 1) == mpq_class(46, 81));
    CHECK(descent_slack(P(4, 0, {}), 1) == 1);
}
