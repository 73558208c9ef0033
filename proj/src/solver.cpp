#include "collatz/solver.hpp"

namespace collatz {

namespace {

// Nonnegative residue of v mod m (m > 0).
BigInt mod_pos(const BigInt& v, const BigInt& m) {
    BigInt out;
    mpz_mod(out.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return out;
}

} // namespace

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt u;
    if (mpz_invert(u.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw NotCoprimeError("no inverse of " + a.get_str() + " mod " +
                              m.get_str());
    }
    return u;
}

CResult solve_c(const Path& path, std::size_t i) {
    const std::uint32_t r = path.r().at(i - 1);
    const BigInt mod3 = pow3(r);
    const BigInt two_nk1 = pow2(path.total_moves() + 1);
    const BigInt rhs = pow2(r + i - 1); // 2^{r_i + i - 1}

    // c 2^{n+k+1} + 2^{r_i+i-1} = 0 (mod 3^{r_i}); powers of 2 and 3 are
    // coprime so the inverse always exists. r_i = 0 degenerates to c = 0.
    CResult res;
    res.i = i;
    res.c = mod_pos(-rhs * mod_inverse(two_nk1, mod3), mod3);
    res.t = (res.c * two_nk1 + rhs) / mod3;
    res.p = res.t;
    return res;
}

CharacteristicSolution characteristic_solution(const Path& path) {
    CharacteristicSolution sol{path, {}, pow2(path.total_moves() + 1),
                               0, pow3(path.n()), 0, 0};
    BigInt sum_t = 0;
    BigInt sum_c3 = 0;
    for (std::size_t i = 1; i <= path.k(); ++i) {
        CResult res = solve_c(path, i);
        sum_t += res.t;
        sum_c3 += res.c * pow3(path.n() - path.r()[i - 1]);
        sol.c.push_back(std::move(res));
    }
    sol.x_residue = mod_pos(-1 - sum_t, sol.x_modulus);
    sol.lambda_residue = mod_pos(-1 - sum_c3, sol.lambda_modulus);
    sol.min_follower = sol.x_residue > 0 ? sol.x_residue : sol.x_modulus;
    return sol;
}

BigInt smallest_follower(const Path& path) {
    const BigInt x = characteristic_solution(path).min_follower;
    if (!follows(x, path)) {
        throw VerificationFailedError("solver output " + x.get_str() +
                                      " does not follow " + path.literal());
    }
    const BigInt end = apply_path(x, path);
    if (mpz_even_p(end.get_mpz_t())) {
        throw VerificationFailedError("solver output " + x.get_str() +
                                      " ends even on " + path.literal());
    }
    return x;
}

BigInt diophantine_residual(const Path& path, const BigInt& x0,
                            const BigInt& lambda) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < path.r().size(); ++i) {
        sum += pow3(path.n() - path.r()[i]) * pow2(path.r()[i] + i);
    }
    return -pow3(path.n()) * (x0 + 1) +
           pow2(path.total_moves() + 1) * (lambda + 1) - sum;
}

mpq_class descent_slack(const Path& path, const BigInt& m) {
    mpq_class slack(m);
    for (std::size_t i = 1; i <= path.k(); ++i) {
        const CResult res = solve_c(path, i);
        slack -= mpq_class(res.c, pow3(path.r()[i - 1]));
    }
    mpq_canonicalize(slack.get_mpq_t());
    return slack;
}

} // namespace collatz
