#pragma once

#include <vector>

#include "collatz/path.hpp"

namespace collatz {

// Canonical solution of 3^{r_i} | c_i 2^{n+k+1} + 2^{r_i+i-1}.
// c is the smallest nonnegative solution; p = t is the exact quotient.
struct CResult {
    std::size_t i = 0; // 1-based index
    BigInt c;
    BigInt p;
    BigInt t; // t_i = (c_i 2^{n+k+1} + 2^{r_i+i-1}) / 3^{r_i}, equals p
};

// The residue classes solving the Diophantine system for a path:
//   x0      = x_residue      (mod 2^{n+k+1})
//   lambda  = lambda_residue (mod 3^n)
// min_follower is the smallest positive representative of x_residue.
struct CharacteristicSolution {
    Path path;
    std::vector<CResult> c;
    BigInt x_modulus;      // 2^{n+k+1}
    BigInt x_residue;      // in [0, x_modulus)
    BigInt lambda_modulus; // 3^n
    BigInt lambda_residue; // in [0, lambda_modulus)
    BigInt min_follower;
};

// u in [0, m) with a*u = 1 (mod m); throws NotCoprimeError if gcd(a,m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

CResult solve_c(const Path& path, std::size_t i);

CharacteristicSolution characteristic_solution(const Path& path);

// Smallest follower whose final value is odd (the odd-end reading of the
// characteristic function). Verified internally by simulation; throws
// VerificationFailedError if the solver output fails that check.
BigInt smallest_follower(const Path& path);

// -3^n (x0+1) + 2^{n+k+1} (lambda+1) - sum 3^{n-r_i} 2^{r_i+i-1};
// zero iff (x0, lambda) solves the system.
BigInt diophantine_residual(const Path& path, const BigInt& x0,
                            const BigInt& lambda);

// The exact rational m - sum c_i / 3^{r_i} for the representative
// x0 = 2^{n+k+1} m - 1 - sum t_i. Exposed for auditing only; the library
// takes no position on whether it can be made > 1.
mpq_class descent_slack(const Path& path, const BigInt& m);

} // namespace collatz
