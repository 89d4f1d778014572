#ifndef RSTAR_VIETA_HPP
#define RSTAR_VIETA_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rstar/polynomial.hpp"
#include "rstar/rbonacci.hpp"
#include "rstar/report.hpp"

namespace rstar {

/// Parameterization of the derivative statements: user-facing (r, n, p, k)
/// plus the derived quantities. t is the derivative order, eta the number of
/// reference zeros of R_{rn+p}^(t), and mu its leading coefficient, the
/// falling factorial of length t starting at (r-1)(rn+p-1).
struct DerivativeSpec {
    int r = 2;
    std::int64_t n = 1;
    int p = 0;
    std::int64_t k = 1;
    std::int64_t t = 0;
    std::int64_t eta = 0;
    BigInt mu;

    std::int64_t poly_index() const noexcept { return r * n + p; }
    std::int64_t base_degree() const noexcept {
        return static_cast<std::int64_t>(r - 1) * (poly_index() - 1);
    }
};

/// Derives (t, eta, mu) from (r, n, p, k); throws InvalidSpec when t < 1 or
/// eta < 1, i.e. when no statement applies.
DerivativeSpec derivative_spec(int r, std::int64_t n, int p, std::int64_t k);

/// Vieta read-off: sigma_j = (-1)^j coeff(Q, deg-j) / coeff(Q, deg) for
/// j = 0..deg, the elementary symmetric functions of Q's roots.
std::vector<Rational> elementary_symmetric_from_poly(const Polynomial& q);

/// Predicted sigma_j for the zeros of R_{rn+p}, p in {0,1}:
/// (-1)^j * rnomial(rn-j-1, j) for p = 0, (-1)^j * rnomial(rn-j, j) for p = 1.
Rational expected_sigma_theorem12(int r, std::int64_t n, int p, std::int64_t j);

/// Predicted sigma_j for the zeros of R_{rn+p}^(t):
/// (-1)^j * fall((r-1)(rn+p-1) - rj, t) / mu * rnomial(rn+p-j-1, j).
Rational expected_sigma_theorem4(const DerivativeSpec& spec, std::int64_t j);

/// (upsilon, psi): product and sum of the r-th powers of the reference zeros
/// of the derivative polynomial; the j = eta and j = 1 rows of the sigma
/// prediction.
std::pair<Rational, Rational> upsilon_psi(const DerivativeSpec& spec);

/// Zeros of R_{rn} (p = 0) or R_{rn+1} (p = 1): decimates the
/// recurrence-built polynomial and compares every Vieta sigma_j against the
/// prediction, as exact rationals.
VerificationReport verify_theorem12(int r, std::int64_t n, int p);

/// Zeros of R_{rn+p}^(t): same exact comparison on the decimated derivative
/// polynomial, plus the mu = leading-coefficient identity.
VerificationReport verify_theorem4(int r, std::int64_t n, int p, std::int64_t k);

/// n = 1 factorizations R_r = x (x^r + 1)^(r-2) and
/// R_{r+1} = (x^r + 1)^(r-1), checked as exact polynomial identities; every
/// reference zero therefore satisfies x^r = -1.
VerificationReport verify_theorem8(int r);

}  // namespace rstar

#endif
