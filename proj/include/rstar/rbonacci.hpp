#ifndef RSTAR_RBONACCI_HPP
#define RSTAR_RBONACCI_HPP

#include <cstdint>
#include <deque>
#include <mutex>
#include <vector>

#include "rstar/polynomial.hpp"
#include "rstar/report.hpp"

namespace rstar {

/// Order r >= 2 of the recursion and sequence index n >= 1.
struct RBonacciParams {
    int r = 2;
    std::int64_t n = 1;
};

/// Memoized coefficient rows of (1 + x + ... + x^(r-1))^n. Row n has
/// n(r-1)+1 entries, sums to r^n and is palindromic. Rows are built once
/// under a lock and immutable afterwards, so returned references stay valid
/// across concurrent use.
class RnomialTable {
public:
    explicit RnomialTable(int r);

    int order() const noexcept { return r_; }
    const std::vector<BigInt>& row(std::int64_t n) const;
    /// Coefficient of x^j in row n; 0 outside [0, n(r-1)].
    BigInt coefficient(std::int64_t n, std::int64_t j) const;

private:
    int r_;
    mutable std::mutex mutex_;
    mutable std::deque<std::vector<BigInt>> rows_;
};

/// Coefficient of x^j in (1 + x + ... + x^(r-1))^n, via a shared per-r table.
BigInt rnomial(int r, std::int64_t n, std::int64_t j);

/// R_n(x) by iterating the order-r recursion from the initial values,
/// keeping only the last r polynomials.
Polynomial build_recurrence(const RBonacciParams& params);

/// R_n(x) assembled directly from its r-nomial coefficient expansion; equal
/// to build_recurrence for every valid parameter pair.
Polynomial build_closed_form(const RBonacciParams& params);

/// t-th derivative of R_n assembled term by term with falling-factorial
/// multipliers; equal to derivative(build_closed_form(params), t).
Polynomial build_derivative_closed_form(const RBonacciParams& params, std::int64_t t);

/// Lucas polynomials: L_0 = 2, L_1 = x, L_{m+1} = x L_m + L_{m-1}.
Polynomial lucas_polynomial(std::int64_t n);

/// Checks L_n^(t) = n * F_n^(t-1) exactly; the report carries both sides.
VerificationReport lucas_identity_check(std::int64_t n, std::int64_t t);

}  // namespace rstar

#endif
