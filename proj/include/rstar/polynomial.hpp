#ifndef RSTAR_POLYNOMIAL_HPP
#define RSTAR_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rstar/errors.hpp"

namespace rstar {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with exact arbitrary-precision integer
/// coefficients. Index i of the coefficient vector holds the coefficient of
/// x^i; the stored form is always trimmed, so the leading coefficient is
/// nonzero and the zero polynomial is the empty vector (degree() == -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(BigInt constant);
    Polynomial(std::initializer_list<BigInt> low_to_high);

    /// Takes coefficients indexed by exponent; trailing zeros are trimmed.
    static Polynomial from_coefficients(std::vector<BigInt> coeffs);
    static Polynomial monomial(BigInt coefficient, std::int64_t exponent);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 stands in for the degree of the zero polynomial.
    std::int64_t degree() const noexcept {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    BigInt coefficient(std::int64_t exponent) const;
    const BigInt& leading_coefficient() const;
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<BigInt> coeffs_;

    void trim();
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const BigInt& s, const Polynomial& p);

/// Exact convolution product computed in one thread; reference kernel for the
/// OpenMP path.
Polynomial multiply_serial(const Polynomial& a, const Polynomial& b);
/// Same convolution with the output coefficients computed in parallel.
/// Integer arithmetic is exact, so the result is identical to the serial
/// kernel coefficient for coefficient.
Polynomial multiply_parallel(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& base, std::uint64_t exponent);

/// Multiplies by x^k.
Polynomial shift_up(const Polynomial& p, std::int64_t k);

/// t-th formal derivative; the zero polynomial once t exceeds the degree.
Polynomial derivative(const Polynomial& p, std::int64_t t = 1);

/// Falling factorial m(m-1)...(m-t+1) as an exact product; 1 for t == 0.
BigInt falling_factorial(std::int64_t m, std::int64_t t);

/// gcd of all coefficients (non-negative); 0 for the zero polynomial.
BigInt content(const Polynomial& p);
/// p divided by its content, sign-normalized to a positive leading
/// coefficient. Zero stays zero.
Polynomial primitive_part(const Polynomial& p);

/// Exact division; nullopt when b does not divide a over the integers.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Polynomial gcd over the integers via a primitive pseudo-remainder
/// sequence: gcd of contents times the primitive gcd, positive leading
/// coefficient. Entirely exact, no floating point.
Polynomial polynomial_gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'): same distinct roots, all simple; primitive with positive
/// leading coefficient.
Polynomial square_free_part(const Polynomial& p);

/// Yun decomposition p = content * prod factor_i ^ multiplicity_i with the
/// factors primitive, square-free and pairwise coprime. Constant factors are
/// dropped.
struct SquareFreeFactor {
    Polynomial factor;
    int multiplicity;
};
std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p);

/// The rewriting p(x) = x^shift * base(x^modulus). Exists iff all nonzero
/// exponents of p share one residue class mod modulus.
struct DecimatedForm {
    std::int64_t shift = 0;
    Polynomial base;
    int modulus = 2;
};
DecimatedForm decimate(const Polynomial& p, int modulus);
Polynomial reconstruct(const DecimatedForm& d);

/// Floating evaluation: the coefficients are normalized by the leading
/// coefficient in exact rationals first, so inputs whose coefficients exceed
/// the double mantissa keep their root locations. The Horner loop runs in
/// compensated (double-double) arithmetic; relative error <= 1e-12 for
/// degree <= 200 away from catastrophic cancellation.
std::complex<double> eval(const Polynomial& p, std::complex<double> z);

/// Exact rational evaluation at a rational point (no normalization).
Rational eval_exact(const Polynomial& p, const Rational& x);

/// "c_d x^d + ... + c_0" with exact decimal integers.
std::string to_human(const Polynomial& p);
/// JSON array of decimal coefficient strings, index = exponent. Strings, not
/// numbers: coefficients routinely exceed 53 bits.
std::string to_json_coefficients(const Polynomial& p);
Polynomial from_json_coefficients(const std::string& json_text);

}  // namespace rstar

#endif
