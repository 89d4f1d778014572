#ifndef RSTAR_DETAIL_COMPENSATED_HPP
#define RSTAR_DETAIL_COMPENSATED_HPP

#include <cmath>
#include <complex>
#include <span>

namespace rstar::detail {

/// Unevaluated double-double sum hi + lo with |lo| <= ulp(hi)/2.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;
};

inline DoubleDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline DoubleDouble dd_normalize(double hi, double lo) {
    double s = hi + lo;
    double err = lo - (s - hi);
    return {s, err};
}

inline DoubleDouble dd_add(const DoubleDouble& a, const DoubleDouble& b) {
    DoubleDouble s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return dd_normalize(s.hi, lo);
}

inline DoubleDouble dd_add(const DoubleDouble& a, double b) {
    DoubleDouble s = two_sum(a.hi, b);
    double lo = s.lo + a.lo;
    return dd_normalize(s.hi, lo);
}

inline DoubleDouble dd_mul(const DoubleDouble& a, double b) {
    DoubleDouble p = two_prod(a.hi, b);
    double lo = p.lo + a.lo * b;
    return dd_normalize(p.hi, lo);
}

inline DoubleDouble dd_sub(const DoubleDouble& a, const DoubleDouble& b) {
    return dd_add(a, DoubleDouble{-b.hi, -b.lo});
}

/// Complex value carried as a pair of double-double components.
struct ComplexDD {
    DoubleDouble re;
    DoubleDouble im;

    std::complex<double> to_complex() const {
        return {re.hi + re.lo, im.hi + im.lo};
    }
};

inline ComplexDD cdd_mul(const ComplexDD& a, std::complex<double> z) {
    // (ar + i ai)(zr + i zi), each real product kept compensated
    DoubleDouble rr = dd_mul(a.re, z.real());
    DoubleDouble ii = dd_mul(a.im, z.imag());
    DoubleDouble ri = dd_mul(a.re, z.imag());
    DoubleDouble ir = dd_mul(a.im, z.real());
    return {dd_sub(rr, ii), dd_add(ri, ir)};
}

inline ComplexDD cdd_add_real(const ComplexDD& a, double b) {
    return {dd_add(a.re, b), a.im};
}

/// Compensated complex Horner evaluation of sum coeffs[i] * z^i.
inline std::complex<double> horner_compensated(std::span<const double> coeffs,
                                               std::complex<double> z) {
    if (coeffs.empty()) return {0.0, 0.0};
    ComplexDD acc{{coeffs.back(), 0.0}, {0.0, 0.0}};
    for (auto i = static_cast<std::ptrdiff_t>(coeffs.size()) - 2; i >= 0; --i) {
        acc = cdd_add_real(cdd_mul(acc, z), coeffs[static_cast<std::size_t>(i)]);
    }
    return acc.to_complex();
}

/// Plain complex Horner; cheap path for solver sweeps.
inline std::complex<double> horner(std::span<const double> coeffs,
                                   std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto i = static_cast<std::ptrdiff_t>(coeffs.size()) - 1; i >= 0; --i) {
        acc = acc * z + coeffs[static_cast<std::size_t>(i)];
    }
    return acc;
}

}  // namespace rstar::detail

#endif
