#include "rstar/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "rstar/detail/compensated.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rstar {

namespace {

// Below this many coefficient products the OpenMP fork costs more than the
// convolution itself.
constexpr std::int64_t kParallelMulThreshold = 64 * 64;

}  // namespace

Polynomial::Polynomial(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::initializer_list<BigInt> low_to_high)
    : coeffs_(low_to_high) {
    trim();
}

Polynomial Polynomial::from_coefficients(std::vector<BigInt> coeffs) {
    Polynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Polynomial Polynomial::monomial(BigInt coefficient, std::int64_t exponent) {
    if (exponent < 0) throw InvalidParams("monomial: negative exponent");
    Polynomial p;
    if (coefficient != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, BigInt(0));
        p.coeffs_.back() = std::move(coefficient);
    }
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::coefficient(std::int64_t exponent) const {
    if (exponent < 0 || exponent > degree()) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(exponent)];
}

const BigInt& Polynomial::leading_coefficient() const {
    if (is_zero()) throw ZeroPolynomial("leading_coefficient of zero polynomial");
    return coeffs_.back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial multiply_serial(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& A = a.coefficients();
    const auto& B = b.coefficients();
    std::vector<BigInt> out(A.size() + B.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i] == 0) continue;
        for (std::size_t j = 0; j < B.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), A[i].get_mpz_t(), B[j].get_mpz_t());
        }
    }
    return Polynomial::from_coefficients(std::move(out));
}

Polynomial multiply_parallel(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& A = a.coefficients();
    const auto& B = b.coefficients();
    const auto na = static_cast<std::int64_t>(A.size());
    const auto nb = static_cast<std::int64_t>(B.size());
    std::vector<BigInt> out(static_cast<std::size_t>(na + nb - 1), BigInt(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t k = 0; k < na + nb - 1; ++k) {
        BigInt& acc = out[static_cast<std::size_t>(k)];
        const std::int64_t lo = std::max<std::int64_t>(0, k - nb + 1);
        const std::int64_t hi = std::min<std::int64_t>(k, na - 1);
        for (std::int64_t i = lo; i <= hi; ++i) {
            mpz_addmul(acc.get_mpz_t(), A[static_cast<std::size_t>(i)].get_mpz_t(),
                       B[static_cast<std::size_t>(k - i)].get_mpz_t());
        }
    }
    return Polynomial::from_coefficients(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::int64_t work = (a.degree() + 1) * (b.degree() + 1);
    if (work >= kParallelMulThreshold) return multiply_parallel(a, b);
    return multiply_serial(a, b);
}

Polynomial operator*(const BigInt& s, const Polynomial& p) {
    if (s == 0) return {};
    std::vector<BigInt> out = p.coefficients();
    for (auto& c : out) c *= s;
    return Polynomial::from_coefficients(std::move(out));
}

Polynomial pow(const Polynomial& base, std::uint64_t exponent) {
    Polynomial result{BigInt(1)};
    Polynomial acc = base;
    while (exponent > 0) {
        if (exponent & 1) result *= acc;
        exponent >>= 1;
        if (exponent) acc *= acc;
    }
    return result;
}

Polynomial shift_up(const Polynomial& p, std::int64_t k) {
    if (k < 0) throw InvalidParams("shift_up: negative shift");
    if (p.is_zero() || k == 0) return p;
    std::vector<BigInt> out(static_cast<std::size_t>(k), BigInt(0));
    out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
    return Polynomial::from_coefficients(std::move(out));
}

BigInt falling_factorial(std::int64_t m, std::int64_t t) {
    if (t < 0) throw InvalidParams("falling_factorial: negative length");
    BigInt result = 1;
    for (std::int64_t i = 0; i < t; ++i) result *= BigInt(m - i);
    return result;
}

Polynomial derivative(const Polynomial& p, std::int64_t t) {
    if (t < 0) throw InvalidParams("derivative: negative order");
    if (t == 0) return p;
    if (t > p.degree()) return {};
    const auto& c = p.coefficients();
    std::vector<BigInt> out(c.size() - static_cast<std::size_t>(t), BigInt(0));
    for (std::int64_t e = t; e <= p.degree(); ++e) {
        out[static_cast<std::size_t>(e - t)] =
            c[static_cast<std::size_t>(e)] * falling_factorial(e, t);
    }
    return Polynomial::from_coefficients(std::move(out));
}

BigInt content(const Polynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return {};
    BigInt g = content(p);
    if (sgn(p.leading_coefficient()) < 0) g = -g;
    std::vector<BigInt> out = p.coefficients();
    for (auto& c : out) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        c = std::move(q);
    }
    return Polynomial::from_coefficients(std::move(out));
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ZeroPolynomial("divide_exact: zero divisor");
    if (a.is_zero()) return Polynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    const BigInt& lb = b.leading_coefficient();
    std::vector<BigInt> rem = a.coefficients();
    std::vector<BigInt> quot(
        static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    for (std::int64_t k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt& top = rem[static_cast<std::size_t>(k + b.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        BigInt q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::int64_t i = 0; i <= b.degree(); ++i) {
            mpz_submul(rem[static_cast<std::size_t>(k + i)].get_mpz_t(),
                       q.get_mpz_t(),
                       b.coefficients()[static_cast<std::size_t>(i)].get_mpz_t());
        }
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (const auto& c : rem) {
        if (c != 0) return std::nullopt;
    }
    return Polynomial::from_coefficients(std::move(quot));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed by repeated leading-term
// cancellation; stays in integer coefficients throughout.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
    const BigInt& lb = b.leading_coefficient();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const std::int64_t shift = a.degree() - b.degree();
        Polynomial top = Polynomial::monomial(a.leading_coefficient(), shift);
        a = lb * a - top * b;
    }
    return a;
}

}  // namespace

Polynomial polynomial_gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return sgn(b.leading_coefficient()) < 0 ? -b : b;
    if (b.is_zero()) return sgn(a.leading_coefficient()) < 0 ? -a : a;
    BigInt shared_content;
    mpz_gcd(shared_content.get_mpz_t(), content(a).get_mpz_t(),
            content(b).get_mpz_t());
    Polynomial u = primitive_part(a);
    Polynomial v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Polynomial r = pseudo_remainder(u, v);
        u = std::move(v);
        v = primitive_part(r);
    }
    return shared_content * u;
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("square_free_part of zero polynomial");
    Polynomial f = primitive_part(p);
    if (f.degree() == 0) return Polynomial{BigInt(1)};
    Polynomial g = polynomial_gcd(f, derivative(f));
    auto s = divide_exact(f, g);
    return primitive_part(*s);
}

std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("square_free_decomposition of zero polynomial");
    std::vector<SquareFreeFactor> out;
    Polynomial f = primitive_part(p);
    if (f.degree() < 1) return out;
    Polynomial fp = derivative(f);
    Polynomial a0 = polynomial_gcd(f, fp);
    Polynomial b = *divide_exact(f, a0);
    Polynomial d = *divide_exact(fp, a0) - derivative(b);
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial a = polynomial_gcd(b, d);
        if (a.degree() > 0) out.push_back({a, i});
        b = *divide_exact(b, a);
        d = *divide_exact(d, a) - derivative(b);
    }
    return out;
}

DecimatedForm decimate(const Polynomial& p, int modulus) {
    if (modulus < 2) throw InvalidParams("decimate: modulus must be >= 2");
    DecimatedForm form;
    form.modulus = modulus;
    if (p.is_zero()) return form;
    std::int64_t shift = -1;
    for (std::int64_t e = 0; e <= p.degree(); ++e) {
        if (p.coefficient(e) == 0) continue;
        const std::int64_t res = e % modulus;
        if (shift < 0) {
            shift = res;
        } else if (res != shift) {
            std::ostringstream msg;
            msg << "decimate: exponents " << e << " and " << shift
                << " differ mod " << modulus;
            throw MixedResidueError(msg.str());
        }
    }
    form.shift = shift;
    std::vector<BigInt> base(
        static_cast<std::size_t>((p.degree() - shift) / modulus) + 1, BigInt(0));
    for (std::int64_t e = shift; e <= p.degree(); e += modulus) {
        base[static_cast<std::size_t>((e - shift) / modulus)] = p.coefficient(e);
    }
    form.base = Polynomial::from_coefficients(std::move(base));
    return form;
}

Polynomial reconstruct(const DecimatedForm& d) {
    if (d.base.is_zero()) return {};
    std::vector<BigInt> out(
        static_cast<std::size_t>(d.shift + d.base.degree() * d.modulus) + 1,
        BigInt(0));
    for (std::int64_t i = 0; i <= d.base.degree(); ++i) {
        out[static_cast<std::size_t>(d.shift + i * d.modulus)] =
            d.base.coefficient(i);
    }
    return Polynomial::from_coefficients(std::move(out));
}

std::complex<double> eval(const Polynomial& p, std::complex<double> z) {
    if (p.is_zero()) return {0.0, 0.0};
    const BigInt& lc = p.leading_coefficient();
    std::vector<double> monic(p.coefficients().size());
    for (std::size_t i = 0; i < monic.size(); ++i) {
        Rational q(p.coefficients()[i], lc);
        q.canonicalize();
        monic[i] = q.get_d();
    }
    const std::complex<double> value = detail::horner_compensated(monic, z);
    return value * lc.get_d();
}

Rational eval_exact(const Polynomial& p, const Rational& x) {
    Rational acc = 0;
    for (auto i = p.degree(); i >= 0; --i) {
        acc = acc * x + Rational(p.coefficient(i));
    }
    return acc;
}

std::string to_human(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t e = p.degree(); e >= 0; --e) {
        const BigInt c = p.coefficient(e);
        if (c == 0) continue;
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        BigInt mag = abs(c);
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e >= 1) {
            os << "x";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string to_json_coefficients(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
    return arr.dump();
}

Polynomial from_json_coefficients(const std::string& json_text) {
    nlohmann::json arr = nlohmann::json::parse(json_text);
    if (!arr.is_array()) throw InvalidParams("coefficient JSON must be an array");
    std::vector<BigInt> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& item : arr) {
        if (item.is_string()) {
            coeffs.emplace_back(item.get<std::string>());
        } else if (item.is_number_integer()) {
            coeffs.emplace_back(static_cast<long>(item.get<std::int64_t>()));
        } else {
            throw InvalidParams("coefficient entries must be decimal strings");
        }
    }
    return Polynomial::from_coefficients(std::move(coeffs));
}

}  // namespace rstar
