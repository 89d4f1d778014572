#include "rstar/vieta.hpp"

#include <sstream>

namespace rstar {

namespace {

Rational make_canonical(BigInt num, BigInt den) {
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

}  // namespace

DerivativeSpec derivative_spec(int r, std::int64_t n, int p, std::int64_t k) {
    if (r < 2) throw InvalidParams("derivative_spec: r must be >= 2");
    if (n < 1) throw InvalidParams("derivative_spec: n must be >= 1");
    if (p < 0 || p >= r) throw InvalidParams("derivative_spec: p must be in [0, r-1]");
    if (k < 1) throw InvalidParams("derivative_spec: k must be >= 1");
    DerivativeSpec spec;
    spec.r = r;
    spec.n = n;
    spec.p = p;
    spec.k = k;
    spec.t = static_cast<std::int64_t>(r) * k -
             static_cast<std::int64_t>(1 - p) * (r - 1);
    spec.eta = static_cast<std::int64_t>(r - 1) * n - k;
    if (spec.t < 1 || spec.eta < 1) {
        std::ostringstream msg;
        msg << "no derivative statement applies: t=" << spec.t
            << " eta=" << spec.eta << " (need both >= 1)";
        throw InvalidSpec(msg.str());
    }
    spec.mu = falling_factorial(spec.base_degree(), spec.t);
    return spec;
}

std::vector<Rational> elementary_symmetric_from_poly(const Polynomial& q) {
    if (q.is_zero()) throw ZeroPolynomial("elementary_symmetric_from_poly: zero polynomial");
    const std::int64_t d = q.degree();
    const BigInt& lead = q.leading_coefficient();
    std::vector<Rational> sigma;
    sigma.reserve(static_cast<std::size_t>(d) + 1);
    for (std::int64_t j = 0; j <= d; ++j) {
        BigInt num = q.coefficient(d - j);
        if (j % 2 != 0) num = -num;
        sigma.push_back(make_canonical(std::move(num), lead));
    }
    return sigma;
}

Rational expected_sigma_theorem12(int r, std::int64_t n, int p, std::int64_t j) {
    if (r < 2) throw InvalidParams("expected_sigma_theorem12: r must be >= 2");
    if (n < 1) throw InvalidParams("expected_sigma_theorem12: n must be >= 1");
    if (p != 0 && p != 1)
        throw InvalidParams("expected_sigma_theorem12: p must be 0 or 1");
    const std::int64_t eta = static_cast<std::int64_t>(r - 1) * n - 1 + p;
    if (j < 0 || j > eta) {
        std::ostringstream msg;
        msg << "sigma index " << j << " outside [0, " << eta << "]";
        throw IndexOutOfRange(msg.str());
    }
    BigInt value = rnomial(r, static_cast<std::int64_t>(r) * n - j - 1 + p, j);
    if (j % 2 != 0) value = -value;
    return Rational(value);
}

Rational expected_sigma_theorem4(const DerivativeSpec& spec, std::int64_t j) {
    if (j < 0 || j > spec.eta) {
        std::ostringstream msg;
        msg << "sigma index " << j << " outside [0, " << spec.eta << "]";
        throw IndexOutOfRange(msg.str());
    }
    BigInt num = falling_factorial(spec.base_degree() - spec.r * j, spec.t) *
                 rnomial(spec.r, spec.poly_index() - j - 1, j);
    if (j % 2 != 0) num = -num;
    return make_canonical(std::move(num), spec.mu);
}

std::pair<Rational, Rational> upsilon_psi(const DerivativeSpec& spec) {
    return {expected_sigma_theorem4(spec, spec.eta),
            expected_sigma_theorem4(spec, 1)};
}

namespace {

void append_sigma_rows(VerificationReport& report,
                       const std::vector<Rational>& computed,
                       const std::vector<Rational>& expected) {
    bool all = computed.size() == expected.size();
    for (std::size_t j = 0; j < expected.size(); ++j) {
        ReportRow row;
        row.index = static_cast<std::int64_t>(j);
        row.expected = expected[j].get_str();
        row.computed = j < computed.size() ? computed[j].get_str() : "missing";
        row.pass = j < computed.size() && computed[j] == expected[j];
        all = all && row.pass;
        report.rows.push_back(std::move(row));
    }
    report.pass = all;
}

}  // namespace

VerificationReport verify_theorem12(int r, std::int64_t n, int p) {
    if (p != 0 && p != 1)
        throw InvalidParams("verify_theorem12: p must be 0 or 1");
    const std::int64_t index = static_cast<std::int64_t>(r) * n + p;
    const Polynomial poly = build_recurrence({r, index});
    const DecimatedForm form = decimate(poly, r);
    const std::int64_t eta = static_cast<std::int64_t>(r - 1) * n - 1 + p;

    VerificationReport report;
    report.theorem = p == 0 ? "theorem1" : "theorem2";
    report.params = {{"r", std::to_string(r)},
                     {"n", std::to_string(n)},
                     {"poly_index", std::to_string(index)}};

    std::vector<Rational> expected;
    expected.reserve(static_cast<std::size_t>(eta) + 1);
    for (std::int64_t j = 0; j <= eta; ++j) {
        expected.push_back(expected_sigma_theorem12(r, n, p, j));
    }
    append_sigma_rows(report, elementary_symmetric_from_poly(form.base), expected);

    const std::int64_t want_shift = p == 0 ? 1 : 0;
    if (form.shift != want_shift) report.pass = false;

    std::ostringstream summary;
    summary << report.theorem << " r=" << r << " n=" << n << ": sigma_0.."
            << eta << " of the r-th powers of the zeros of R_" << index << " "
            << (report.pass ? "match exactly" : "MISMATCH");
    report.summary = summary.str();
    return report;
}

VerificationReport verify_theorem4(int r, std::int64_t n, int p, std::int64_t k) {
    const DerivativeSpec spec = derivative_spec(r, n, p, k);
    const Polynomial closed =
        build_derivative_closed_form({r, spec.poly_index()}, spec.t);
    const Polynomial formal =
        derivative(build_recurrence({r, spec.poly_index()}), spec.t);
    const DecimatedForm form = decimate(closed, r);

    VerificationReport report;
    report.theorem = "theorem4";
    report.params = {{"r", std::to_string(r)},     {"n", std::to_string(n)},
                     {"p", std::to_string(p)},     {"k", std::to_string(k)},
                     {"t", std::to_string(spec.t)},
                     {"eta", std::to_string(spec.eta)},
                     {"mu", spec.mu.get_str()}};

    std::vector<Rational> expected;
    expected.reserve(static_cast<std::size_t>(spec.eta) + 1);
    for (std::int64_t j = 0; j <= spec.eta; ++j) {
        expected.push_back(expected_sigma_theorem4(spec, j));
    }
    append_sigma_rows(report, elementary_symmetric_from_poly(form.base), expected);

    const bool structural = closed == formal && form.shift == 0 &&
                            form.base.degree() == spec.eta &&
                            form.base.leading_coefficient() == spec.mu;
    if (!structural) report.pass = false;

    std::ostringstream summary;
    summary << "theorem4 r=" << r << " n=" << n << " p=" << p << " k=" << k
            << " (t=" << spec.t << ", eta=" << spec.eta << "): "
            << (report.pass ? "sigma rows and leading factor match exactly"
                            : "MISMATCH");
    report.summary = summary.str();
    return report;
}

VerificationReport verify_theorem8(int r) {
    if (r < 2) throw InvalidParams("verify_theorem8: r must be >= 2");
    const Polynomial unit =
        Polynomial::monomial(BigInt(1), r) + Polynomial{BigInt(1)};  // x^r + 1
    const Polynomial even_target =
        shift_up(pow(unit, static_cast<std::uint64_t>(r - 2)), 1);
    const Polynomial odd_target = pow(unit, static_cast<std::uint64_t>(r - 1));
    const Polynomial even_built = build_recurrence({r, r});
    const Polynomial odd_built = build_recurrence({r, static_cast<std::int64_t>(r) + 1});

    VerificationReport report;
    report.theorem = "theorem8";
    report.params = {{"r", std::to_string(r)}};
    report.rows.push_back({0, to_human(even_target), to_human(even_built),
                           even_built == even_target});
    report.rows.push_back({1, to_human(odd_target), to_human(odd_built),
                           odd_built == odd_target});
    report.pass = report.rows[0].pass && report.rows[1].pass;
    std::ostringstream summary;
    summary << "theorem8 r=" << r << ": R_" << r << " = x(x^" << r
            << "+1)^" << (r - 2) << " and R_" << (r + 1) << " = (x^" << r
            << "+1)^" << (r - 1)
            << (report.pass ? " hold exactly; reference zeros satisfy x^r = -1"
                            : " FAIL");
    report.summary = summary.str();
    return report;
}

}  // namespace rstar
