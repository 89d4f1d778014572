#include "rstar/rbonacci.hpp"

#include <map>
#include <sstream>

namespace rstar {

namespace {

void check_params(const RBonacciParams& params) {
    if (params.r < 2) throw InvalidParams("order r must be >= 2");
    if (params.n < 1) throw InvalidParams("index n must be >= 1");
}

}  // namespace

RnomialTable::RnomialTable(int r) : r_(r) {
    if (r < 2) throw InvalidParams("RnomialTable: order r must be >= 2");
    rows_.push_back({BigInt(1)});
}

const std::vector<BigInt>& RnomialTable::row(std::int64_t n) const {
    if (n < 0) throw InvalidParams("RnomialTable::row: n must be >= 0");
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<std::int64_t>(rows_.size()) <= n) {
        const auto& prev = rows_.back();
        const std::int64_t m = static_cast<std::int64_t>(rows_.size());
        std::vector<BigInt> next(static_cast<std::size_t>(m * (r_ - 1)) + 1,
                                 BigInt(0));
        // convolve the previous row with (1, 1, ..., 1) of length r
        for (std::size_t i = 0; i < prev.size(); ++i) {
            for (int d = 0; d < r_; ++d) next[i + static_cast<std::size_t>(d)] += prev[i];
        }
        rows_.push_back(std::move(next));
    }
    return rows_[static_cast<std::size_t>(n)];
}

BigInt RnomialTable::coefficient(std::int64_t n, std::int64_t j) const {
    if (n < 0) throw InvalidParams("rnomial: n must be >= 0");
    if (j < 0 || j > n * (r_ - 1)) return BigInt(0);
    return row(n)[static_cast<std::size_t>(j)];
}

BigInt rnomial(int r, std::int64_t n, std::int64_t j) {
    if (r < 2) throw InvalidParams("rnomial: order r must be >= 2");
    static std::mutex tables_mutex;
    static std::map<int, RnomialTable> tables;
    RnomialTable* table = nullptr;
    {
        std::lock_guard<std::mutex> lock(tables_mutex);
        table = &tables.try_emplace(r, r).first->second;
    }
    return table->coefficient(n, j);
}

Polynomial build_recurrence(const RBonacciParams& params) {
    check_params(params);
    const int r = params.r;
    // window holds [R_m, ..., R_{m+r-1}], starting at m = 2-r so that the
    // last slot is R_1 = 1 and everything before it is the zero initial value
    std::deque<Polynomial> window(static_cast<std::size_t>(r));
    window.back() = Polynomial{BigInt(1)};
    std::int64_t top_index = 1;  // sequence index of window.back()
    while (top_index < params.n) {
        Polynomial next;
        for (int i = 0; i < r; ++i) {
            next += shift_up(window[static_cast<std::size_t>(i)], i);
        }
        window.pop_front();
        window.push_back(std::move(next));
        ++top_index;
    }
    return window.back();
}

Polynomial build_closed_form(const RBonacciParams& params) {
    check_params(params);
    const int r = params.r;
    const std::int64_t n = params.n;
    const std::int64_t deg = static_cast<std::int64_t>(r - 1) * (n - 1);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(deg) + 1, BigInt(0));
    for (std::int64_t j = 0; j * r <= deg; ++j) {
        coeffs[static_cast<std::size_t>(deg - r * j)] = rnomial(r, n - j - 1, j);
    }
    return Polynomial::from_coefficients(std::move(coeffs));
}

Polynomial build_derivative_closed_form(const RBonacciParams& params,
                                        std::int64_t t) {
    check_params(params);
    if (t < 0) throw InvalidParams("derivative order t must be >= 0");
    const int r = params.r;
    const std::int64_t n = params.n;
    const std::int64_t deg = static_cast<std::int64_t>(r - 1) * (n - 1);
    if (t > deg) return {};
    std::vector<BigInt> coeffs(static_cast<std::size_t>(deg - t) + 1, BigInt(0));
    for (std::int64_t j = 0; j * r <= deg; ++j) {
        const std::int64_t e = deg - r * j;
        if (e < t) break;  // differentiated away
        coeffs[static_cast<std::size_t>(e - t)] =
            rnomial(r, n - j - 1, j) * falling_factorial(e, t);
    }
    return Polynomial::from_coefficients(std::move(coeffs));
}

Polynomial lucas_polynomial(std::int64_t n) {
    if (n < 0) throw InvalidParams("lucas_polynomial: n must be >= 0");
    Polynomial prev{BigInt(2)};
    if (n == 0) return prev;
    Polynomial curr = Polynomial::monomial(BigInt(1), 1);
    for (std::int64_t m = 1; m < n; ++m) {
        Polynomial next = shift_up(curr, 1) + prev;
        prev = std::move(curr);
        curr = std::move(next);
    }
    return curr;
}

VerificationReport lucas_identity_check(std::int64_t n, std::int64_t t) {
    if (n < 1) throw InvalidParams("lucas_identity_check: n must be >= 1");
    if (t < 1) throw InvalidParams("lucas_identity_check: t must be >= 1");
    const Polynomial lhs = derivative(lucas_polynomial(n), t);
    const Polynomial rhs =
        BigInt(n) * derivative(build_recurrence({2, n}), t - 1);
    VerificationReport report;
    report.theorem = "lucas";
    report.params = {{"n", std::to_string(n)}, {"t", std::to_string(t)}};
    report.rows.push_back(
        {0, to_human(rhs), to_human(lhs), lhs == rhs});
    report.pass = lhs == rhs;
    std::ostringstream summary;
    summary << "L_" << n << "^(" << t << ") == " << n << "*F_" << n << "^("
            << (t - 1) << "): " << (report.pass ? "pass" : "FAIL");
    report.summary = summary.str();
    return report;
}

}  // namespace rstar
