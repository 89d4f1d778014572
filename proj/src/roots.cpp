#include "rstar/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "rstar/detail/compensated.hpp"
#include "rstar/rbonacci.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rstar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// golden angle, an irrational slice of the circle: no two start points end up
// related by a rotation of 2*pi/r, which would stall a symmetric iteration
constexpr double kGoldenAngle = 2.399963229728653;
constexpr int kMaxSweeps = 600;
constexpr double kSweepTol = 1e-14;
constexpr int kPolishSteps = 3;
constexpr std::size_t kParallelRootThreshold = 48;
constexpr double kModulusTol = 1e-8;   // relative, orbit clustering
constexpr double kAngleTol = 1e-8;     // absolute, orbit clustering

double wrap_nonnegative(double x, double period) {
    double y = std::fmod(x, period);
    if (y < 0) y += period;
    return y;
}

std::vector<double> monic_double_coefficients(const Polynomial& p) {
    const BigInt& lead = p.leading_coefficient();
    std::vector<double> out(p.coefficients().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational q(p.coefficients()[i], lead);
        q.canonicalize();
        out[i] = q.get_d();
    }
    return out;
}

// Start circle: min of the 1 + max|c| bound and 2 max |c_{d-k}|^(1/k); both
// enclose every root of the monic input.
double inclusion_radius(const std::vector<double>& monic) {
    const std::size_t d = monic.size() - 1;
    double largest = 0.0;
    double fujiwara = 0.0;
    for (std::size_t k = 1; k <= d; ++k) {
        const double a = std::fabs(monic[d - k]);
        largest = std::max(largest, a);
        if (a > 0) {
            fujiwara = std::max(fujiwara, std::pow(a, 1.0 / static_cast<double>(k)));
        }
    }
    const double bound = std::min(1.0 + largest, 2.0 * fujiwara);
    return std::max(bound, 1e-6);
}

std::complex<double> aberth_update(const std::vector<double>& monic,
                                   const std::vector<double>& deriv,
                                   const std::vector<std::complex<double>>& z,
                                   std::size_t i) {
    const std::complex<double> zi = z[i];
    const std::complex<double> pv = detail::horner(monic, zi);
    if (pv == std::complex<double>(0.0, 0.0)) return zi;
    const std::complex<double> dv = detail::horner(deriv, zi);
    std::complex<double> newton;
    if (dv == std::complex<double>(0.0, 0.0)) {
        // critical point: deterministic kick off the stationary value
        newton = std::complex<double>(1e-3 * (1.0 + std::abs(zi)), 1e-3);
    } else {
        newton = pv / dv;
    }
    std::complex<double> repulsion = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        const std::complex<double> diff = zi - z[j];
        if (diff != std::complex<double>(0.0, 0.0)) repulsion += 1.0 / diff;
    }
    const std::complex<double> denom = 1.0 - newton * repulsion;
    std::complex<double> step =
        denom == std::complex<double>(0.0, 0.0) ? newton : newton / denom;
    const double cap = 0.8 * (1.0 + std::abs(zi));
    const double mag = std::abs(step);
    if (mag > cap) step *= cap / mag;
    return zi - step;
}

// One Jacobi sweep: every update reads the previous iterate only, so the
// serial and parallel paths produce identical values.
double sweep(const std::vector<double>& monic, const std::vector<double>& deriv,
             const std::vector<std::complex<double>>& z,
             std::vector<std::complex<double>>& next, bool parallel) {
    const auto m = static_cast<std::int64_t>(z.size());
    double max_rel = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : max_rel) if (parallel)
#endif
    for (std::int64_t i = 0; i < m; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        next[idx] = aberth_update(monic, deriv, z, idx);
        const double rel = std::abs(next[idx] - z[idx]) / (1.0 + std::abs(z[idx]));
        max_rel = std::max(max_rel, rel);
    }
#ifndef _OPENMP
    (void)parallel;
#endif
    return max_rel;
}

void polish(const std::vector<double>& monic, const std::vector<double>& deriv,
            std::vector<std::complex<double>>& roots, bool parallel) {
    const auto m = static_cast<std::int64_t>(roots.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t i = 0; i < m; ++i) {
        std::complex<double> z = roots[static_cast<std::size_t>(i)];
        for (int step = 0; step < kPolishSteps; ++step) {
            const std::complex<double> pv = detail::horner_compensated(monic, z);
            const std::complex<double> dv = detail::horner(deriv, z);
            if (dv == std::complex<double>(0.0, 0.0)) break;
            z -= pv / dv;
        }
        roots[static_cast<std::size_t>(i)] = z;
    }
#ifndef _OPENMP
    (void)parallel;
#endif
}

bool complex_less(const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

std::vector<std::complex<double>> solve_square_free(const Polynomial& p,
                                                    SweepKernel kernel) {
    if (p.is_zero() || p.degree() < 1) {
        throw InvalidParams("solve_square_free: degree must be >= 1");
    }
    const std::vector<double> monic = monic_double_coefficients(p);
    const std::size_t m = monic.size() - 1;

    std::vector<std::complex<double>> roots(m);
    if (m == 1) {
        roots[0] = {-monic[0], 0.0};
        return roots;
    }
    if (m == 2) {
        // x^2 + bx + c with the large root taken from the non-cancelling
        // branch and the other from the product
        const double b = monic[1];
        const double c = monic[0];
        const double disc = b * b - 4.0 * c;
        if (disc >= 0) {
            const double s = std::sqrt(disc);
            const double big = (b >= 0) ? (-b - s) / 2.0 : (-b + s) / 2.0;
            const double small = big != 0.0 ? c / big : 0.0;
            roots[0] = {big, 0.0};
            roots[1] = {small, 0.0};
        } else {
            const double s = std::sqrt(-disc) / 2.0;
            roots[0] = {-b / 2.0, s};
            roots[1] = {-b / 2.0, -s};
        }
        std::sort(roots.begin(), roots.end(), complex_less);
        return roots;
    }

    bool parallel = false;
#ifdef _OPENMP
    parallel = kernel == SweepKernel::Parallel ||
               (kernel == SweepKernel::Auto && m >= kParallelRootThreshold);
#else
    (void)kernel;
#endif

    std::vector<double> deriv(m);
    for (std::size_t i = 0; i < m; ++i) {
        deriv[i] = monic[i + 1] * static_cast<double>(i + 1);
    }

    const double radius = inclusion_radius(monic);
    for (std::size_t i = 0; i < m; ++i) {
        const double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(m) +
                             kGoldenAngle * static_cast<double>(i);
        roots[i] = std::polar(radius, theta);
    }

    std::vector<std::complex<double>> next(m);
    for (int it = 0; it < kMaxSweeps; ++it) {
        const double max_rel = sweep(monic, deriv, roots, next, parallel);
        roots.swap(next);
        if (max_rel < kSweepTol) break;
    }
    polish(monic, deriv, roots, parallel);
    std::sort(roots.begin(), roots.end(), complex_less);
    return roots;
}

double exact_normalized_residual(const Polynomial& p, std::complex<double> z) {
    if (p.is_zero()) throw ZeroPolynomial("exact_normalized_residual: zero polynomial");
    const Rational zr(z.real());
    const Rational zi(z.imag());
    Rational acc_re = 0;
    Rational acc_im = 0;
    for (std::int64_t e = p.degree(); e >= 0; --e) {
        const Rational re = acc_re * zr - acc_im * zi + Rational(p.coefficient(e));
        const Rational im = acc_re * zi + acc_im * zr;
        acc_re = re;
        acc_im = im;
    }
    const Rational lead(p.leading_coefficient());
    const Rational value_sq = (acc_re * acc_re + acc_im * acc_im) / (lead * lead);
    const Rational modulus_sq = zr * zr + zi * zi;
    Rational scale = 1;
    if (modulus_sq > 1) {
        Rational base = modulus_sq;
        auto e = static_cast<std::uint64_t>(p.degree());
        while (e > 0) {
            if (e & 1) scale *= base;
            e >>= 1;
            if (e) base *= base;
        }
    }
    return std::sqrt(Rational(value_sq / scale).get_d());
}

namespace {

void assign_orbits(ComplexRootSet& set) {
    const double angle_step = kTwoPi / set.star_modulus;
    const std::size_t count = set.roots.size();
    std::vector<int> orbit(count, -1);
    int next_id = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (orbit[i] >= 0) continue;
        orbit[i] = next_id;
        const std::complex<double> zi = set.roots[i].value;
        if (zi != std::complex<double>(0.0, 0.0)) {
            const double mod_i = std::abs(zi);
            const double arg_i = std::arg(zi);
            for (std::size_t j = i + 1; j < count; ++j) {
                if (orbit[j] >= 0) continue;
                const std::complex<double> zj = set.roots[j].value;
                if (zj == std::complex<double>(0.0, 0.0)) continue;
                const double mod_j = std::abs(zj);
                if (std::fabs(mod_i - mod_j) > kModulusTol * std::max(mod_i, mod_j))
                    continue;
                const double d =
                    wrap_nonnegative(std::arg(zj) - arg_i, angle_step);
                if (d <= kAngleTol || angle_step - d <= kAngleTol) {
                    orbit[j] = next_id;
                }
            }
        }
        ++next_id;
    }
    for (std::size_t i = 0; i < count; ++i) set.roots[i].orbit_id = orbit[i];
    set.orbit_count = next_id;
}

}  // namespace

ComplexRootSet find_roots(const Polynomial& p, int star_modulus,
                          double target_residual, SweepKernel kernel) {
    if (p.is_zero() || p.degree() < 1) {
        throw InvalidParams("find_roots: degree must be >= 1");
    }
    if (star_modulus < 2) throw InvalidParams("find_roots: star modulus must be >= 2");
    if (!(target_residual > 0)) {
        throw InvalidParams("find_roots: target residual must be positive");
    }

    // exact zero root: trailing coefficient block
    std::int64_t shift = 0;
    while (p.coefficient(shift) == 0) ++shift;
    std::vector<std::pair<std::complex<double>, int>> found;
    if (shift > 0) found.emplace_back(std::complex<double>(0.0, 0.0),
                                      static_cast<int>(shift));
    std::vector<BigInt> rest(p.coefficients().begin() +
                                 static_cast<std::ptrdiff_t>(shift),
                             p.coefficients().end());
    const Polynomial reduced = Polynomial::from_coefficients(std::move(rest));
    if (reduced.degree() >= 1) {
        for (const auto& part : square_free_decomposition(reduced)) {
            for (const auto& z : solve_square_free(part.factor, kernel)) {
                found.emplace_back(z, part.multiplicity);
            }
        }
    }

    ComplexRootSet set;
    set.star_modulus = star_modulus;
    set.source_degree = p.degree();
    set.roots.reserve(found.size());
    double worst = 0.0;
    for (const auto& [value, multiplicity] : found) {
        RootEntry entry;
        entry.value = value;
        entry.multiplicity = multiplicity;
        entry.residual = exact_normalized_residual(p, value);
        worst = std::max(worst, entry.residual);
        set.roots.push_back(entry);
    }
    if (worst > target_residual) {
        std::ostringstream msg;
        msg << "root refinement stalled: best residual " << worst
            << " exceeds target " << target_residual;
        throw NonConvergence(msg.str(), worst);
    }
    std::sort(set.roots.begin(), set.roots.end(),
              [](const RootEntry& a, const RootEntry& b) {
                  const double ma = std::abs(a.value);
                  const double mb = std::abs(b.value);
                  if (ma != mb) return ma < mb;
                  const double aa = std::arg(a.value);
                  const double ab = std::arg(b.value);
                  if (aa != ab) return aa < ab;
                  return complex_less(a.value, b.value);
              });
    assign_orbits(set);
    return set;
}

QuadraticOrbitRoots quadratic_orbit_roots(int r, std::int64_t n, int p) {
    if (r < 2) throw InvalidParams("quadratic_orbit_roots: r must be >= 2");
    if (n < 1) throw InvalidParams("quadratic_orbit_roots: n must be >= 1");
    const std::int64_t k = static_cast<std::int64_t>(r - 1) * n - 2;
    if (k < 1) {
        throw InvalidSpec("quadratic_orbit_roots: needs (r-1)n >= 3 for eta = 2");
    }
    QuadraticOrbitRoots out;
    out.spec = derivative_spec(r, n, p, k);
    auto [upsilon, psi] = upsilon_psi(out.spec);
    out.upsilon = upsilon;
    out.psi = psi;
    out.discriminant = psi * psi - Rational(4) * upsilon;
    out.degenerate = out.discriminant == 0;

    const double psi_d = psi.get_d();
    const double disc_d = out.discriminant.get_d();
    std::complex<double> y_plus;
    std::complex<double> y_minus;
    if (disc_d > 0) {
        const double s = std::sqrt(disc_d);
        const double big = psi_d >= 0 ? (psi_d + s) / 2.0 : (psi_d - s) / 2.0;
        const double small = big != 0.0 ? upsilon.get_d() / big : 0.0;
        y_plus = {psi_d >= 0 ? big : small, 0.0};
        y_minus = {psi_d >= 0 ? small : big, 0.0};
    } else {
        const std::complex<double> s = std::sqrt(std::complex<double>(disc_d, 0.0));
        y_plus = (psi_d + s) / 2.0;
        y_minus = (psi_d - s) / 2.0;
    }

    out.values.reserve(static_cast<std::size_t>(2 * r));
    for (const std::complex<double>& y : {y_plus, y_minus}) {
        const double mod = std::pow(std::abs(y), 1.0 / static_cast<double>(r));
        const double base_arg = std::arg(y);
        for (int rot = 0; rot < r; ++rot) {
            const double angle = (base_arg + kTwoPi * rot) / static_cast<double>(r);
            out.values.push_back(std::polar(mod, angle));
        }
    }
    return out;
}

ReferenceRoots reference_roots(const ComplexRootSet& set) {
    ReferenceRoots out;
    out.selection_rule = "argument in (pi - 2*pi/r, pi]";
    for (int orbit = 0; orbit < set.orbit_count; ++orbit) {
        std::vector<std::complex<double>> members;
        for (const auto& entry : set.roots) {
            if (entry.orbit_id == orbit) members.push_back(entry.value);
        }
        if (members.empty()) continue;
        if (members.size() == 1 && members[0] == std::complex<double>(0.0, 0.0)) {
            continue;  // the fixed point of the rotation
        }
        if (static_cast<int>(members.size()) != set.star_modulus) {
            std::ostringstream msg;
            msg << "orbit " << orbit << " has " << members.size()
                << " members, expected " << set.star_modulus;
            throw OrbitIncomplete(msg.str());
        }
        // unique member with argument in the half-open window ending at pi
        std::complex<double> best = members.front();
        double best_score = wrap_nonnegative(std::numbers::pi - std::arg(best), kTwoPi);
        for (const auto& candidate : members) {
            const double score =
                wrap_nonnegative(std::numbers::pi - std::arg(candidate), kTwoPi);
            if (score < best_score) {
                best = candidate;
                best_score = score;
            }
        }
        out.representatives.push_back(best);
    }
    return out;
}

namespace {

std::complex<double> integer_power(std::complex<double> z, int e) {
    std::complex<double> acc{1.0, 0.0};
    for (int i = 0; i < e; ++i) acc *= z;
    return acc;
}

std::vector<StarBranch> cluster_branches(std::vector<std::complex<double>> ys,
                                         int r) {
    std::vector<StarBranch> out;
    if (ys.empty()) return out;
    std::sort(ys.begin(), ys.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  return std::arg(a) < std::arg(b);
              });
    const std::size_t count = ys.size();
    const double threshold = std::numbers::pi / r;
    // circular gap scan: a branch boundary is a gap in argument wider than
    // the threshold
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t nxt = (i + 1) % count;
        double gap = std::arg(ys[nxt]) - std::arg(ys[i]);
        if (nxt == 0) gap += kTwoPi;
        if (gap > threshold) starts.push_back(nxt);
    }
    if (starts.empty()) starts.push_back(0);
    for (std::size_t b = 0; b < starts.size(); ++b) {
        const std::size_t begin = starts[b];
        const std::size_t end = starts[(b + 1) % starts.size()];
        StarBranch branch;
        branch.size = 0;
        double best_mod = 0.0;
        for (std::size_t i = begin; ; i = (i + 1) % count) {
            const double mod = std::abs(ys[i]);
            if (branch.size == 0 || mod < best_mod) {
                best_mod = mod;
                branch.innermost_y = ys[i];
            }
            ++branch.size;
            if ((i + 1) % count == end) break;
        }
        branch.distance_to_minus_one =
            std::abs(branch.innermost_y - std::complex<double>(-1.0, 0.0));
        out.push_back(branch);
    }
    return out;
}

}  // namespace

StarProbeReport star_probe(int r, std::int64_t n, int p) {
    if (r < 2) throw InvalidParams("star_probe: r must be >= 2");
    if (n < 1) throw InvalidParams("star_probe: n must be >= 1");
    if (p < 0 || p >= r) throw InvalidParams("star_probe: p must be in [0, r-1]");
    StarProbeReport report;
    report.r = r;
    report.n = n;
    report.p = p;
    report.poly_index = static_cast<std::int64_t>(r) * n + p;
    const Polynomial poly = build_recurrence({r, report.poly_index});
    if (poly.degree() < 1) {
        throw InvalidParams("star_probe: polynomial has no zeros");
    }
    const ComplexRootSet set = find_roots(poly, r);
    report.orbit_count = set.orbit_count;
    for (const auto& entry : set.roots) {
        report.max_residual = std::max(report.max_residual, entry.residual);
    }
    const ReferenceRoots refs = reference_roots(set);
    std::vector<std::complex<double>> ys;
    ys.reserve(refs.representatives.size());
    for (const auto& rep : refs.representatives) {
        ys.push_back(integer_power(rep, r));
    }
    report.branches = cluster_branches(std::move(ys), r);
    return report;
}

std::string StarProbeReport::to_json() const {
    nlohmann::json j;
    j["r"] = r;
    j["n"] = n;
    j["p"] = p;
    j["poly_index"] = poly_index;
    j["orbit_count"] = orbit_count;
    j["max_residual"] = max_residual;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& branch : branches) {
        arr.push_back({{"innermost_re", branch.innermost_y.real()},
                       {"innermost_im", branch.innermost_y.imag()},
                       {"distance_to_minus_one", branch.distance_to_minus_one},
                       {"size", branch.size}});
    }
    j["branches"] = arr;
    return j.dump(2);
}

std::string StarProbeReport::to_human() const {
    std::ostringstream os;
    os << "star probe r=" << r << " n=" << n << " p=" << p << " (R_"
       << poly_index << ")\n";
    os << "orbits: " << orbit_count << ", max residual: " << max_residual
       << "\n";
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& branch = branches[i];
        os << "branch " << i << ": " << branch.size
           << " y-image(s), innermost " << branch.innermost_y.real();
        if (branch.innermost_y.imag() >= 0) os << "+";
        os << branch.innermost_y.imag() << "i, distance to -1 = "
           << branch.distance_to_minus_one << "\n";
    }
    return os.str();
}

double max_matching_distance(const std::vector<std::complex<double>>& a,
                             const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size()) {
        throw InvalidParams("max_matching_distance: size mismatch");
    }
    const std::size_t count = a.size();
    std::vector<bool> used_a(count, false);
    std::vector<bool> used_b(count, false);
    double worst = 0.0;
    for (std::size_t step = 0; step < count; ++step) {
        double best = 0.0;
        std::size_t bi = count;
        std::size_t bj = count;
        for (std::size_t i = 0; i < count; ++i) {
            if (used_a[i]) continue;
            for (std::size_t j = 0; j < count; ++j) {
                if (used_b[j]) continue;
                const double d = std::abs(a[i] - b[j]);
                if (bi == count || d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        used_a[bi] = true;
        used_b[bj] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

double max_rotation_mismatch(const ComplexRootSet& set) {
    const std::complex<double> rotation =
        std::polar(1.0, kTwoPi / set.star_modulus);
    double worst = 0.0;
    for (const auto& entry : set.roots) {
        if (entry.value == std::complex<double>(0.0, 0.0)) continue;
        const std::complex<double> rotated = entry.value * rotation;
        double best = -1.0;
        for (const auto& other : set.roots) {
            if (other.multiplicity != entry.multiplicity) continue;
            const double d = std::abs(rotated - other.value);
            if (best < 0 || d < best) best = d;
        }
        worst = std::max(worst, best / std::abs(entry.value));
    }
    return worst;
}

std::string roots_to_csv(const ComplexRootSet& set) {
    std::ostringstream os;
    os << "re,im,multiplicity,orbit_id,residual\n";
    char buffer[96];
    for (const auto& entry : set.roots) {
        std::snprintf(buffer, sizeof buffer, "%.17g,%.17g,%d,%d,%.17g\n",
                      entry.value.real(), entry.value.imag(),
                      entry.multiplicity, entry.orbit_id, entry.residual);
        os << buffer;
    }
    return os.str();
}

std::string roots_to_json(const ComplexRootSet& set) {
    nlohmann::json j;
    j["star_modulus"] = set.star_modulus;
    j["degree"] = set.source_degree;
    j["orbit_count"] = set.orbit_count;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& entry : set.roots) {
        arr.push_back({{"re", entry.value.real()},
                       {"im", entry.value.imag()},
                       {"multiplicity", entry.multiplicity},
                       {"orbit_id", entry.orbit_id},
                       {"residual", entry.residual}});
    }
    j["roots"] = arr;
    return j.dump(2);
}

}  // namespace rstar
