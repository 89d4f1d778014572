#ifndef RSTAR_ROOTS_HPP
#define RSTAR_ROOTS_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rstar/polynomial.hpp"
#include "rstar/vieta.hpp"

namespace rstar {

struct RootEntry {
    std::complex<double> value;
    int multiplicity = 1;
    double residual = 0.0;
    int orbit_id = 0;
};

/// Numeric zeros with exact multiplicities and their grouping into rotation
/// orbits under multiplication by e^(2*pi*i/r). Entries are sorted by
/// (modulus, argument), the zero root first, so output is reproducible.
struct ComplexRootSet {
    int star_modulus = 2;
    std::int64_t source_degree = 0;
    std::vector<RootEntry> roots;
    int orbit_count = 0;
};

enum class SweepKernel { Auto, Serial, Parallel };

/// All complex zeros of p. The square-free part is solved by simultaneous
/// (Aberth-style) iteration started on an inclusion circle, then Newton
/// polished; multiplicities come from the exact square-free decomposition,
/// never from numeric clustering. Every reported residual is certified in
/// exact rational arithmetic as |p_monic(z)| / max(1, |z|)^deg and must meet
/// target_residual, else NonConvergence. Deterministic for fixed inputs:
/// the sweep is a Jacobi update, so the serial and parallel kernels produce
/// bit-identical roots.
ComplexRootSet find_roots(const Polynomial& p, int star_modulus,
                          double target_residual = 1e-10,
                          SweepKernel kernel = SweepKernel::Auto);

/// Solver core on a square-free polynomial; exposed for kernel-equivalence
/// tests and the benchmark. Returns roots sorted by (re, im).
std::vector<std::complex<double>> solve_square_free(const Polynomial& p,
                                                    SweepKernel kernel);

/// |p_monic(z)| / max(1, |z|)^deg computed exactly in rational arithmetic
/// (z is taken at its exact binary value) and rounded once at the end.
double exact_normalized_residual(const Polynomial& p, std::complex<double> z);

/// Zeros of the eta = 2 derivative family in closed form: the two r-th-power
/// values y are the roots of y^2 - psi y + upsilon, and the 2r zeros are
/// their r-th roots.
struct QuadraticOrbitRoots {
    DerivativeSpec spec;
    Rational upsilon;
    Rational psi;
    Rational discriminant;           // psi^2 - 4 upsilon, exact
    bool degenerate = false;         // discriminant == 0
    std::vector<std::complex<double>> values;  // 2r entries, y_plus block first
};
QuadraticOrbitRoots quadratic_orbit_roots(int r, std::int64_t n, int p);

/// One representative per nonzero orbit, the member with argument in
/// (pi - 2*pi/r, pi]. Throws OrbitIncomplete when a nonzero orbit does not
/// have exactly r members.
struct ReferenceRoots {
    std::vector<std::complex<double>> representatives;
    std::string selection_rule;
};
ReferenceRoots reference_roots(const ComplexRootSet& set);

/// Raw geometry behind the branch conjecture: map every nonzero orbit to
/// y = x^r, cluster the y-images into angular branches, and report each
/// branch's innermost point and its distance to -1. Reports only; asserts
/// nothing about the conjecture.
struct StarBranch {
    std::complex<double> innermost_y;
    double distance_to_minus_one = 0.0;
    int size = 0;
};
struct StarProbeReport {
    int r = 2;
    std::int64_t n = 1;
    int p = 0;
    std::int64_t poly_index = 0;
    int orbit_count = 0;
    std::vector<StarBranch> branches;
    double max_residual = 0.0;

    std::string to_json() const;
    std::string to_human() const;
};
StarProbeReport star_probe(int r, std::int64_t n, int p);

/// Smallest achievable maximum pairwise distance over bijections between two
/// equally sized point multisets (greedy global matching; exact for the
/// well-separated sets produced here).
double max_matching_distance(const std::vector<std::complex<double>>& a,
                             const std::vector<std::complex<double>>& b);

/// Largest relative distance from any rotated root z*e^(2*pi*i/r) to the
/// nearest root of equal multiplicity.
double max_rotation_mismatch(const ComplexRootSet& set);

/// CSV with header re,im,multiplicity,orbit_id,residual at full double
/// precision.
std::string roots_to_csv(const ComplexRootSet& set);
std::string roots_to_json(const ComplexRootSet& set);

}  // namespace rstar

#endif
