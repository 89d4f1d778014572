#ifndef RSTAR_ERRORS_HPP
#define RSTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rstar {

/// Parameters outside the documented domain of an operation.
class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A derivative parameterization (r, n, p, k) for which no statement applies
/// (derived order t < 1 or reference-zero count eta < 1).
class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two nonzero exponents of the input disagree mod r, so no x^s * Q(x^r)
/// rewriting exists.
class MixedResidueError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ZeroPolynomial : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The iterative solver missed the residual target; carries the best bound
/// reached so callers can report it.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual_(best_residual) {}
    double best_residual() const noexcept { return best_residual_; }

private:
    double best_residual_;
};

/// A rotation orbit came out with a member count != r: numeric failure or a
/// wrong star modulus.
class OrbitIncomplete : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rstar

#endif
