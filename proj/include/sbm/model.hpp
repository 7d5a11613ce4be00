#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace sbm {

// Precondition violations: bad parameters, out-of-range arguments, requests
// that are meaningless in the current phase (e.g. ground-state energy of a
// localized solution).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failures: quadrature that cannot reach the requested tolerance,
// fixed-point iteration running out of budget, eigensolver breakdown.
// `achieved` carries the best error estimate the failing routine had, when
// one exists (NaN otherwise).
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg,
                             double achieved_ = std::numeric_limits<double>::quiet_NaN())
        : std::runtime_error(msg), achieved(achieved_) {}
    double achieved;
};

enum class Phase { delocalized, localized };

// Physical inputs. Everything is expressed in units of the cutoff: energies
// in omega_c, times in 1/omega_c. The spectral exponent and bias are carried
// so that configs spell them out, but only the ohmic unbiased case (s = 1,
// epsilon = 0) is implemented; anything else is rejected up front.
struct ModelParams {
    double delta   = 0.0;  // bare tunneling amplitude
    double omega_c = 1.0;  // reservoir cutoff frequency (the unit scale)
    double alpha   = 0.0;  // dimensionless coupling
    double s       = 1.0;  // spectral exponent, ohmic only
    double epsilon = 0.0;  // bias, must be zero

    void validate() const {
        if (!(delta > 0.0))
            throw domain_error("ModelParams: delta must be positive");
        if (!(omega_c > 0.0))
            throw domain_error("ModelParams: omega_c must be positive");
        if (!(alpha >= 0.0))
            throw domain_error("ModelParams: alpha must be nonnegative");
        if (s != 1.0)
            throw domain_error("ModelParams: only the ohmic case s = 1 is supported");
        if (epsilon != 0.0)
            throw domain_error("ModelParams: only the unbiased case epsilon = 0 is supported");
    }
};

inline ModelParams make_params(double delta, double alpha, double omega_c = 1.0) {
    ModelParams p;
    p.delta = delta;
    p.alpha = alpha;
    p.omega_c = omega_c;
    p.validate();
    return p;
}

// Solver defaults, collected in one place so the CLI and the tests agree on
// what "default" means.
namespace defaults {
inline constexpr double eta_tol        = 1e-12;  // fixed-point successive-difference tolerance
inline constexpr int    max_iter       = 10000;  // fixed-point iteration budget
inline constexpr double eta_floor      = 1e-6;   // below this eta the solution is classified localized
inline constexpr double quad_abs_tol   = 1e-12;  // adaptive quadrature absolute tolerance
inline constexpr double quad_rel_tol   = 1e-10;  // adaptive quadrature relative tolerance
inline constexpr double root_tol_scale = 1e-12;  // bound-state bisection tolerance, in units of omega_c
inline constexpr double crit_tol       = 1e-10;  // critical-coupling bisection tolerance
inline constexpr double dalpha         = 1e-4;   // finite-difference step for dE_g/dalpha
inline constexpr double c_floor        = 1e-3;   // |c| below which the rate quotient cdot/c is unusable
inline constexpr double dt             = 0.02;   // dynamics grid step
inline constexpr double t_max          = 500.0;  // dynamics horizon
}  // namespace defaults

}  // namespace sbm
