#include "sbm/variational.hpp"

#include <cmath>

#include "sbm/quadrature.hpp"
#include "sbm/spectral.hpp"

namespace sbm {

namespace {

double exponent_via(const ModelParams& p, double eta, ExponentRoute route) {
    if (route == ExponentRoute::closed_form) return exponent_integral(p, eta);
    const double a = eta * p.delta;
    return integrate(
        [&](double w) {
            const double d = w + a;
            return spectral_density(w, p) / (2.0 * d * d);
        },
        0.0, p.omega_c);
}

}  // namespace

VariationalSolution solve_eta(const ModelParams& p, double tol, int max_iter,
                              ExponentRoute route) {
    p.validate();
    if (!(tol > 0.0)) throw domain_error("solve_eta: tolerance must be positive");
    if (max_iter < 1) throw domain_error("solve_eta: max_iter must be at least 1");

    VariationalSolution sol;
    if (p.alpha == 0.0) {
        // The exponent vanishes identically; eta = 1 is exact.
        sol.eta = 1.0;
        sol.converged = true;
        return sol;
    }

    // Damped iteration from eta0 = 1. The map eta -> exp(-I(eta)) is monotone
    // increasing, so starting at 1 walks down onto the largest fixed point;
    // when that fixed point has collapsed the iterate decays geometrically
    // toward zero instead and the floor classifies the result as localized.
    double eta = 1.0;
    double lambda = 0.5;
    double prev_step = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        const double target = eta > 0.0 ? std::exp(-exponent_via(p, eta, route)) : 0.0;
        const double step = target - eta;
        // A sign flip of successive updates means the damped map is
        // overshooting; halving the damping restores monotone approach.
        if (prev_step != 0.0 && step * prev_step < 0.0) lambda *= 0.5;
        prev_step = step;

        const double next = eta + lambda * step;
        sol.iterations = it;
        sol.residual = std::abs(next - eta);
        eta = next;
        if (sol.residual <= tol) {
            sol.converged = true;
            break;
        }
    }
    sol.eta = eta;
    sol.phase = eta < defaults::eta_floor ? Phase::localized : Phase::delocalized;
    return sol;
}

double displacement_constant_C(const ModelParams& p, double eta) {
    return displacement_constant(p, eta);
}

}  // namespace sbm
