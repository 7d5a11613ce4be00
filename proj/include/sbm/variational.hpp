#pragma once

#include "sbm/model.hpp"

namespace sbm {

struct VariationalSolution {
    double eta = 1.0;        // renormalized tunneling factor, in [0, 1]
    bool converged = false;  // successive difference met the tolerance
    int iterations = 0;
    double residual = 0.0;   // final |eta_{n+1} - eta_n|
    Phase phase = Phase::delocalized;
};

// How the dressing exponent I(eta) is evaluated inside the fixed-point loop.
// The closed form is the production path; the quadrature route exists so the
// self-consistency can be solved through two independent pipelines and
// compared.
enum class ExponentRoute { closed_form, quadrature };

// Solves eta = exp(-I(eta)) by damped fixed-point iteration from eta0 = 1,
// which selects the largest (physical) fixed point. The damping factor starts
// at 1/2 and is halved whenever the update direction flips sign, which tames
// the oscillatory approach near the localized boundary. Collapse below
// eta_floor classifies the point as localized; running out of iterations
// returns converged = false rather than a silent answer.
VariationalSolution solve_eta(const ModelParams& p,
                              double tol = defaults::eta_tol,
                              int max_iter = defaults::max_iter,
                              ExponentRoute route = ExponentRoute::closed_form);

// Displacement energy constant C for a given dressing factor. Nonnegative,
// linear in alpha, and zero at zero coupling.
double displacement_constant_C(const ModelParams& p, double eta);

}  // namespace sbm
