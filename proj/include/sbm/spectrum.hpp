#pragma once

#include "sbm/model.hpp"

namespace sbm {

struct BoundStateResult {
    bool exists = false;
    double energy = 0.0;   // E1, defined only when exists
    double residue = 0.0;  // pole weight Z in (0, 1], defined only when exists
    double detuning = 0.0; // E1 + delta*eta/2 <= 0, depth below the continuum edge
};

enum class Branch { zero_excitation, one_excitation };

struct GroundState {
    double energy = 0.0;
    Branch branch = Branch::zero_excitation;
    double eta = 1.0;  // dressing factor the energy was evaluated with
    double C = 0.0;    // displacement constant entering the energy
};

struct DerivativeResult {
    double value = 0.0;
    bool branch_crossed = false;  // the two stencil points sat on different branches
    Branch branch_lo = Branch::zero_excitation;
    Branch branch_hi = Branch::zero_excitation;
};

// Left-hand side of the bound-state eigenvalue condition y(E) = E, with
// y(E) = delta*eta/2 - int J'(w)/(w - (E + delta*eta/2)) dw. Defined for
// E <= -delta*eta/2, where the denominator stays positive; strictly
// decreasing there.
double y_function(double E, const ModelParams& p, double eta);

// Existence test and root solve for the discrete level below the continuum
// edge. The level exists iff y(-delta*eta/2) < -delta*eta/2 (strictly: the
// marginal case counts as absent, since its binding vanishes). The root is
// bracketed from [-delta*eta/2 - omega_c, -delta*eta/2], expanding toward
// -infinity if needed, and bisected to root_tol (pass 0 for the default
// 1e-12 * omega_c). The residue is Z = 1/(1 + int J'/(w - E')^2 dw).
BoundStateResult bound_state(const ModelParams& p, double eta, double root_tol = 0.0);

// Self-consistent critical coupling: the alpha solving
// alpha = 1/2 + eta(alpha, delta) * delta / (2 omega_c), found by bisection on
// [1/2, 1/2 + delta/(2 omega_c)]. p.alpha is ignored.
double critical_alpha(const ModelParams& p, double tol = defaults::crit_tol);

// Two-branch ground-state energy: -delta*eta/2 - C without the bound state,
// E1 - C with it. Requires a delocalized variational solution; a localized
// point is a precondition violation, not a number.
GroundState ground_energy(const ModelParams& p);

// Central finite difference of the ground-state energy in alpha, with
// branch-crossing detection. Richardson extrapolation combines the dalpha and
// dalpha/2 stencils for fourth-order accuracy on a single branch.
DerivativeResult ground_energy_derivative(const ModelParams& p,
                                          double dalpha = defaults::dalpha,
                                          bool richardson = false);

}  // namespace sbm
