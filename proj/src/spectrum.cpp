#include "sbm/spectrum.hpp"

#include <cmath>

#include "sbm/spectral.hpp"
#include "sbm/variational.hpp"

namespace sbm {

namespace {

void require_delocalized_eta(double eta) {
    if (!(eta > 0.0) || eta > 1.0)
        throw domain_error("renormalization factor eta must lie in (0, 1]");
    if (eta < defaults::eta_floor)
        throw domain_error("operation requires a delocalized solution (eta above the floor)");
}

VariationalSolution solved_eta_or_throw(const ModelParams& p) {
    VariationalSolution sol = solve_eta(p);
    if (!sol.converged)
        throw numerical_error("variational solver did not converge", sol.residual);
    return sol;
}

}  // namespace

double y_function(double E, const ModelParams& p, double eta) {
    require_delocalized_eta(eta);
    const double edge = -0.5 * p.delta * eta;
    if (E > edge)
        throw domain_error("y_function: E must not exceed the continuum edge -delta*eta/2");
    const double b = edge - E;  // depth below the edge, >= 0
    return -edge - bound_integral(p, eta, b);
}

BoundStateResult bound_state(const ModelParams& p, double eta, double root_tol) {
    p.validate();
    require_delocalized_eta(eta);
    if (root_tol < 0.0) throw domain_error("bound_state: root_tol must be nonnegative");
    if (root_tol == 0.0) root_tol = defaults::root_tol_scale * p.omega_c;

    const double a = eta * p.delta;
    const double edge = -0.5 * a;

    BoundStateResult res;
    // Existence: the level detaches when the edge value of y already sits
    // below the edge. The marginal case (exact equality) is classified as
    // no-bound-state; its binding is zero and the ground energy is continuous
    // across the boundary either way.
    const double margin = bound_integral(p, eta, 0.0) - a;  // = edge - y(edge)
    if (!(margin > 0.0)) return res;

    // g(E) = y(E) - E is strictly decreasing with g(edge) = -margin < 0 and
    // g -> +infinity toward -infinity, so one sign change is guaranteed.
    auto g = [&](double E) { return y_function(E, p, eta) - E; };
    double hi = edge;
    double width = p.omega_c;
    double lo = edge - width;
    int guard = 0;
    while (g(lo) <= 0.0) {
        // Mathematically unreachable once margin > 0, kept as a guard.
        width *= 2.0;
        lo = edge - width;
        if (++guard > 60)
            throw numerical_error("bound_state: bracket expansion failed to find a sign change");
    }
    while (hi - lo > root_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            throw numerical_error("bound_state: root_tol " + std::to_string(root_tol) +
                                      " is below the floating-point resolution of the bracket",
                                  hi - lo);
        if (g(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }

    res.exists = true;
    res.energy = 0.5 * (lo + hi);
    res.detuning = res.energy - edge;  // <= 0
    const double b = -res.detuning;
    res.residue = 1.0 / (1.0 + residue_integral(p, eta, b));
    return res;
}

double critical_alpha(const ModelParams& p, double tol) {
    p.validate();
    if (!(tol > 0.0)) throw domain_error("critical_alpha: tolerance must be positive");

    // The existence condition alpha = 1/2 + eta*delta/(2 omega_c) is solved
    // self-consistently: eta itself depends on alpha, but the bracket
    // [1/2, 1/2 + delta/(2 omega_c)] pins the root since 0 < eta <= 1.
    auto sign = [&](double alpha) {
        ModelParams q = p;
        q.alpha = alpha;
        VariationalSolution sol = solved_eta_or_throw(q);
        return alpha - 0.5 - 0.5 * sol.eta * q.delta / q.omega_c;
    };
    double lo = 0.5;
    double hi = 0.5 + 0.5 * p.delta / p.omega_c;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            throw numerical_error("critical_alpha: tolerance " + std::to_string(tol) +
                                      " is below the floating-point resolution of the bracket",
                                  hi - lo);
        if (sign(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

GroundState ground_energy(const ModelParams& p) {
    p.validate();
    VariationalSolution sol = solved_eta_or_throw(p);
    if (sol.phase == Phase::localized)
        throw domain_error(
            "ground_energy: the variational solution is localized; the two-branch "
            "energy presumes a delocalized eta");

    GroundState gs;
    gs.eta = sol.eta;
    gs.C = displacement_constant_C(p, sol.eta);
    const double edge = -0.5 * p.delta * sol.eta;

    BoundStateResult bs = bound_state(p, sol.eta);
    if (bs.exists) {
        gs.branch = Branch::one_excitation;
        gs.energy = bs.energy - gs.C;
    } else {
        gs.branch = Branch::zero_excitation;
        gs.energy = edge - gs.C;
    }
    return gs;
}

namespace {

// One central-difference pass; also reports the branches seen at the two
// stencil points so callers can detect a crossing.
DerivativeResult central_difference(const ModelParams& p, double dalpha) {
    ModelParams lo = p, hi = p;
    lo.alpha = p.alpha - dalpha;
    hi.alpha = p.alpha + dalpha;
    if (lo.alpha < 0.0)
        throw domain_error("ground_energy_derivative: alpha - dalpha must be nonnegative");
    const GroundState glo = ground_energy(lo);
    const GroundState ghi = ground_energy(hi);
    DerivativeResult d;
    d.value = (ghi.energy - glo.energy) / (2.0 * dalpha);
    d.branch_lo = glo.branch;
    d.branch_hi = ghi.branch;
    d.branch_crossed = glo.branch != ghi.branch;
    return d;
}

}  // namespace

DerivativeResult ground_energy_derivative(const ModelParams& p, double dalpha,
                                          bool richardson) {
    p.validate();
    if (!(dalpha > 0.0))
        throw domain_error("ground_energy_derivative: dalpha must be positive");
    DerivativeResult coarse = central_difference(p, dalpha);
    if (!richardson) return coarse;

    DerivativeResult fine = central_difference(p, 0.5 * dalpha);
    DerivativeResult d = fine;
    d.branch_crossed = coarse.branch_crossed || fine.branch_crossed;
    if (!d.branch_crossed) d.value = (4.0 * fine.value - coarse.value) / 3.0;
    // With a crossing inside the stencil the extrapolation is meaningless;
    // the flagged fine-step estimate is returned as-is.
    return d;
}

}  // namespace sbm
