#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "sbm/model.hpp"

namespace sbm {

// Memory kernel sampled on the uniform dynamics grid. k[j] carries the
// transformed-frame phase, k[j] = e^{+i a t_j / 2} f(t_j) with a = eta*delta
// and f the Fourier integral of J'. Built once per run; read-only afterwards.
struct KernelCache {
    double dt = 0.0;
    double a = 0.0;
    std::vector<std::complex<double>> k;
};

KernelCache build_kernel_cache(const ModelParams& p, double eta, double t_max, double dt);

struct DynamicsTrace {
    double dt = 0.0;
    double eta = 1.0;
    double a = 0.0;  // eta * delta
    std::vector<double> times;
    std::vector<std::complex<double>> c;  // transformed-frame amplitude, c(0) = 1

    // Filled by rates():
    std::vector<double> omega_shift;       // Omega(t) = -2 Im[cdot/c] + a
    std::vector<double> gamma;             // gamma(t) = -2 Re[cdot/c]
    std::vector<std::uint8_t> rate_valid;  // 0 where |c| < c_floor
    bool rates_ready = false;

    // Filled by evolve_master():
    std::vector<double> pz;

    bool step_accepted = true;  // false: |c| grew past 1 + 1e-3, refine dt
    double max_abs_c = 1.0;
};

// Integrates the amplitude memory equation
//   cdot(t) = -i (a/2) c(t) - int_0^t K(t - tau) c(tau) dtau,  c(0) = 1,
// with the trapezoid rule; the implicit corrector is linear in c_{n+1} and is
// solved exactly, so no predictor pass is needed. The kernel K is the cached
// phase-dressed Fourier integral above: that dressing is what places the
// amplitude's poles at the eigenvalues of the excitation-conserving
// Hamiltonian (checked against the finite-bath unitary oracle), and the
// laboratory-frame observable picks up the compensating e^{-i a t / 2} in
// pz_closed_form below. The free limit fixes the convention: alpha = 0 gives
// c = e^{-i delta t / 2} and P_z = cos(delta t).
DynamicsTrace solve_amplitude(const ModelParams& p, double eta, double t_max, double dt);

// Centered differences for cdot (second-order one-sided at the ends); points
// with |c| below c_floor are flagged invalid rather than divided through.
void rates(DynamicsTrace& trace);

// P_z(t) = Re[c(t) e^{-i a t / 2}]: populations scale as |c|^2 and the
// coherence as c in the exact single-excitation solution, so the observable
// needs no master-equation integration. Primary cross-check for evolve_master.
std::vector<double> pz_closed_form(const DynamicsTrace& trace);

struct MasterResult {
    std::vector<double> rho_pp, rho_mm;        // populations in the dressed basis
    std::vector<std::complex<double>> rho_pm;  // coherence
    std::vector<double> pz;                    // 2 Re rho_pm
    int notices = 0;                // bridged stretches longer than one grid step
    double max_trace_defect = 0.0;  // max |rho_pp + rho_mm - 1|
    double min_det = 0.0;           // most negative density-matrix determinant seen
};

// Integrates the time-local master equation
//   rho_pp' = -gamma(t) rho_pp,   rho_pm' = -(gamma(t) + i Omega(t))/2 rho_pm
// (Omega is twice the instantaneous precession frequency; the free limit
// P_z = cos(delta t) fixes that factor) from the fixed initial state
// rho_pp = rho_mm = rho_pm = 1/2, using an adaptive Dormand-Prince stepper
// with the grid rates interpolated linearly. Over rate-invalid stretches the
// equation's quotient rates are unusable, so propagation switches to the
// exact amplitude-ratio form and a notice is counted. Also stores the
// resulting P_z series on the trace.
MasterResult evolve_master(DynamicsTrace& trace);

}  // namespace sbm
