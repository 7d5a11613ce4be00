#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "sbm/model.hpp"

namespace sbm {

// Everything in this header recomputes observables of the renormalized model
// through a second, independent pipeline: a finite bath diagonalized or
// propagated exactly, plus a deliberately naive quadrature. These routines
// trade speed for transparency and exist to keep the closed-form and
// integral-equation paths honest.

enum class Scheme { linear, logarithmic };

struct DiscretizedBath {
    std::vector<double> frequency;    // bin representatives, strictly increasing
    std::vector<double> coupling_sq;  // nu_k^2 = integral of J' over bin k
    Scheme scheme = Scheme::linear;
};

// Splits [0, omega_c] into n_modes bins (uniform, or geometric from a lower
// cutoff of 1e-8 omega_c) and assigns each bin its exact J' weight and
// weight-centroid frequency, both from closed-form antiderivatives arranged
// to avoid cancellation. Total coupling satisfies the J' sum rule by
// construction; the centroid choice makes the low-order moments of the
// discrete bath match the continuum.
DiscretizedBath discretize(const ModelParams& p, double eta, int n_modes, Scheme scheme);

struct SingleExcitationResult {
    double energy = 0.0;       // lowest eigenvalue of the one-excitation block
    double spin_weight = 0.0;  // overlap^2 of the ground state with |spin-up, vacuum>
    int iterations = 0;        // Lanczos steps used
};

// Lowest eigenpair of the excitation-conserving Hamiltonian restricted to
// {|up, vac>} u {|down, 1_k>}, by Lanczos with full reorthogonalization. The
// start vector is the normalized all-ones vector: it overlaps every basis
// state, so decoupled sectors (alpha = 0) cannot hide the true minimum. The
// lowest energy converges to the bound-state pole E1 as n_modes grows, and
// spin_weight to its residue Z.
SingleExcitationResult diag_single_excitation(const ModelParams& p, double eta,
                                              const DiscretizedBath& bath);

// Lowest eigenvalue of the two-excitation block {|up, 1_k>} u {|down, 1_k 1_l>},
// dense diagonalization (dimension n + n(n+1)/2, capped at n_modes <= 60).
// Probes how much the single-excitation truncation bends the spectrum.
double diag_two_excitation(const ModelParams& p, double eta, const DiscretizedBath& bath);

// Exact unitary evolution of |up, vac> in the one-excitation block by
// Crank-Nicolson, which is unconditionally norm-preserving; the arrowhead
// structure of the block makes each implicit solve O(n_modes). Returns the
// survival amplitude <up, vac | psi(t)> on the uniform grid j*dt, j = 0..N.
// Norm drift beyond 1e-8 is a numerical error, not a warning.
std::vector<std::complex<double>> unitary_dynamics(const ModelParams& p, double eta,
                                                   const DiscretizedBath& bath,
                                                   double t_max, double dt);

// Compensated midpoint rule. Slow, simple, and independent of GSL: the
// baseline every smarter integral is measured against.
double riemann_integral(const std::function<double(double)>& f, double lo, double hi,
                        long n);

}  // namespace sbm
