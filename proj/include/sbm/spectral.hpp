#pragma once

#include <complex>

#include "sbm/model.hpp"

namespace sbm {

// Rejects renormalization factors outside (0, 1].
void check_eta(double eta);

// Ohmic spectral density J(w) = 2*alpha*w below the sharp cutoff, zero at and
// above it.
double spectral_density(double omega, const ModelParams& p);

// Polaron-renormalized density J'(w) = (eta*delta)^2 J(w)/(w + eta*delta)^2.
// This is the effective coupling distribution seen by the single-excitation
// dynamics.
double renormalized_spectral_density(double omega, const ModelParams& p, double eta);

// Fourier-type memory integral f(x) = int_0^omega_c J'(w) e^{-i w x} dw,
// evaluated by adaptive quadrature. At x = 0 the integrand is real and the
// imaginary part is returned as exactly zero.
std::complex<double> kernel(double x, const ModelParams& p, double eta,
                            double abs_tol = defaults::quad_abs_tol,
                            double rel_tol = defaults::quad_rel_tol);

// Mean number of displaced reservoir quanta in the variational ground state,
// n = int_0^omega_c J(w) / (4 (w + eta*delta)^2) dw.
double displaced_boson_number(const ModelParams& p, double eta);

// ---------------------------------------------------------------------------
// Closed-form reservoir integrals. For s = 1 every integral below reduces to
// logarithms and rational terms via partial fractions; the adaptive-quadrature
// and Riemann-sum twins live in the tests and keep these honest.
// ---------------------------------------------------------------------------

// I(eta) = int_0^omega_c J(w) / (2 (w + eta*delta)^2) dw, the exponent of the
// polaron dressing factor: a self-consistent eta satisfies eta = exp(-I(eta)).
double exponent_integral(const ModelParams& p, double eta);

// C = int_0^omega_c J(w) xi(w) (2 - xi(w)) / (4 w) dw with
// xi(w) = w / (w + eta*delta); the displacement energy constant.
double displacement_constant(const ModelParams& p, double eta);

// int_0^omega_c J'(w) dw; also the x = 0 value of the kernel.
double jprime_total(const ModelParams& p, double eta);

// B(b) = int_0^omega_c J'(w) / (w + b) dw, b >= 0. The level-shift integral of
// the bound-state eigenvalue equation, evaluated at energy -b below the
// continuum edge.
double bound_integral(const ModelParams& p, double eta, double b);

// R(b) = int_0^omega_c J'(w) / (w + b)^2 dw, b > 0. Determines the pole
// residue 1/(1 + R) of the amplitude resolvent at the bound-state energy.
double residue_integral(const ModelParams& p, double eta, double b);

}  // namespace sbm
