#pragma once

#include <complex>
#include <functional>

#include "sbm/model.hpp"

namespace sbm {

// Thin wrapper around GSL's adaptive Gauss-Kronrod integrator (QAG, 61-point
// rule). Throws numerical_error carrying the achieved error estimate when the
// requested tolerance cannot be met. Every call owns its workspace, so
// concurrent integration from sweep workers is safe.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol = defaults::quad_abs_tol,
                 double rel_tol = defaults::quad_rel_tol);

// Real and imaginary parts are integrated separately; the reported error is
// the larger of the two estimates.
std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double lo, double hi,
                                       double abs_tol = defaults::quad_abs_tol,
                                       double rel_tol = defaults::quad_rel_tol);

}  // namespace sbm
