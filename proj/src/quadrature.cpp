#include "sbm/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <memory>
#include <mutex>
#include <sstream>

namespace sbm {

namespace {

// GSL's default error handler aborts the process; we want exceptions instead,
// so the handler is switched off once and return codes are checked by hand.
void disable_gsl_abort() {
    static std::once_flag flag;
    std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

double call_thunk(double x, void* params) {
    auto* f = static_cast<const std::function<double(double)>*>(params);
    return (*f)(x);
}

struct workspace_deleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

constexpr size_t workspace_limit = 5000;

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol, double rel_tol) {
    disable_gsl_abort();
    std::unique_ptr<gsl_integration_workspace, workspace_deleter> w(
        gsl_integration_workspace_alloc(workspace_limit));
    if (!w) throw numerical_error("integrate: failed to allocate quadrature workspace");

    gsl_function F;
    F.function = &call_thunk;
    F.params = const_cast<std::function<double(double)>*>(&f);

    double result = 0.0, abserr = 0.0;
    int status = gsl_integration_qag(&F, lo, hi, abs_tol, rel_tol, workspace_limit,
                                     GSL_INTEG_GAUSS61, w.get(), &result, &abserr);
    if (status != GSL_SUCCESS) {
        std::ostringstream msg;
        msg << "integrate: adaptive quadrature did not reach the requested tolerance"
            << " (abs " << abs_tol << ", rel " << rel_tol << "); achieved error estimate "
            << abserr << " (" << gsl_strerror(status) << ")";
        throw numerical_error(msg.str(), abserr);
    }
    return result;
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double lo, double hi, double abs_tol, double rel_tol) {
    const double re = integrate([&f](double x) { return f(x).real(); }, lo, hi, abs_tol, rel_tol);
    const double im = integrate([&f](double x) { return f(x).imag(); }, lo, hi, abs_tol, rel_tol);
    return {re, im};
}

}  // namespace sbm
