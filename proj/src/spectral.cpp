#include "sbm/spectral.hpp"

#include <cmath>

#include "sbm/quadrature.hpp"

namespace sbm {

void check_eta(double eta) {
    if (!(eta > 0.0) || eta > 1.0)
        throw domain_error("renormalization factor eta must lie in (0, 1]");
}

namespace {

// log((W + x) / x) for x > 0; the recurring logarithm of the ohmic
// antiderivatives.
double log_ratio(double W, double x) { return std::log((W + x) / x); }

// K_m(U) = int_0^U u (1+u)^{-m} du for m >= 3, the dimensionless moment that
// appears in the near-coincident expansions below. Bounded by 1/((m-1)(m-2))
// for all U, so no overflow however deep the expansion goes.
double km_moment(int m, double U) {
    const double onep = 1.0 + U;
    const double t1 = (std::pow(onep, 2.0 - m) - 1.0) / (2.0 - m);
    const double t2 = (std::pow(onep, 1.0 - m) - 1.0) / (1.0 - m);
    return t1 - t2;
}

// B(b)/(2 alpha a^2) = int_0^W w / ((w+a)^2 (w+b)) dw via partial fractions:
//   w/((w+a)^2(w+b)) = b/(a-b)^2 * 1/(w+a) + a/(a-b) * 1/(w+a)^2
//                      - b/(a-b)^2 * 1/(w+b).
// The three terms cancel almost completely when b ~ a, so within a quarter of
// a of coincidence the integrand is expanded in powers of (b-a)/a instead:
//   1/(w+b) = sum_n (-(b-a))^n / (w+a)^{n+1}.
double t1_reduced(double a, double b, double W) {
    if (b == 0.0) return W / (a * (W + a));
    const double d = b - a;
    if (std::abs(d) <= 0.25 * std::max(a, b)) {
        const double U = W / a, r = d / a;
        double sum = 0.0, rn = 1.0;
        for (int n = 0; n < 80; ++n) {
            const double term = rn * km_moment(n + 3, U);
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
            rn *= -r;
        }
        return sum / a;
    }
    return b * (log_ratio(W, a) - log_ratio(W, b)) / (d * d) + W / ((a - b) * (W + a));
}

// R(b)/(2 alpha a^2) = int_0^W w / ((w+a)^2 (w+b)^2) dw. Partial fractions:
//   A/(w+a) + B/(w+a)^2 + C/(w+b) + D/(w+b)^2 with
//   A = -(a+b)/(a-b)^3, B = -a/(a-b)^2, C = +(a+b)/(a-b)^3, D = -b/(a-b)^2.
// The (a-b)^3 denominators make the cancellation near b ~ a catastrophic
// (thirteen digits gone at |b-a| ~ 1e-4 a), hence the same series switch,
// using 1/(w+b)^2 = sum_n (n+1) (-(b-a))^n / (w+a)^{n+2}.
double t2_reduced(double a, double b, double W) {
    const double d = b - a;
    if (std::abs(d) <= 0.25 * std::max(a, b)) {
        const double U = W / a, r = d / a;
        double sum = 0.0, rn = 1.0;
        for (int n = 0; n < 80; ++n) {
            const double term = (n + 1) * rn * km_moment(n + 4, U);
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
            rn *= -r;
        }
        return sum / (a * a);
    }
    const double d3 = d * d * d;
    const double A = (a + b) / d3;          // -(a+b)/(a-b)^3
    const double B = -a / (d * d);
    const double C = -(a + b) / d3;
    const double D = -b / (d * d);
    return A * log_ratio(W, a) + B * W / (a * (W + a)) + C * log_ratio(W, b) +
           D * W / (b * (W + b));
}

}  // namespace

double spectral_density(double omega, const ModelParams& p) {
    p.validate();
    if (omega < 0.0) throw domain_error("spectral_density: omega must be nonnegative");
    if (omega >= p.omega_c) return 0.0;
    return 2.0 * p.alpha * omega;
}

double renormalized_spectral_density(double omega, const ModelParams& p, double eta) {
    check_eta(eta);
    const double a = eta * p.delta;
    const double ratio = a / (omega + a);
    return ratio * ratio * spectral_density(omega, p);
}

std::complex<double> kernel(double x, const ModelParams& p, double eta,
                            double abs_tol, double rel_tol) {
    p.validate();
    check_eta(eta);
    if (x < 0.0) throw domain_error("kernel: x must be nonnegative");
    if (x == 0.0 || p.alpha == 0.0) return {jprime_total(p, eta), 0.0};
    return integrate_complex(
        [&](double w) {
            return renormalized_spectral_density(w, p, eta) *
                   std::exp(std::complex<double>(0.0, -w * x));
        },
        0.0, p.omega_c, abs_tol, rel_tol);
}

double exponent_integral(const ModelParams& p, double eta) {
    p.validate();
    check_eta(eta);
    const double a = eta * p.delta, W = p.omega_c;
    // int_0^W 2 alpha w / (2 (w+a)^2) dw = alpha [log((W+a)/a) - W/(W+a)]
    return p.alpha * (log_ratio(W, a) - W / (W + a));
}

double displacement_constant(const ModelParams& p, double eta) {
    p.validate();
    check_eta(eta);
    const double a = eta * p.delta, W = p.omega_c;
    // The integrand collapses to (alpha/2) (1 - a^2/(w+a)^2); the boundary
    // terms telescope to W^2/(W+a).
    return 0.5 * p.alpha * W * W / (W + a);
}

double displaced_boson_number(const ModelParams& p, double eta) {
    // Same integral as the dressing exponent up to the 1/2 vs 1/4 prefactor.
    return 0.5 * exponent_integral(p, eta);
}

double jprime_total(const ModelParams& p, double eta) {
    // int J' = 2 a^2 int J/(2(w+a)^2), the dressing exponent up to the 2 a^2.
    const double a = eta * p.delta;
    return 2.0 * a * a * exponent_integral(p, eta);
}

double bound_integral(const ModelParams& p, double eta, double b) {
    p.validate();
    check_eta(eta);
    if (b < 0.0) throw domain_error("bound_integral: b must be nonnegative");
    const double a = eta * p.delta;
    return 2.0 * p.alpha * a * a * t1_reduced(a, b, p.omega_c);
}

double residue_integral(const ModelParams& p, double eta, double b) {
    p.validate();
    check_eta(eta);
    if (!(b > 0.0)) throw domain_error("residue_integral: b must be positive");
    const double a = eta * p.delta;
    return 2.0 * p.alpha * a * a * t2_reduced(a, b, p.omega_c);
}

}  // namespace sbm
