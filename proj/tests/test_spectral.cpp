#include <cmath>
#include <complex>

#include "doctest.h"
#include "sbm/model.hpp"
#include "sbm/oracle.hpp"
#include "sbm/quadrature.hpp"
#include "sbm/spectral.hpp"

using namespace sbm;

TEST_CASE("spectral_density: ohmic ramp with a sharp cutoff") {
  const ModelParams p = make_params(0.1, 0.55);
  CHECK(spectral_density(0.0, p) == 0.0);
  CHECK(spectral_density(0.5, p) == doctest::Approx(2.0 * 0.55 * 0.5).epsilon(1e-15));
  // At and beyond the cutoff the bath is empty.
  CHECK(spectral_density(1.0, p) == 0.0);
  CHECK(spectral_density(2.0, p) == 0.0);
  CHECK_THROWS_AS(spectral_density(-0.1, p), domain_error);
}

TEST_CASE("renormalized density is suppressed at high frequency, intact at low") {
  const ModelParams p = make_params(0.1, 0.25);
  const double eta = 0.7;
  const double a = eta * p.delta;
  const double w = 0.5;
  const double expect = a * a * spectral_density(w, p) / ((w + a) * (w + a));
  CHECK(renormalized_spectral_density(w, p, eta) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(renormalized_spectral_density(w, p, eta) < spectral_density(w, p));
  CHECK_THROWS_AS(renormalized_spectral_density(0.5, p, 0.0), domain_error);
  CHECK_THROWS_AS(renormalized_spectral_density(0.5, p, 1.5), domain_error);
}

TEST_CASE("kernel at x = 0 is real and equals the total renormalized weight") {
  const ModelParams p = make_params(0.1, 0.25);
  const double eta = 0.8;
  const std::complex<double> k0 = kernel(0.0, p, eta);
  CHECK(k0.imag() == 0.0);
  CHECK(k0.real() == doctest::Approx(jprime_total(p, eta)).epsilon(1e-10));
  CHECK_THROWS_AS(kernel(-1.0, p, eta), domain_error);
}

TEST_CASE("kernel at finite delay matches a brute-force Riemann sum") {
  const ModelParams p = make_params(0.1, 0.25);
  const double eta = 0.8;
  const double x = 5.0;
  const std::complex<double> k = kernel(x, p, eta);
  const double re = riemann_integral(
      [&](double w) { return renormalized_spectral_density(w, p, eta) * std::cos(w * x); },
      0.0, p.omega_c, 2000000);
  const double im = riemann_integral(
      [&](double w) { return -renormalized_spectral_density(w, p, eta) * std::sin(w * x); },
      0.0, p.omega_c, 2000000);
  CHECK(k.real() == doctest::Approx(re).epsilon(1e-8));
  CHECK(k.imag() == doctest::Approx(im).epsilon(1e-8));
}

TEST_CASE("closed-form reservoir integrals agree with adaptive quadrature") {
  const ModelParams p = make_params(0.1, 0.25);
  const double eta = 0.62259167611;  // near the self-consistent value
  const double a = eta * p.delta;

  const double i_quad = integrate(
      [&](double w) { return spectral_density(w, p) / (2.0 * (w + a) * (w + a)); },
      0.0, p.omega_c, 1e-14, 1e-14);
  CHECK(exponent_integral(p, eta) == doctest::Approx(i_quad).epsilon(1e-10));
  CHECK(displaced_boson_number(p, eta) ==
        doctest::Approx(0.5 * exponent_integral(p, eta)).epsilon(1e-14));

  const double c_quad = integrate(
      [&](double w) {
        const double xi = w / (w + a);
        return spectral_density(w, p) * xi * (2.0 - xi) / (4.0 * w);
      },
      0.0, p.omega_c, 1e-14, 1e-14);
  CHECK(displacement_constant(p, eta) == doctest::Approx(c_quad).epsilon(1e-10));

  const double jp_quad = integrate(
      [&](double w) { return renormalized_spectral_density(w, p, eta); },
      0.0, p.omega_c, 1e-14, 1e-14);
  CHECK(jprime_total(p, eta) == doctest::Approx(jp_quad).epsilon(1e-10));
}

TEST_CASE("level-shift and residue integrals across the series/partial-fraction seam") {
  const ModelParams p = make_params(0.1, 0.25);
  const double eta = 0.62259167611;
  const double a = eta * p.delta;
  // b values straddle the b ~ a neighborhood where the partial-fraction form
  // loses (a-b)^3 digits and the series branch takes over, plus far-field b.
  const double bs[] = {1e-4, 0.3 * a, a, 1.7 * a, 0.2, 5.0};
  for (const double b : bs) {
    CAPTURE(b);
    const double b_quad = integrate(
        [&](double w) { return renormalized_spectral_density(w, p, eta) / (w + b); },
        0.0, p.omega_c, 1e-14, 1e-12);
    CHECK(bound_integral(p, eta, b) == doctest::Approx(b_quad).epsilon(1e-10));
    const double r_quad = integrate(
        [&](double w) {
          return renormalized_spectral_density(w, p, eta) / ((w + b) * (w + b));
        },
        0.0, p.omega_c, 1e-14, 1e-12);
    CHECK(residue_integral(p, eta, b) == doctest::Approx(r_quad).epsilon(1e-10));
  }
  // b = 0 is legal for the level shift (integrand ~ J'(w)/w is integrable)...
  CHECK(bound_integral(p, eta, 0.0) ==
        doctest::Approx(2.0 * p.alpha * a * p.omega_c / (p.omega_c + a)).epsilon(1e-12));
  // ...but not for the residue integral.
  CHECK_THROWS_AS(residue_integral(p, eta, 0.0), domain_error);
  CHECK_THROWS_AS(bound_integral(p, eta, -0.1), domain_error);
}

TEST_CASE("check_eta guards the physical dressing range") {
  CHECK_NOTHROW(check_eta(1.0));
  CHECK_NOTHROW(check_eta(1e-12));
  CHECK_THROWS_AS(check_eta(0.0), domain_error);
  CHECK_THROWS_AS(check_eta(-0.3), domain_error);
  CHECK_THROWS_AS(check_eta(1.0 + 1e-9), domain_error);
  CHECK_THROWS_AS(check_eta(std::nan("")), domain_error);
}
