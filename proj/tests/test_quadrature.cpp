#include <cmath>
#include <complex>

#include "doctest.h"
#include "sbm/quadrature.hpp"

using sbm::integrate;
using sbm::integrate_complex;

TEST_CASE("integrate reproduces elementary antiderivatives") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("integrate_complex splits real and imaginary parts") {
  // int_0^1 exp(-ix) dx = sin(1) + i(cos(1) - 1)
  const std::complex<double> got =
      integrate_complex([](double x) { return std::exp(std::complex<double>(0.0, -x)); },
                        0.0, 1.0);
  CHECK(got.real() == doctest::Approx(std::sin(1.0)).epsilon(1e-12));
  CHECK(got.imag() == doctest::Approx(std::cos(1.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("unreachable tolerance raises numerical_error with the achieved estimate") {
  // ~1e8 oscillations across the interval: no fixed workspace can certify 1e-30.
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1e8 * x); }, 0.0, 1.0,
                            1e-30, 1e-30),
                  sbm::numerical_error);
  try {
    integrate([](double x) { return std::sin(1e8 * x); }, 0.0, 1.0, 1e-30, 1e-30);
  } catch (const sbm::numerical_error& e) {
    CHECK(std::isfinite(e.achieved));
    CHECK(e.achieved > 1e-30);
  }
}
