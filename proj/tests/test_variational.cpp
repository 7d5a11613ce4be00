#include <cmath>

#include "doctest.h"
#include "sbm/model.hpp"
#include "sbm/spectral.hpp"
#include "sbm/variational.hpp"

using namespace sbm;

TEST_CASE("zero coupling leaves the tunneling undressed") {
  const VariationalSolution s = solve_eta(make_params(0.1, 0.0));
  CHECK(s.converged);
  CHECK(s.eta == 1.0);  // exp(-0) exactly, first iterate
  CHECK(s.phase == Phase::delocalized);
}

TEST_CASE("weak coupling barely dresses the tunneling") {
  const VariationalSolution s = solve_eta(make_params(0.1, 1e-6));
  CHECK(s.converged);
  CHECK(std::abs(s.eta - 1.0) < 1e-4);
  CHECK(s.eta < 1.0);
}

TEST_CASE("deep strong coupling collapses to the localized phase") {
  const VariationalSolution s = solve_eta(make_params(1e-3, 1.2));
  CHECK(s.converged);
  CHECK(s.phase == Phase::localized);
  CHECK(s.eta < defaults::eta_floor);
}

TEST_CASE("converged solutions satisfy the fixed-point equation") {
  for (const double alpha : {0.05, 0.25, 0.46, 0.55}) {
    CAPTURE(alpha);
    const ModelParams p = make_params(0.1, alpha);
    const VariationalSolution s = solve_eta(p);
    REQUIRE(s.converged);
    const double defect = std::abs(s.eta - std::exp(-exponent_integral(p, s.eta)));
    CHECK(defect <= 10.0 * defaults::eta_tol);
  }
}

TEST_CASE("closed-form and quadrature exponent routes agree") {
  for (const double alpha : {0.05, 0.25, 0.55}) {
    CAPTURE(alpha);
    const ModelParams p = make_params(0.1, alpha);
    const double eta_cf = solve_eta(p).eta;
    const double eta_q = solve_eta(p, defaults::eta_tol, defaults::max_iter,
                                   ExponentRoute::quadrature).eta;
    CHECK(std::abs(eta_cf - eta_q) <= 1e-8);
  }
}

TEST_CASE("dressing factor decreases monotonically with coupling") {
  double prev = 1.0 + 1e-15;
  for (const double alpha : {0.02, 0.1, 0.2, 0.3, 0.4, 0.46, 0.5, 0.55, 0.6}) {
    CAPTURE(alpha);
    const VariationalSolution s = solve_eta(make_params(0.1, alpha));
    REQUIRE(s.converged);
    CHECK(s.eta < prev);
    prev = s.eta;
  }
}

TEST_CASE("dressing factor reference values at delta = 0.1") {
  // Frozen from two independent implementations of the same fixed point
  // agreeing to ~3e-12.
  struct Row { double alpha, eta; };
  const Row rows[] = {
      {0.05, 0.925267821498},
      {0.25, 0.622591676110},
      {0.46, 0.312950750553},
      {0.5121, 0.242398441022},
      {0.55, 0.194204986237},
      {0.60, 0.136109098422},
  };
  for (const Row& r : rows) {
    CAPTURE(r.alpha);
    const VariationalSolution s = solve_eta(make_params(0.1, r.alpha));
    REQUIRE(s.converged);
    CHECK(s.eta == doctest::Approx(r.eta).epsilon(5e-11));
  }
}

TEST_CASE("displacement constant: sign, zero at alpha = 0, linear in alpha") {
  const double eta = 0.6;
  CHECK(displacement_constant_C(make_params(0.1, 0.0), eta) == 0.0);
  const double c1 = displacement_constant_C(make_params(0.1, 0.2), eta);
  const double c2 = displacement_constant_C(make_params(0.1, 0.4), eta);
  CHECK(c1 > 0.0);
  CHECK(c2 == doctest::Approx(2.0 * c1).epsilon(1e-13));
}
