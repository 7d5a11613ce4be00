#include <cmath>

#include "doctest.h"
#include "sbm/model.hpp"
#include "sbm/spectrum.hpp"
#include "sbm/variational.hpp"

using namespace sbm;

namespace {

double self_consistent_eta(const ModelParams& p) {
  const VariationalSolution s = solve_eta(p);
  REQUIRE(s.converged);
  REQUIRE(s.phase == Phase::delocalized);
  return s.eta;
}

}  // namespace

TEST_CASE("y_function: domain and monotonicity") {
  const ModelParams p = make_params(0.1, 0.55);
  const double eta = self_consistent_eta(p);
  const double edge = -eta * p.delta / 2.0;
  CHECK_THROWS_AS(y_function(edge + 1e-6, p, eta), domain_error);
  CHECK_NOTHROW(y_function(edge, p, eta));
  // Strictly decreasing in E: walking the grid downward from the edge, y must
  // climb at every one of the 100 points.
  double prev = y_function(edge, p, eta);
  for (int i = 1; i <= 100; ++i) {
    const double e = edge - 0.02 * i;
    const double y = y_function(e, p, eta);
    CHECK(y > prev);
    prev = y;
  }
}

TEST_CASE("bound state appears only above the onset coupling") {
  const ModelParams weak = make_params(0.1, 0.05);
  const ModelParams mid = make_params(0.1, 0.25);
  const ModelParams strong = make_params(0.1, 0.55);
  CHECK_FALSE(bound_state(weak, self_consistent_eta(weak)).exists);
  CHECK_FALSE(bound_state(mid, self_consistent_eta(mid)).exists);
  CHECK(bound_state(strong, self_consistent_eta(strong)).exists);
}

TEST_CASE("bound state reference values at delta = 0.1, alpha = 0.55") {
  const ModelParams p = make_params(0.1, 0.55);
  const BoundStateResult b = bound_state(p, self_consistent_eta(p));
  REQUIRE(b.exists);
  CHECK(b.energy == doctest::Approx(-0.010052694257383126).epsilon(1e-10));
  CHECK(b.residue == doctest::Approx(0.28669710884511102).epsilon(1e-9));
  CHECK(b.detuning == doctest::Approx(-0.00034244494554513949).epsilon(1e-7));
  CHECK(b.detuning <= 0.0);
  CHECK(b.energy < -p.delta * self_consistent_eta(p) / 2.0);
}

TEST_CASE("marginal binding counts as no bound state") {
  // delta = omega_c = eta = 1 makes the level-shift margin evaluate to exactly
  // zero in binary arithmetic (every intermediate is a power of two), probing
  // the strict inequality deterministically.
  CHECK_FALSE(bound_state(make_params(1.0, 1.0), 1.0).exists);
}

TEST_CASE("critical coupling reference values and bracket") {
  const double ac_01 = critical_alpha(make_params(0.1, 0.0));
  CHECK(ac_01 == doctest::Approx(0.51211869693361223).epsilon(1e-8));
  const double ac_tiny = critical_alpha(make_params(1e-3, 0.0));
  CHECK(ac_tiny == doctest::Approx(0.50000135907530785).epsilon(1e-8));
  CHECK(ac_tiny > 0.5);
  CHECK(ac_tiny < 0.5 + 1e-3 / 2.0);
  CHECK(ac_01 < 0.5 + 0.1 / 2.0);
}

TEST_CASE("bound state flips exactly at the critical coupling") {
  const double ac = critical_alpha(make_params(0.1, 0.0));
  const ModelParams below = make_params(0.1, ac - 1e-6);
  const ModelParams above = make_params(0.1, ac + 1e-6);
  CHECK_FALSE(bound_state(below, self_consistent_eta(below)).exists);
  CHECK(bound_state(above, self_consistent_eta(above)).exists);
}

TEST_CASE("ground energy: free limit, branch switch, localized rejection") {
  const GroundState free = ground_energy(make_params(0.1, 0.0));
  CHECK(free.energy == doctest::Approx(-0.05).epsilon(1e-13));
  CHECK(free.branch == Branch::zero_excitation);
  CHECK(free.C == 0.0);

  const GroundState strong = ground_energy(make_params(0.1, 0.55));
  CHECK(strong.branch == Branch::one_excitation);
  // Bound branch must undercut the zero-excitation value.
  CHECK(strong.energy < -strong.eta * 0.1 / 2.0 - strong.C);

  CHECK_THROWS_AS(ground_energy(make_params(1e-3, 1.2)), domain_error);
}

TEST_CASE("ground-energy derivative reference values at delta = 0.1") {
  const DerivativeResult d03 = ground_energy_derivative(make_params(0.1, 0.3));
  CHECK_FALSE(d03.branch_crossed);
  CHECK(d03.value == doctest::Approx(-0.41906706554920015).epsilon(1e-6));

  // alpha -> 0 limit: dE/dalpha = (delta/2) L - omega_c^2 / (2 (omega_c+delta)),
  // L = ln((omega_c+delta)/delta) - omega_c/(omega_c+delta); at delta = 0.1
  // this is -0.3801052363.
  const DerivativeResult d0 = ground_energy_derivative(make_params(0.1, 1e-4));
  CHECK(d0.value == doctest::Approx(-0.3801052363).epsilon(2e-3));
}

TEST_CASE("derivative stencils that straddle the transition are flagged") {
  const double ac = critical_alpha(make_params(0.1, 0.0));
  const DerivativeResult d = ground_energy_derivative(make_params(0.1, ac), 0.01);
  CHECK(d.branch_crossed);
  CHECK(d.branch_lo == Branch::zero_excitation);
  CHECK(d.branch_hi == Branch::one_excitation);
}

TEST_CASE("Richardson extrapolation refines but does not change the answer") {
  const ModelParams p = make_params(0.1, 0.3);
  const DerivativeResult plain = ground_energy_derivative(p, 1e-3, false);
  const DerivativeResult rich = ground_energy_derivative(p, 1e-3, true);
  CHECK_FALSE(rich.branch_crossed);
  CHECK(rich.value == doctest::Approx(plain.value).epsilon(1e-7));
}

TEST_CASE("derivative stencil must stay inside alpha >= 0") {
  CHECK_THROWS_AS(ground_energy_derivative(make_params(0.1, 1e-6), 1e-4), domain_error);
}

TEST_CASE("bisections refuse tolerances below bracket resolution") {
  CHECK_THROWS_AS(critical_alpha(make_params(0.1, 0.0), 1e-300), numerical_error);
}
