#include <cmath>

#include "doctest.h"
#include "sbm/model.hpp"
#include "sbm/phasemap.hpp"
#include "sbm/spectrum.hpp"

using namespace sbm;

TEST_CASE("classify: one label per regime") {
  CHECK(classify(make_params(0.1, 0.25)) == CellLabel::delocalized_no_bound);
  CHECK(classify(make_params(0.1, 0.55)) == CellLabel::delocalized_bound);
  CHECK(classify(make_params(1e-3, 1.2)) == CellLabel::localized);
  CHECK(to_string(CellLabel::delocalized_no_bound) == "delocalized-no-bound-state");
  CHECK(to_string(CellLabel::delocalized_bound) == "delocalized-bound-state");
  CHECK(to_string(CellLabel::localized) == "localized");
  CHECK(to_string(CellLabel::failed) == "failed");
}

TEST_CASE("1x1 sweep reduces to a direct classification") {
  const PhaseDiagram d = sweep(0.1, 0.1, 1, 0.55, 0.55, 1, 1);
  REQUIRE(d.delta_grid.size() == 1);
  REQUIRE(d.alpha_grid.size() == 1);
  CHECK(d.delta_grid[0] == 0.1);
  CHECK(d.alpha_grid[0] == 0.55);
  CHECK(d.classification[0][0] == classify(make_params(0.1, 0.55)));
}

TEST_CASE("parallel sweep is bit-identical to the serial one") {
  const PhaseDiagram serial = sweep(0.01, 0.3, 5, 0.0, 1.3, 7, 1);
  const PhaseDiagram threaded = sweep(0.01, 0.3, 5, 0.0, 1.3, 7, 3);
  REQUIRE(serial.classification.size() == threaded.classification.size());
  for (std::size_t i = 0; i < serial.classification.size(); ++i)
    for (std::size_t j = 0; j < serial.classification[i].size(); ++j)
      CHECK(serial.classification[i][j] == threaded.classification[i][j]);
  for (std::size_t i = 0; i < serial.boundary_bs.size(); ++i) {
    // Bitwise equality, not approximate: determinism is the contract.
    CHECK(serial.boundary_bs[i] == threaded.boundary_bs[i]);
    CHECK(serial.boundary_dl[i] == threaded.boundary_dl[i]);
  }
}

TEST_CASE("bound-state boundary is the self-consistent critical coupling") {
  const PhaseDiagram d = sweep(0.1, 0.1, 1, 0.0, 1.3, 2, 1);
  CHECK(d.boundary_bs[0] == critical_alpha(make_params(0.1, 0.0)));
}

TEST_CASE("boundary reference values") {
  // Frozen from a 30-iteration bisection in an independent implementation;
  // the sweep uses 12 iterations over [0, 1.3], so the classifier boundary
  // carries ~1.3/4096 = 3.2e-4 of bisection resolution on top.
  struct Row { double delta, dl, bs; };
  const Row rows[] = {
      {1e-3, 0.700468, 0.500001},
      {0.1, 0.913839, 0.512119},
      {0.3, 0.985451, 0.577558},
  };
  for (const Row& r : rows) {
    CAPTURE(r.delta);
    const PhaseDiagram d = sweep(r.delta, r.delta, 1, 0.0, 1.3, 2, 0);
    CHECK(std::abs(d.boundary_dl[0] - r.dl) <= 4e-4);
    CHECK(std::abs(d.boundary_bs[0] - r.bs) <= 2e-6);
    CHECK(d.boundary_bs[0] < d.boundary_dl[0]);
  }
}

TEST_CASE("located boundary is consistent with the cell classifications") {
  const PhaseDiagram d = sweep(0.1, 0.1, 1, 0.0, 1.3, 27, 1);
  const double dl = d.boundary_dl[0];
  REQUIRE(std::isfinite(dl));
  // Every cell strictly below the boundary must be delocalized and every cell
  // strictly above localized; the flip happens within one bisection slack.
  const double slack = 1.3 / 4096.0;
  for (std::size_t j = 0; j < d.alpha_grid.size(); ++j) {
    const double alpha = d.alpha_grid[j];
    if (alpha < dl - slack) CHECK(d.classification[0][j] != CellLabel::localized);
    if (alpha > dl + slack) CHECK(d.classification[0][j] == CellLabel::localized);
  }
}

TEST_CASE("out-of-bracket boundary reports NaN rather than a fabricated root") {
  // alpha range entirely inside the delocalized region: no flip to find.
  const PhaseDiagram d = sweep(0.1, 0.1, 1, 0.0, 0.3, 4, 1);
  CHECK(std::isnan(d.boundary_dl[0]));
}

TEST_CASE("sweep input validation") {
  CHECK_THROWS_AS(sweep(0.0, 0.1, 2, 0.0, 1.0, 2), domain_error);   // delta_lo > 0 required
  CHECK_THROWS_AS(sweep(0.1, 0.05, 2, 0.0, 1.0, 2), domain_error);  // inverted delta range
  CHECK_THROWS_AS(sweep(0.1, 0.2, 0, 0.0, 1.0, 2), domain_error);   // n_delta >= 1
  CHECK_THROWS_AS(sweep(0.1, 0.2, 2, 1.0, 0.0, 2), domain_error);   // inverted alpha range
  CHECK_THROWS_AS(sweep(0.1, 0.2, 2, 0.0, 1.0, 0), domain_error);   // n_alpha >= 1
}
