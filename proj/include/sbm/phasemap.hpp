#pragma once

#include <string>
#include <vector>

#include "sbm/model.hpp"

namespace sbm {

enum class CellLabel {
    delocalized_no_bound,  // eta finite, no discrete level below the edge
    delocalized_bound,     // eta finite, bound state present
    localized,             // eta collapsed below the floor
    failed,                // solver threw; recorded, not propagated
};

std::string to_string(CellLabel label);

struct PhaseDiagram {
    std::vector<double> delta_grid;
    std::vector<double> alpha_grid;
    // classification[i][j] labels (delta_grid[i], alpha_grid[j]).
    std::vector<std::vector<CellLabel>> classification;
    // Per-delta boundary couplings. boundary_bs is the self-consistent
    // critical coupling (the bound-state onset); boundary_dl is the
    // delocalized->localized flip located by bisecting the classifier over
    // [alpha_lo, alpha_hi], NaN when that range does not bracket the flip.
    std::vector<double> boundary_bs;
    std::vector<double> boundary_dl;
};

// Classification of a single parameter point, exactly as the sweep applies it.
CellLabel classify(const ModelParams& p);

// Classifies the full grid (inclusive linear grids in both directions; a
// single-point axis degenerates to its lower endpoint) and locates both
// boundary curves for every delta row. Cells are independent, so rows of
// work are distributed over `jobs` threads; every cell writes only its own
// slot and the result is bit-identical for any jobs value.
PhaseDiagram sweep(double delta_lo, double delta_hi, int n_delta,
                   double alpha_lo, double alpha_hi, int n_alpha,
                   int jobs = 0, int bisect_iters = 12);

}  // namespace sbm
