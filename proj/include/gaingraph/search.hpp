#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gaingraph/cycles.hpp"
#include "gaingraph/graph.hpp"

namespace gaingraph {

struct AnnealConfig {
    int iterations = 20000;
    int restarts = 5;
    double t0 = 1.0;
    double cooling = 0.995;      // geometric factor, in (0, 1)
    double step_sigma0 = 0.5;    // radians
    uint64_t seed = 0;
};

struct SearchResult {
    GainGraph gains;
    double objective = 0.0;
    std::vector<std::pair<Cycle, Unit>> basis_gains;
    long long accepted_moves = 0;
    int restart_index = 0;
};

// Sum over j of (lambda_j + lambda_{n-j+1})^2; zero iff the spectrum is
// symmetric to solver accuracy.
double symmetry_objective(const GainGraph& g);

// Metropolis annealing over one angle per cotree edge, spanning tree
// pinned at gain 1. Deterministic for a fixed config.
SearchResult anneal_search(const GainGraph& underlying, const AnnealConfig& cfg);

// Independent searches with derived seeds; keeps objectives < 1e-6,
// deduplicated by switching isomorphism.
std::vector<SearchResult> distinct_solutions(const GainGraph& underlying,
                                             const AnnealConfig& cfg, int runs);

inline constexpr double kSearchSuccessThreshold = 1e-6;

}  // namespace gaingraph
