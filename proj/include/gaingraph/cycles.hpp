#pragma once

#include <cstdint>
#include <vector>

#include "gaingraph/graph.hpp"

namespace gaingraph {

// A simple cycle as an ordered vertex list, closed implicitly. Canonical
// form: starts at its minimum vertex, second vertex is the smaller of the
// two cycle-neighbors of the start.
struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool odd() const { return length() % 2 == 1; }
    Cycle canonical() const;
    bool operator==(const Cycle& o) const = default;
    bool operator<(const Cycle& o) const { return vertices < o.vertices; }
};

struct CycleBasis {
    std::vector<Cycle> cycles;
    std::vector<std::pair<int, int>> tree_edges;  // spanning forest used
};

struct CensusBucket {
    double value = 0.0;  // representative Re(gain): mean of members
    long long count = 0;
};

// Order-k cycles grouped by the real part of their gain.
struct CycleCensus {
    int k = 0;
    std::vector<CensusBucket> buckets;  // sorted by value
    long long total() const;
};

// Vertex-disjoint single edges and cycles; order = 2*edges + cycle sizes.
struct ElementarySubgraph {
    std::vector<std::pair<int, int>> edges;
    std::vector<Cycle> cycles;

    int components() const {
        return static_cast<int>(edges.size() + cycles.size());
    }
};

inline constexpr long long kDefaultCycleBudget = 10'000'000;
inline constexpr int kDefaultElementaryCap = 14;
inline constexpr double kCensusMergeTol = 1e-9;

// Product of gains along the canonical traversal. Throws NotACycle when
// the vertex list is not a simple cycle of the host graph.
Unit cycle_gain(const GainGraph& g, const Cycle& c);

// One fundamental cycle per cotree edge; per-component spanning trees.
CycleBasis fundamental_cycle_basis(const GainGraph& g);

// A basis of simple odd cycles; requires a 2-connected nonbipartite
// underlying graph.
CycleBasis odd_cycle_basis(const GainGraph& g);

// Every simple cycle of length <= max_len, canonical, lexicographically
// sorted. Throws BudgetExceeded past the cap.
std::vector<Cycle> enumerate_cycles(const GainGraph& g, int max_len,
                                    long long budget = kDefaultCycleBudget);

// Groups order-k cycles by Re(gain), merging buckets closer than tol.
CycleCensus cycle_census(const GainGraph& g, int k,
                         long long budget = kDefaultCycleBudget,
                         double tol = kCensusMergeTol);

// True iff every bucket at mu has a matching bucket at -mu with the same
// count (Corollary 1's obstruction fails to fire).
bool census_is_negation_symmetric(const CycleCensus& c,
                                  double tol = kCensusMergeTol);

// All order-j elementary subgraphs. Capped at cap vertices.
std::vector<ElementarySubgraph> elementary_subgraphs(
    const GainGraph& g, int j, int cap = kDefaultElementaryCap);

// Characteristic-polynomial coefficient a_j computed combinatorially from
// elementary subgraphs; a_0 = 1.
double sachs_coefficient(const GainGraph& g, int j,
                         int cap = kDefaultElementaryCap);

// m - n + number of components.
int cycle_space_dimension(const GainGraph& g);

// m <= 3/2 (n - 1).
bool satisfies_edge_bound(const GainGraph& g);

// GF(2) edge-indicator rank of a set of cycles within g.
int gf2_rank(const GainGraph& g, const std::vector<Cycle>& cycles);

}  // namespace gaingraph
