#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaingraph/cycles.hpp"
#include "gaingraph/graph.hpp"

namespace gaingraph {

// Certificate that relabel(perm), optional converse, then switching maps
// one gain graph onto another.
struct SwitchingWitness {
    VertexPermutation perm;
    bool conversed = false;
    std::optional<SwitchingFunction> switching;
};

struct SwitchingIsoResult {
    bool result = false;
    std::optional<SwitchingWitness> witness;
    std::string reason;  // set when result is false
};

struct SignSymmetryResult {
    bool result = false;
    std::optional<SwitchingWitness> witness;
    // Census that fired Corollary 1's obstruction, when it did.
    std::optional<CycleCensus> obstruction;
};

inline constexpr int kDefaultAutomorphismCap = 16;
inline constexpr int kDefaultCensusObstructionK = 9;

// All automorphisms of the underlying graph in lexicographic order.
std::vector<VertexPermutation> automorphisms(const GainGraph& g,
                                             int cap = kDefaultAutomorphismCap);

bool is_structurally_symmetric(const GainGraph& g,
                               int cap = kDefaultAutomorphismCap);

// Decides whether g2 can be obtained from g1 by switching, optionally
// with converse and relabeling. Requires identical labeled underlying
// graphs; mismatches report result=false with a reason.
SwitchingIsoResult is_switching_isomorphic(const GainGraph& g1,
                                           const GainGraph& g2,
                                           int cap = kDefaultAutomorphismCap);

// Decides g ~ -g. Runs the odd-order census obstruction first (orders
// 3, 5, ... up to census_k), then the full basis-gain test.
SignSymmetryResult is_sign_symmetric(const GainGraph& g,
                                     int census_k = kDefaultCensusObstructionK,
                                     int cap = kDefaultAutomorphismCap);

// Applies a witness to g (relabel, optional converse, switching).
GainGraph apply_witness(const GainGraph& g, const SwitchingWitness& w);

}  // namespace gaingraph
