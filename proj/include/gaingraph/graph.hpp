#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gaingraph/unit.hpp"

namespace gaingraph {

using GainMatrix = Eigen::MatrixXcd;

// One undirected edge with the gain of its canonical orientation u -> v,
// u < v. The reverse gain is the conjugate and is never stored.
struct Edge {
    int u = 0;
    int v = 0;
    Unit gain;
};

// Per-vertex complex units, the diagonal of a switching matrix X.
using SwitchingFunction = std::vector<Unit>;

// p[u] is the new label of vertex u.
using VertexPermutation = std::vector<int>;

struct UnderlyingProperties {
    bool connected = false;
    bool bipartite = false;
    bool two_connected = false;
    int edge_count = 0;
};

// Simple undirected graph with a unit gain per edge. Immutable after
// construction; the constructor enforces all type invariants.
class GainGraph {
public:
    GainGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    bool has_edge(int u, int v) const;
    // Index into edges() of the edge {min(u,v), max(u,v)}, or -1.
    int edge_index(int u, int v) const;
    // Gain of the oriented edge u -> v (conjugated when v < u).
    Unit gain(int u, int v) const;

private:
    int n_;
    std::vector<Edge> edges_;          // sorted by (u, v)
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// Re-checks every type invariant; throws on violation. Construction
// already enforces these, so this is primarily for documents built by
// hand and for tests.
void validate(const GainGraph& g);

GainMatrix gain_matrix(const GainGraph& g);

// Edge gains become x[u] * psi(uv) * conj(x[v]).
GainGraph switched(const GainGraph& g, const SwitchingFunction& x);

// Every gain multiplied by -1.
GainGraph negated(const GainGraph& g);

// Every gain conjugated (all orientations reversed).
GainGraph converse(const GainGraph& g);

// Vertex u becomes p[u]; gains carried along (conjugating where the
// canonical orientation flips).
GainGraph relabeled(const GainGraph& g, const VertexPermutation& p);

// Block graph on n1 + n2 vertices; g2's indices shifted by n1.
GainGraph disjoint_union(const GainGraph& g1, const GainGraph& g2);

// Standard predicates on the underlying graph; gains ignored.
UnderlyingProperties underlying_properties(const GainGraph& g);

// True when the two graphs have the same vertex count, identical edge
// sets and gains equal within tol.
bool approx_equal(const GainGraph& a, const GainGraph& b, double tol = 1e-9);

// True when the underlying (unlabeled gains dropped) edge sets coincide.
bool same_underlying(const GainGraph& a, const GainGraph& b);

// Builds a gain graph from a Hermitian matrix whose entries are 0 or
// unit modulus with zero diagonal. Exact gains are not recovered.
GainGraph from_gain_matrix(const GainMatrix& m);

}  // namespace gaingraph
