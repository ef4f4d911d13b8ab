#include "gaingraph/constructions.hpp"

#include <cmath>

namespace gaingraph {

GainGraph hermitian_double(const GainGraph& g, const GainMatrix& b) {
    int n = g.n();
    if (b.rows() != n || b.cols() != n)
        throw Error(ErrorCode::DimensionMismatch,
                    "block must match the graph order");
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            if (std::abs(b(u, v) - std::conj(b(v, u))) > 1e-12)
                throw Error(ErrorCode::NotHermitian, "block is not Hermitian");
            double mod = std::abs(b(u, v));
            if (mod > Unit::kModulusTol && std::abs(mod - 1.0) > Unit::kModulusTol)
                throw Error(ErrorCode::NonUnitEntry,
                            "block entries must be zero or unit modulus");
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.push_back(e);                                  // A
        edges.push_back({e.u + n, e.v + n, -e.gain});        // -A
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (std::abs(b(u, v)) > Unit::kModulusTol)
                edges.push_back(
                    {u, v + n, Unit::cartesian(b(u, v).real(), b(u, v).imag())});
    return GainGraph(2 * n, std::move(edges));
}

GainGraph identity_block_double(const GainGraph& g, const Unit& z) {
    int n = g.n();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.push_back(e);
        edges.push_back({e.u + n, e.v + n, -e.gain});
    }
    for (int u = 0; u < n; ++u) edges.push_back({u, u + n, z});
    return GainGraph(2 * n, std::move(edges));
}

GainGraph odd_anchor_double(const GainGraph& g, int anchor) {
    int n = g.n();
    if (anchor < 0 || anchor >= n)
        throw Error(ErrorCode::IndexOutOfRange, "anchor out of range");
    if (!underlying_properties(g).connected)
        throw Error(ErrorCode::NotConnected, "graph must be connected");
    GainGraph h = [&] {
        if (anchor == 0) return g;
        VertexPermutation p(n);
        for (int v = 0; v < n; ++v) p[v] = v;
        std::swap(p[0], p[anchor]);
        return relabeled(g, p);
    }();
    // Copy-1 rest occupies 1..n-1, copy-2 rest occupies n..2n-2.
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
        if (e.u == 0) {
            edges.push_back(e);                              // a
            edges.push_back({0, e.v + n - 1, -e.gain});      // -a
        } else {
            edges.push_back(e);                              // A'
            edges.push_back({e.u + n - 1, e.v + n - 1, -e.gain});  // -A'
        }
    }
    return GainGraph(2 * n - 1, std::move(edges));
}

GainGraph sylvester_double(const GainGraph& g, const std::optional<Unit>& z) {
    int n = g.n();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.push_back(e);                                  // A
        edges.push_back({e.u + n, e.v + n, -e.gain});        // -A
        edges.push_back({e.u, e.v + n, e.gain});             // A + zI, off-diagonal
        edges.push_back({e.v, e.u + n, e.gain.conj()});
    }
    if (z) {
        for (int u = 0; u < n; ++u) edges.push_back({u, u + n, *z});
    }
    return GainGraph(2 * n, std::move(edges));
}

GainGraph example2_fixture() {
    // omega = exp(i pi/3): a sixth of a turn. Nonzero upper-triangle
    // entries: (0,1)=1, (0,2)=1, (0,3)=conj(w), (0,4)=conj(w)^2,
    // (1,2)=conj(w)^2, (1,3)=conj(w)^2, (2,4)=conj(w)^2.
    Unit one = Unit::one();
    Unit wbar = Unit::turns(-1, 6);
    Unit wbar2 = Unit::turns(-2, 6);
    return GainGraph(5, {{0, 1, one},
                         {0, 2, one},
                         {0, 3, wbar},
                         {0, 4, wbar2},
                         {1, 2, wbar2},
                         {1, 3, wbar2},
                         {2, 4, wbar2}});
}

GainGraph gamma_s(int s) {
    if (s < 1) throw Error(ErrorCode::IndexOutOfRange, "s must be at least 1");
    Unit one = Unit::one();
    std::vector<Edge> edges;
    for (int i = 0; i < 6; ++i)
        edges.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6), one});
    edges.push_back({0, 3, Unit::minus_one()});
    edges.push_back({3, 5, one});
    for (int t = 0; t < s; ++t) {
        edges.push_back({0, 6 + t, one});
        edges.push_back({4, 6 + t, one});
    }
    return GainGraph(6 + s, std::move(edges));
}

GainGraph all_imaginary(const GainGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.m());
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, Unit::i()});
    return GainGraph(g.n(), std::move(edges));
}

GainGraph fig3a_fixture() {
    Unit one = Unit::one();
    return GainGraph(6, {{0, 1, one},
                         {0, 2, one},
                         {1, 2, one},
                         {2, 3, one},
                         {2, 4, one},
                         {3, 4, one},
                         {4, 5, one}});
}

GainGraph fig3b_fixture() {
    Unit one = Unit::one();
    return GainGraph(6, {{0, 1, one},
                         {0, 2, one},
                         {1, 2, one},
                         {1, 3, one},
                         {2, 3, one},
                         {2, 4, one},
                         {3, 5, one},
                         {4, 5, one}});
}

}  // namespace gaingraph
