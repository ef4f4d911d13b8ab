#include "gaingraph/equivalence.hpp"

#include <algorithm>
#include <cmath>

namespace gaingraph {

namespace {

constexpr double kGainTol = 1e-9;

std::vector<uint64_t> adjacency_masks(const GainGraph& g) {
    std::vector<uint64_t> mask(g.n(), 0);
    for (const Edge& e : g.edges()) {
        mask[e.u] |= (1ULL << e.v);
        mask[e.v] |= (1ULL << e.u);
    }
    return mask;
}

}  // namespace

std::vector<VertexPermutation> automorphisms(const GainGraph& g, int cap) {
    int n = g.n();
    if (n > cap || n > 64)
        throw Error(ErrorCode::TooLarge,
                    "automorphism search capped at n = " +
                        std::to_string(std::min(cap, 64)));
    std::vector<uint64_t> adj = adjacency_masks(g);

    // Candidate images share degree and neighbor-degree multiset.
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
        for (int w : g.adjacency()[v])
            sig[v].push_back(static_cast<int>(g.adjacency()[w].size()));
        std::sort(sig[v].begin(), sig[v].end());
    }

    std::vector<VertexPermutation> found;
    VertexPermutation perm(n, -1);
    std::vector<char> used(n, 0);

    auto backtrack = [&](auto&& self, int v) -> void {
        if (v == n) {
            found.push_back(perm);
            return;
        }
        for (int image = 0; image < n; ++image) {
            if (used[image] || sig[image] != sig[v]) continue;
            bool ok = true;
            for (int w = 0; w < v && ok; ++w)
                ok = (((adj[v] >> w) & 1ULL) == ((adj[image] >> perm[w]) & 1ULL));
            if (!ok) continue;
            perm[v] = image;
            used[image] = 1;
            self(self, v + 1);
            used[image] = 0;
            perm[v] = -1;
        }
    };
    backtrack(backtrack, 0);
    return found;
}

bool is_structurally_symmetric(const GainGraph& g, int cap) {
    return automorphisms(g, cap).size() > 1;
}

namespace {

// Gain of the image cycle (pi(v0), pi(v1), ...) traversed in order.
Unit mapped_cycle_gain(const GainGraph& g, const Cycle& c,
                       const VertexPermutation& pi) {
    Unit phi = Unit::one();
    int k = c.length();
    for (int i = 0; i < k; ++i)
        phi = phi * g.gain(pi[c.vertices[i]], pi[c.vertices[(i + 1) % k]]);
    return phi;
}

// Tree-alignment recovery of the switching function with x = 1 at each
// component root; returns nullopt if some cotree edge fails to match.
std::optional<SwitchingFunction> recover_switching(const GainGraph& base,
                                                   const GainGraph& target) {
    int n = base.n();
    SwitchingFunction x(n, Unit::one());
    std::vector<char> visited(n, 0);
    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : base.adjacency()[v]) {
                if (visited[w]) continue;
                visited[w] = 1;
                x[w] = target.gain(v, w).conj() * x[v] * base.gain(v, w);
                stack.push_back(w);
            }
        }
    }
    for (const Edge& e : base.edges()) {
        Unit switched_gain = x[e.u] * e.gain * x[e.v].conj();
        if (!switched_gain.approx_equal(target.edges()[target.edge_index(e.u, e.v)].gain,
                                        kGainTol))
            return std::nullopt;
    }
    return x;
}

}  // namespace

GainGraph apply_witness(const GainGraph& g, const SwitchingWitness& w) {
    GainGraph h = relabeled(g, w.perm);
    if (w.conversed) h = converse(h);
    if (w.switching) h = switched(h, *w.switching);
    return h;
}

SwitchingIsoResult is_switching_isomorphic(const GainGraph& g1,
                                           const GainGraph& g2, int cap) {
    if (g1.n() != g2.n())
        return {false, std::nullopt, "different vertex count"};
    if (!same_underlying(g1, g2))
        return {false, std::nullopt, "different underlying graph"};

    CycleBasis basis = fundamental_cycle_basis(g1);
    std::vector<Unit> phi1;
    phi1.reserve(basis.cycles.size());
    for (const Cycle& c : basis.cycles) phi1.push_back(cycle_gain(g1, c));

    for (const VertexPermutation& pi : automorphisms(g1, cap)) {
        for (bool conversed : {false, true}) {
            bool match = true;
            for (size_t i = 0; i < basis.cycles.size() && match; ++i) {
                Unit expect = conversed ? phi1[i].conj() : phi1[i];
                match = mapped_cycle_gain(g2, basis.cycles[i], pi)
                            .approx_equal(expect, kGainTol);
            }
            if (!match) continue;
            GainGraph base = relabeled(g1, pi);
            if (conversed) base = converse(base);
            auto x = recover_switching(base, g2);
            if (!x) continue;
            return {true, SwitchingWitness{pi, conversed, std::move(x)}, ""};
        }
    }
    return {false, std::nullopt, "no automorphism matches the basis gains"};
}

SignSymmetryResult is_sign_symmetric(const GainGraph& g, int census_k, int cap) {
    for (int k = 3; k <= std::min(census_k, g.n()); k += 2) {
        CycleCensus census = cycle_census(g, k);
        if (!census_is_negation_symmetric(census))
            return {false, std::nullopt, std::move(census)};
    }
    SwitchingIsoResult full = is_switching_isomorphic(g, negated(g), cap);
    return {full.result, std::move(full.witness), std::nullopt};
}

}  // namespace gaingraph
