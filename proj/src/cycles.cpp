#include "gaingraph/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

namespace gaingraph {

Cycle Cycle::canonical() const {
    int k = length();
    if (k < 3) return *this;
    int pos = static_cast<int>(
        std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    int prev = vertices[(pos + k - 1) % k];
    int next = vertices[(pos + 1) % k];
    std::vector<int> out;
    out.reserve(k);
    if (next <= prev) {
        for (int i = 0; i < k; ++i) out.push_back(vertices[(pos + i) % k]);
    } else {
        for (int i = 0; i < k; ++i) out.push_back(vertices[(pos - i + k) % k]);
    }
    return Cycle{std::move(out)};
}

long long CycleCensus::total() const {
    long long t = 0;
    for (const auto& b : buckets) t += b.count;
    return t;
}

Unit cycle_gain(const GainGraph& g, const Cycle& c) {
    int k = c.length();
    if (k < 3) throw Error(ErrorCode::NotACycle, "cycle needs at least 3 vertices");
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::NotACycle, "repeated vertex in cycle");
    Cycle canon = c.canonical();
    Unit phi = Unit::one();
    for (int i = 0; i < k; ++i) {
        int u = canon.vertices[i];
        int v = canon.vertices[(i + 1) % k];
        if (!g.has_edge(u, v))
            throw Error(ErrorCode::NotACycle,
                        "vertices " + std::to_string(u) + "," + std::to_string(v) +
                            " not adjacent");
        phi = phi * g.gain(u, v);
    }
    return phi;
}

namespace {

// BFS spanning forest: parent edge per vertex, roots have parent -1.
struct Forest {
    std::vector<int> parent;          // parent vertex (-1 at roots)
    std::vector<int> depth;
    std::vector<char> tree_edge;      // per edge index of g
};

Forest spanning_forest(const GainGraph& g) {
    Forest f;
    f.parent.assign(g.n(), -2);
    f.depth.assign(g.n(), 0);
    f.tree_edge.assign(g.m(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (f.parent[s] != -2) continue;
        f.parent[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adjacency()[v]) {
                if (f.parent[w] != -2) continue;
                f.parent[w] = v;
                f.depth[w] = f.depth[v] + 1;
                f.tree_edge[g.edge_index(v, w)] = 1;
                q.push(w);
            }
        }
    }
    return f;
}

Cycle fundamental_cycle(const Forest& f, int u, int v) {
    // Path u..lca plus reversed path v..lca, closed by the cotree edge.
    std::vector<int> pu{u}, pv{v};
    int a = u, b = v;
    while (f.depth[a] > f.depth[b]) pu.push_back(a = f.parent[a]);
    while (f.depth[b] > f.depth[a]) pv.push_back(b = f.parent[b]);
    while (a != b) {
        pu.push_back(a = f.parent[a]);
        pv.push_back(b = f.parent[b]);
    }
    // pu ends at the lca, pv ends one step before it.
    pv.pop_back();
    std::vector<int> cyc = std::move(pu);
    for (auto it = pv.rbegin(); it != pv.rend(); ++it) cyc.push_back(*it);
    return Cycle{std::move(cyc)}.canonical();
}

// Incremental GF(2) elimination over edge-indicator bitsets.
class Gf2Accumulator {
public:
    explicit Gf2Accumulator(int bits) : words_((bits + 63) / 64) {}

    static std::vector<uint64_t> indicator(const GainGraph& g, const Cycle& c,
                                           int words) {
        std::vector<uint64_t> row(words, 0);
        int k = c.length();
        for (int i = 0; i < k; ++i) {
            int idx = g.edge_index(c.vertices[i], c.vertices[(i + 1) % k]);
            if (idx < 0) throw Error(ErrorCode::NotACycle, "cycle leaves the graph");
            row[idx / 64] ^= (1ULL << (idx % 64));
        }
        return row;
    }

    // Reduces row against the pivots; inserts if independent.
    bool try_insert(std::vector<uint64_t> row) {
        for (const auto& [pivot, r] : rows_) {
            if (row[pivot / 64] & (1ULL << (pivot % 64)))
                for (size_t w = 0; w < row.size(); ++w) row[w] ^= r[w];
        }
        int pivot = -1;
        for (int w = 0; w < words_ && pivot < 0; ++w)
            if (row[w]) pivot = w * 64 + std::countr_zero(row[w]);
        if (pivot < 0) return false;
        rows_.emplace_back(pivot, std::move(row));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int words_;
    std::vector<std::pair<int, std::vector<uint64_t>>> rows_;
};

// Splits an even-degree edge set into edge-disjoint simple cycles.
std::vector<Cycle> decompose_into_cycles(const GainGraph& g,
                                         std::vector<uint64_t> edge_set) {
    auto test = [&](int e) { return (edge_set[e / 64] >> (e % 64)) & 1ULL; };
    auto clear = [&](int e) { edge_set[e / 64] &= ~(1ULL << (e % 64)); };

    std::vector<std::vector<std::pair<int, int>>> inc(g.n());  // (neighbor, edge)
    for (int e = 0; e < g.m(); ++e) {
        if (!test(e)) continue;
        inc[g.edges()[e].u].push_back({g.edges()[e].v, e});
        inc[g.edges()[e].v].push_back({g.edges()[e].u, e});
    }
    std::vector<int> degree(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) degree[v] = static_cast<int>(inc[v].size());

    std::vector<Cycle> out;
    for (int start = 0; start < g.n(); ++start) {
        while (degree[start] > 0) {
            std::vector<int> path{start};
            std::vector<int> onpath(g.n(), -1);
            onpath[start] = 0;
            while (!path.empty()) {
                int v = path.back();
                int next = -1, via = -1;
                for (auto [w, e] : inc[v]) {
                    if (test(e)) { next = w; via = e; break; }
                }
                if (via < 0) {  // exhausted vertex, backtrack
                    onpath[v] = -1;
                    path.pop_back();
                    continue;
                }
                clear(via);
                degree[g.edges()[via].u]--;
                degree[g.edges()[via].v]--;
                if (onpath[next] >= 0) {
                    std::vector<int> cyc(path.begin() + onpath[next], path.end());
                    for (size_t i = onpath[next] + 1; i < path.size(); ++i)
                        onpath[path[i]] = -1;
                    path.resize(onpath[next] + 1);
                    out.push_back(Cycle{std::move(cyc)}.canonical());
                } else {
                    onpath[next] = static_cast<int>(path.size());
                    path.push_back(next);
                }
            }
        }
    }
    return out;
}

std::vector<uint64_t> xor_rows(std::vector<uint64_t> a,
                               const std::vector<uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return a;
}

}  // namespace

CycleBasis fundamental_cycle_basis(const GainGraph& g) {
    Forest f = spanning_forest(g);
    CycleBasis basis;
    for (int e = 0; e < g.m(); ++e) {
        if (f.tree_edge[e])
            basis.tree_edges.push_back({g.edges()[e].u, g.edges()[e].v});
        else
            basis.cycles.push_back(fundamental_cycle(f, g.edges()[e].u, g.edges()[e].v));
    }
    return basis;
}

CycleBasis odd_cycle_basis(const GainGraph& g) {
    UnderlyingProperties props = underlying_properties(g);
    if (!props.two_connected)
        throw Error(ErrorCode::NotTwoConnected, "underlying graph is not 2-connected");
    if (props.bipartite)
        throw Error(ErrorCode::Bipartite, "bipartite graphs have no odd cycles");

    CycleBasis fundamental = fundamental_cycle_basis(g);
    int target = static_cast<int>(fundamental.cycles.size());
    int words = (g.m() + 63) / 64;

    std::vector<Cycle> odds, evens;
    for (const Cycle& c : fundamental.cycles)
        (c.odd() ? odds : evens).push_back(c);

    Gf2Accumulator acc(g.m());
    CycleBasis result;
    result.tree_edges = fundamental.tree_edges;
    auto add_if_independent = [&](const Cycle& c) {
        if (!c.odd()) return false;
        if (!acc.try_insert(Gf2Accumulator::indicator(g, c, words))) return false;
        result.cycles.push_back(c);
        return true;
    };
    for (const Cycle& c : odds) add_if_independent(c);

    // A nonbipartite graph always yields at least one odd fundamental
    // cycle, so odds is nonempty here.
    for (const Cycle& even : evens) {
        if (acc.rank() >= target) break;
        bool resolved = false;
        auto even_row = Gf2Accumulator::indicator(g, even, words);
        for (const Cycle& seed : result.cycles) {
            auto combined = xor_rows(even_row, Gf2Accumulator::indicator(g, seed, words));
            for (const Cycle& piece : decompose_into_cycles(g, combined)) {
                if (add_if_independent(piece)) { resolved = true; break; }
            }
            if (resolved) break;
        }
        if (!resolved) {
            // Pairwise combinations failed; sweep all odd cycles by length.
            for (int len = 3; len <= g.n() && acc.rank() < target; len += 2)
                for (const Cycle& c : enumerate_cycles(g, len))
                    if (c.length() == len) add_if_independent(c);
        }
    }
    if (acc.rank() < target) {
        for (int len = 3; len <= g.n() && acc.rank() < target; len += 2)
            for (const Cycle& c : enumerate_cycles(g, len))
                if (c.length() == len) add_if_independent(c);
    }
    if (acc.rank() != target)
        throw Error(ErrorCode::InternalInconsistency,
                    "failed to assemble an odd cycle basis");
    return result;
}

std::vector<Cycle> enumerate_cycles(const GainGraph& g, int max_len,
                                    long long budget) {
    if (max_len < 3)
        throw Error(ErrorCode::IndexOutOfRange, "max_len must be at least 3");
    std::vector<Cycle> out;
    std::vector<int> path;
    std::vector<char> on_path(g.n(), 0);

    // Anchored DFS: the anchor is the minimum vertex of every cycle it
    // reports; direction fixed by path[1] < path.back().
    for (int anchor = 0; anchor < g.n(); ++anchor) {
        path.assign(1, anchor);
        on_path.assign(g.n(), 0);
        on_path[anchor] = 1;
        // Iterative DFS over neighbor iteration positions.
        std::vector<size_t> iter{0};
        while (!iter.empty()) {
            int v = path.back();
            if (iter.back() >= g.adjacency()[v].size()) {
                iter.pop_back();
                on_path[v] = 0;
                path.pop_back();
                continue;
            }
            int w = g.adjacency()[v][iter.back()++];
            if (w == anchor && path.size() >= 3 && path[1] < path.back()) {
                if (static_cast<long long>(out.size()) >= budget)
                    throw Error(ErrorCode::BudgetExceeded,
                                "cycle enumeration exceeded budget of " +
                                    std::to_string(budget));
                out.push_back(Cycle{path});
            }
            if (w <= anchor || on_path[w]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            path.push_back(w);
            on_path[w] = 1;
            iter.push_back(0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycleCensus cycle_census(const GainGraph& g, int k, long long budget, double tol) {
    if (k < 3) throw Error(ErrorCode::IndexOutOfRange, "census order must be >= 3");
    std::vector<double> values;
    for (const Cycle& c : enumerate_cycles(g, k, budget))
        if (c.length() == k) values.push_back(cycle_gain(g, c).re());

    CycleCensus census;
    census.k = k;
    if (values.empty()) return census;
    std::sort(values.begin(), values.end());
    // Merge chains of adjacent values within tol; representative = mean.
    size_t start = 0;
    for (size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i] - values[i - 1] > tol) {
            double sum = std::accumulate(values.begin() + start, values.begin() + i, 0.0);
            census.buckets.push_back(
                {sum / static_cast<double>(i - start),
                 static_cast<long long>(i - start)});
            start = i;
        }
    }
    return census;
}

bool census_is_negation_symmetric(const CycleCensus& c, double tol) {
    for (const auto& bucket : c.buckets) {
        bool matched = false;
        for (const auto& other : c.buckets) {
            if (std::abs(other.value + bucket.value) <= tol) {
                matched = (other.count == bucket.count);
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

namespace {

// Recursive choice at the lowest-index live vertex: leave it out, match
// it along an edge, or route a cycle through it.
struct ElementaryEnumerator {
    const GainGraph& g;
    int remaining;
    std::vector<char> used;      // vertex consumed by a component
    std::vector<char> excluded;  // vertex left out of the subgraph
    ElementarySubgraph current;
    std::vector<ElementarySubgraph>* out;

    void run() {
        if (remaining == 0) {
            out->push_back(current);
            return;
        }
        int v = -1;
        for (int i = 0; i < g.n(); ++i)
            if (!used[i] && !excluded[i]) { v = i; break; }
        if (v < 0) return;

        excluded[v] = 1;
        run();
        excluded[v] = 0;

        if (remaining >= 2) {
            for (int w : g.adjacency()[v]) {
                if (used[w] || excluded[w]) continue;
                used[v] = used[w] = 1;
                remaining -= 2;
                current.edges.push_back({v, w});
                run();
                current.edges.pop_back();
                remaining += 2;
                used[v] = used[w] = 0;
            }
        }
        if (remaining >= 3) cycles_through(v);
    }

    // DFS paths from v over live vertices (> v by choice of v); closes a
    // canonical cycle when the path returns to v.
    void cycles_through(int v) {
        std::vector<int> path{v};
        std::vector<char> on_path(g.n(), 0);
        on_path[v] = 1;
        dfs(v, v, path, on_path);
    }

    void dfs(int anchor, int v, std::vector<int>& path, std::vector<char>& on_path) {
        for (int w : g.adjacency()[v]) {
            if (w == anchor && path.size() >= 3 && path[1] < path.back()) {
                Cycle cyc{path};
                for (int x : path) used[x] = 1;
                remaining -= cyc.length();
                current.cycles.push_back(cyc);
                run();
                current.cycles.pop_back();
                remaining += cyc.length();
                for (int x : path) used[x] = 0;
            }
            if (w <= anchor || on_path[w] || used[w] || excluded[w]) continue;
            if (static_cast<int>(path.size()) >= remaining) continue;
            path.push_back(w);
            on_path[w] = 1;
            dfs(anchor, w, path, on_path);
            on_path[w] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

std::vector<ElementarySubgraph> elementary_subgraphs(const GainGraph& g, int j,
                                                     int cap) {
    if (g.n() > cap)
        throw Error(ErrorCode::TooLarge,
                    "elementary subgraph enumeration capped at n = " +
                        std::to_string(cap));
    if (j < 0 || j > g.n())
        throw Error(ErrorCode::IndexOutOfRange, "order out of range");
    std::vector<ElementarySubgraph> out;
    if (j == 0) {
        out.push_back({});
        return out;
    }
    ElementaryEnumerator en{g, j,
                            std::vector<char>(g.n(), 0),
                            std::vector<char>(g.n(), 0),
                            {}, &out};
    en.run();
    return out;
}

double sachs_coefficient(const GainGraph& g, int j, int cap) {
    if (j == 0) return 1.0;
    double a = 0.0;
    for (const ElementarySubgraph& h : elementary_subgraphs(g, j, cap)) {
        double term = (h.components() % 2 == 0) ? 1.0 : -1.0;
        term *= std::pow(2.0, static_cast<int>(h.cycles.size()));
        for (const Cycle& c : h.cycles) term *= cycle_gain(g, c).re();
        a += term;
    }
    return a;
}

int cycle_space_dimension(const GainGraph& g) {
    std::vector<int> comp(g.n(), -1);
    int components = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        ++components;
        std::queue<int> q;
        q.push(s);
        comp[s] = components;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adjacency()[v])
                if (comp[w] < 0) { comp[w] = components; q.push(w); }
        }
    }
    return g.m() - g.n() + components;
}

bool satisfies_edge_bound(const GainGraph& g) {
    return 2 * g.m() <= 3 * (g.n() - 1);
}

int gf2_rank(const GainGraph& g, const std::vector<Cycle>& cycles) {
    Gf2Accumulator acc(g.m());
    int words = (g.m() + 63) / 64;
    for (const Cycle& c : cycles)
        acc.try_insert(Gf2Accumulator::indicator(g, c, words));
    return acc.rank();
}

}  // namespace gaingraph
