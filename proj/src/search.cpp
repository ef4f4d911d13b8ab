#include "gaingraph/search.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaingraph/equivalence.hpp"
#include "gaingraph/spectra.hpp"

namespace gaingraph {

double symmetry_objective(const GainGraph& g) {
    Spectrum lambda = eigenvalues(g);
    int n = g.n();
    double obj = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = lambda[j] + lambda[n - 1 - j];
        obj += s * s;
    }
    return obj;
}

namespace {

// Self-contained generator so results are reproducible across standard
// libraries (std distributions are not pinned by the standard).
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) { next(); }

    uint64_t next() {  // splitmix64
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() {  // in [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    int below(int bound) { return static_cast<int>(next() % static_cast<uint64_t>(bound)); }

    double gaussian() {  // Box-Muller
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }
};

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    Rng mix(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    return mix.next();
}

struct Parametrization {
    std::vector<int> cotree;  // edge indices carrying one angle each
    std::vector<int> tree;
};

Parametrization parametrize(const GainGraph& g) {
    // BFS forest; cotree edges are the search parameters.
    Parametrization p;
    std::vector<char> visited(g.n(), 0);
    std::vector<char> in_tree(g.m(), 0);
    for (int root = 0; root < g.n(); ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.adjacency()[v]) {
                if (visited[w]) continue;
                visited[w] = 1;
                in_tree[g.edge_index(v, w)] = 1;
                queue.push_back(w);
            }
        }
    }
    for (int e = 0; e < g.m(); ++e)
        (in_tree[e] ? p.tree : p.cotree).push_back(e);
    return p;
}

GainGraph realize(const GainGraph& underlying, const Parametrization& p,
                  const std::vector<double>& angles) {
    std::vector<Edge> edges;
    edges.reserve(underlying.m());
    for (const Edge& e : underlying.edges()) edges.push_back({e.u, e.v, Unit::one()});
    for (size_t i = 0; i < p.cotree.size(); ++i) {
        const Edge& e = underlying.edges()[p.cotree[i]];
        edges[p.cotree[i]] =
            {e.u, e.v, Unit::cartesian(std::cos(angles[i]), std::sin(angles[i]))};
    }
    return GainGraph(underlying.n(), std::move(edges));
}

struct RestartOutcome {
    std::vector<double> angles;
    double objective = 0.0;
    long long accepted = 0;
};

RestartOutcome run_restart(const GainGraph& underlying, const Parametrization& p,
                           const AnnealConfig& cfg, uint64_t seed) {
    Rng rng(seed);
    size_t dim = p.cotree.size();
    std::vector<double> angles(dim, 0.0);

    auto evaluate = [&](const std::vector<double>& a) {
        return symmetry_objective(realize(underlying, p, a));
    };

    RestartOutcome best{angles, evaluate(angles), 0};
    if (dim == 0) return best;

    double current = best.objective;
    double temperature = cfg.t0;
    for (int k = 0; k < cfg.iterations; ++k) {
        int idx = rng.below(static_cast<int>(dim));
        double sigma = cfg.step_sigma0 * (temperature / cfg.t0);
        double old_angle = angles[idx];
        angles[idx] = old_angle + sigma * rng.gaussian();
        double proposal = evaluate(angles);
        double delta = proposal - current;
        if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temperature)) {
            current = proposal;
            ++best.accepted;
            if (current < best.objective) {
                best.objective = current;
                best.angles = angles;
            }
        } else {
            angles[idx] = old_angle;
        }
        temperature *= cfg.cooling;
    }
    return best;
}

}  // namespace

SearchResult anneal_search(const GainGraph& underlying, const AnnealConfig& cfg) {
    if (cfg.iterations <= 0 || cfg.restarts <= 0 || cfg.t0 <= 0 ||
        cfg.cooling <= 0 || cfg.cooling >= 1 || cfg.step_sigma0 <= 0)
        throw Error(ErrorCode::IndexOutOfRange, "invalid annealing configuration");

    Parametrization p = parametrize(underlying);

    std::optional<RestartOutcome> best;
    int best_restart = 0;
    for (int r = 0; r < cfg.restarts; ++r) {
        RestartOutcome outcome =
            run_restart(underlying, p, cfg, derive_seed(cfg.seed, r));
        if (!best || outcome.objective < best->objective) {
            best = std::move(outcome);
            best_restart = r;
        }
    }

    GainGraph gains = realize(underlying, p, best->angles);
    SearchResult result{gains, symmetry_objective(gains), {}, best->accepted,
                        best_restart};
    CycleBasis basis = fundamental_cycle_basis(gains);
    for (const Cycle& c : basis.cycles)
        result.basis_gains.push_back({c, cycle_gain(gains, c)});
    return result;
}

std::vector<SearchResult> distinct_solutions(const GainGraph& underlying,
                                             const AnnealConfig& cfg, int runs) {
    if (runs < 1) throw Error(ErrorCode::IndexOutOfRange, "runs must be >= 1");
    std::vector<SearchResult> classes;
    for (int run = 0; run < runs; ++run) {
        AnnealConfig run_cfg = cfg;
        run_cfg.seed = derive_seed(cfg.seed, 0x5EA2C000ULL + run);
        SearchResult result = anneal_search(underlying, run_cfg);
        if (result.objective >= kSearchSuccessThreshold) continue;
        bool known = false;
        for (const SearchResult& rep : classes) {
            if (is_switching_isomorphic(rep.gains, result.gains).result) {
                known = true;
                break;
            }
        }
        if (!known) classes.push_back(std::move(result));
    }
    return classes;
}

}  // namespace gaingraph
