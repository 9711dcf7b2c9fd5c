#pragma once

#include <optional>
#include <vector>

#include "vc/graph.hpp"
#include "vc/outcome.hpp"
#include "vc/reductions.hpp"
#include "vc/solution.hpp"

namespace vc {

// Vertices u at distance two from v whose uncovered part of N(v) is a clique:
// either N(v) or {v} plus all mirrors is in some minimum cover.
VertexSet mirrors(const Graph& g, Vertex v);

// Vertices u at distance two from v that are the single outside neighbor of
// some w in N(v).
VertexSet satellites(const Graph& g, Vertex v);

struct BnrLimits {
    double time_limit_s = -1.0;  // < 0: unlimited
    long long node_budget = -1;  // < 0: unlimited
    const std::atomic<bool>* cancel = nullptr;
};

struct BnrOutcome {
    SolveStatus status = SolveStatus::Optimal;
    std::optional<VertexCover> cover;
    long long nodes = 0;
    double elapsed_s = 0.0;
};

// Akiba-Iwata style branch and reduce: the full reduction suite at every
// node, max-degree branching with mirrors and satellites, packing
// constraints on the include branch, pruning by the max of the clique-cover,
// LP and cycle-cover bounds, and per-component solving. `initial` must be a
// valid cover of g; it primes the upper bound and is returned when already
// optimal.
BnrOutcome solve_bnr(const Graph& g, const VertexCover& initial, const BnrLimits& limits,
                     ReductionOptions ropts = {});

}  // namespace vc
