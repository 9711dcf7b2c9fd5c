#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vc/graph.hpp"
#include "vc/outcome.hpp"
#include "vc/solution.hpp"

namespace vc {

// Word-level dynamic bitset, just enough for candidate-set arithmetic.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }
    void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set_all() {
        for (auto& x : w_) x = ~0ull;
        trim();
    }
    int count() const;
    bool empty() const;
    bool intersects(const Bits& o) const;
    Bits& operator&=(const Bits& o);
    Bits& operator-=(const Bits& o);  // and-not
    // Lowest set bit, -1 if none.
    int first() const;
    int next(int after) const;  // lowest set bit > after, -1 if none

private:
    void trim() {
        if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
    }
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense adjacency over compacted ids with a mapping back to the source graph.
struct BitsetGraph {
    int n = 0;
    std::vector<Bits> adj;
    std::vector<Vertex> ids;  // compacted id -> source id

    // Adjacency of the alive subgraph.
    static BitsetGraph of(const Graph& g);
    // Complement of the alive subgraph.
    static BitsetGraph complement_of(const Graph& g);
};

struct CliqueResult {
    SolveStatus status = SolveStatus::Optimal;
    std::vector<Vertex> clique;  // compacted ids; empty if no clique beats the seed
    int size = 0;                // best size found, counting the seed
    long long branches = 0;
};

// MCS-style branch and bound: static degeneracy order, greedy sequential
// coloring with recoloring as the bound, candidates expanded highest color
// first. `initial_size` seeds the bound without a witness; only strictly
// larger cliques are reported. A negative branch budget means unlimited; the
// optional wall limit is polled every 256 branches.
CliqueResult max_clique(const BitsetGraph& g, int initial_size, long long branch_budget,
                        const std::atomic<bool>* cancel = nullptr, double time_limit_s = -1.0);

struct VcViaClique {
    SolveStatus status = SolveStatus::Optimal;
    VertexCover cover;
    long long branches = 0;
};

struct CliqueOptions {
    long long branch_budget = -1;
    double time_limit_s = -1.0;
    int densify_cap = 20000;  // refuse to densify larger graphs
    const std::atomic<bool>* cancel = nullptr;
    std::string external_solver;  // optional binary run on a DIMACS dump
};

// Finds a minimum cover of g by running the clique solver on the complement:
// the complement's maximum clique is a maximum independent set of g. The
// initial cover seeds the clique bound; if nothing beats the seed the initial
// cover is already optimal and is returned.
VcViaClique solve_vc_via_clique(const Graph& g, const VertexCover& initial_cover,
                                const CliqueOptions& opts);

}  // namespace vc
