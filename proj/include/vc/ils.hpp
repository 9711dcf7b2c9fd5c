#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vc/graph.hpp"
#include "vc/solution.hpp"

namespace vc {

// Maximal independent set with per-vertex tightness (number of solution
// neighbors), the bookkeeping the (1,2)-swap scan runs on.
class IndependentSet {
public:
    explicit IndependentSet(const Graph& g)
        : in_(g.id_limit(), 0), tightness_(g.id_limit(), 0) {}

    bool contains(Vertex v) const { return in_[v]; }
    int tightness(Vertex v) const { return tightness_[v]; }
    std::size_t size() const { return members_.size(); }
    const std::vector<Vertex>& members() const { return members_; }
    std::vector<Vertex> sorted_members() const;

    // v must have tightness 0.
    void insert(const Graph& g, Vertex v);
    void remove(const Graph& g, Vertex v);
    // Evicts v's solution neighbors first.
    void force_insert(const Graph& g, Vertex v);

    bool is_independent(const Graph& g) const;
    bool is_maximal(const Graph& g) const;

private:
    std::vector<char> in_;
    std::vector<int> tightness_;
    std::vector<Vertex> members_;
};

using Rng = std::mt19937;

// Random-permutation greedy start.
IndependentSet greedy_maximal_is(const Graph& g, std::uint32_t seed);

// Applies (1,2)-swaps until none exists, restoring maximality after each
// move. Returns true if the set grew.
bool one_two_swap_pass(const Graph& g, IndependentSet& is, Rng& rng);

// Force-inserts `strength` random non-members, then restores maximality.
void perturb(const Graph& g, IndependentSet& is, int strength, Rng& rng);

// Iterated local search: perturb + improve rounds, best solution kept.
// Deterministic for a fixed (graph, seed, budget).
IndependentSet run_ils(const Graph& g, long long budget, std::uint32_t seed);

// cover = alive vertices minus the set. Throws std::logic_error if the set
// is not independent.
VertexCover is_to_cover(const Graph& g, const IndependentSet& is);

}  // namespace vc
