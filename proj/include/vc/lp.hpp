#pragma once

#include <cstdint>
#include <vector>

#include "vc/graph.hpp"

namespace vc {

enum class LpLabel : std::uint8_t { Zero, Half, One };

// Half-integral solution of  min sum x_v  s.t.  x_u + x_v >= 1 per edge.
struct LpSolution {
    std::vector<LpLabel> label;      // indexed by vertex id; alive vertices only
    long long matching_size = 0;     // double-cover matching = 2 * LP optimum
    std::vector<Vertex> left_match;  // L_v matched to R_{left_match[v]}, -1 if free
    std::vector<Vertex> right_match; // R_v matched to L_{right_match[v]}, -1 if free

    int lower_bound() const {  // ceil(LP optimum)
        return static_cast<int>((matching_size + 1) / 2);
    }
};

// Solves the relaxation on the alive graph via Hopcroft-Karp matching on the
// bipartite double cover (copies L_v, R_v; edges L_u-R_v per oriented edge).
// Among optimal solutions the returned one has the minimum number of 1/2
// values: forced values come from alternating reachability off the free
// copies, the rest from processing the strongly connected components of the
// matched-pair digraph sinks-first against their mirror components.
LpSolution solve_lp(const Graph& g);

}  // namespace vc
