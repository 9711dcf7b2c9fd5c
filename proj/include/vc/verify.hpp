#pragma once

#include <vector>

#include "vc/graph.hpp"
#include "vc/solution.hpp"

namespace vc {

// True iff every alive edge has an endpoint in s.
bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexCover& s);

struct BruteForceVc {
    int size = 0;
    VertexCover witness;  // lexicographically least optimal cover
};

// Exact minimum by subset enumeration in lexicographic order, smallest size
// first. Guarded to <= 26 alive vertices; throws std::invalid_argument above.
BruteForceVc brute_force_vc(const Graph& g);

// Exact maximum clique size by candidate-set enumeration with a popcount cut.
// Same <= 26 guard.
int brute_force_max_clique(const Graph& g);

// Convenience for local-search tests: alive_count - brute_force_vc(g).size.
int brute_force_max_is(const Graph& g);

}  // namespace vc
