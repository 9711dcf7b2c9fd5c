#pragma once

#include "vc/graph.hpp"

namespace vc {

// Greedy clique partition of the alive vertices; bound is a - #cliques.
int lb_clique_cover(const Graph& g);

// ceil(LP optimum) from the double-cover matching.
int lb_lp(const Graph& g);

// Decomposes the double-cover matching into vertex-disjoint paths and cycles
// and sums their individual cover requirements.
int lb_cycle_cover(const Graph& g);

struct LowerBounds {
    int clique_cover = 0;
    int lp = 0;
    int cycle_cover = 0;
    int best() const {
        int b = clique_cover > lp ? clique_cover : lp;
        return cycle_cover > b ? cycle_cover : b;
    }
};

// All three bounds, sharing one matching computation.
LowerBounds lower_bounds(const Graph& g);

}  // namespace vc
