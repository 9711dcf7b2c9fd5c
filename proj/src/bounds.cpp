#include "vc/bounds.hpp"

#include <algorithm>

#include "vc/lp.hpp"

namespace vc {

int lb_clique_cover(const Graph& g) {
    std::vector<Vertex> order = g.alive_vertices();
    std::sort(order.begin(), order.end(), [&g](Vertex a, Vertex b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<std::vector<Vertex>> cliques;
    std::vector<char> mark(g.id_limit(), 0);
    for (Vertex v : order) {
        for (Vertex u : g.neighbors(v)) mark[u] = 1;
        bool placed = false;
        for (auto& clique : cliques) {
            bool fits = true;
            for (Vertex u : clique)
                if (!mark[u]) {
                    fits = false;
                    break;
                }
            if (fits) {
                clique.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) cliques.push_back({v});
        for (Vertex u : g.neighbors(v)) mark[u] = 0;
    }
    return g.alive_count() - static_cast<int>(cliques.size());
}

namespace {

int cycle_cover_bound(const Graph& g, const LpSolution& lp) {
    // left_match defines a functional digraph v -> left_match[v] whose arcs
    // are real edges; injectivity makes the components plain paths and
    // cycles, vertex-disjoint in g.
    std::vector<char> visited(g.id_limit(), 0);
    int bound = 0;
    // Paths start where nothing points in (right copy free).
    for (Vertex v : g.alive_vertices()) {
        if (visited[v] || lp.right_match[v] != -1) continue;
        int len = 0;
        Vertex x = v;
        while (x != -1 && !visited[x]) {
            visited[x] = 1;
            ++len;
            x = lp.left_match[x];
        }
        bound += len / 2;  // path with len vertices
    }
    for (Vertex v : g.alive_vertices()) {
        if (visited[v]) continue;
        int len = 0;
        Vertex x = v;
        while (!visited[x]) {
            visited[x] = 1;
            ++len;
            x = lp.left_match[x];
        }
        bound += (len + 1) / 2;  // cycle with len vertices
    }
    return bound;
}

}  // namespace

int lb_lp(const Graph& g) { return solve_lp(g).lower_bound(); }

int lb_cycle_cover(const Graph& g) {
    LpSolution lp = solve_lp(g);
    return cycle_cover_bound(g, lp);
}

LowerBounds lower_bounds(const Graph& g) {
    LowerBounds b;
    b.clique_cover = lb_clique_cover(g);
    LpSolution lp = solve_lp(g);
    b.lp = lp.lower_bound();
    b.cycle_cover = cycle_cover_bound(g, lp);
    return b;
}

}  // namespace vc
