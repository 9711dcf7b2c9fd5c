#include "vc/verify.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace vc {

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (Vertex v = 0; v < g.id_limit(); ++v) {
        if (!g.alive(v) || s.contains(v)) continue;
        for (Vertex u : g.neighbors(v))
            if (u > v && !s.contains(u)) return false;
    }
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexCover& s) {
    for (Vertex v = 0; v < g.id_limit(); ++v) {
        if (!g.alive(v) || s.contains(v)) continue;
        for (Vertex u : g.neighbors(v))
            if (u > v && !s.contains(u)) return false;
    }
    return true;
}

namespace {

constexpr int kOracleLimit = 26;

struct CompactGraph {
    std::vector<Vertex> ids;         // compact index -> source id
    std::vector<std::uint32_t> adj;  // adjacency masks over compact ids
};

CompactGraph compact_alive(const Graph& g) {
    CompactGraph c;
    c.ids = g.alive_vertices();
    if (c.ids.size() > kOracleLimit)
        throw std::invalid_argument("brute force oracle: graph exceeds " +
                                    std::to_string(kOracleLimit) + " alive vertices");
    std::vector<int> index(g.id_limit(), -1);
    for (std::size_t i = 0; i < c.ids.size(); ++i) index[c.ids[i]] = static_cast<int>(i);
    c.adj.assign(c.ids.size(), 0);
    for (std::size_t i = 0; i < c.ids.size(); ++i)
        for (Vertex u : g.neighbors(c.ids[i])) c.adj[i] |= 1u << index[u];
    return c;
}

bool covers(const CompactGraph& c, std::uint32_t s) {
    for (std::size_t v = 0; v < c.adj.size(); ++v) {
        if (s & (1u << v)) continue;
        if (c.adj[v] & ~s) return false;
    }
    return true;
}

// Enumerates k-subsets of [0,n) in lexicographic member order; returns the
// first one that covers, or false.
bool first_cover_of_size(const CompactGraph& c, int k, int from, std::uint32_t chosen,
                         std::uint32_t* out) {
    if (k == 0) {
        if (covers(c, chosen)) {
            *out = chosen;
            return true;
        }
        return false;
    }
    const int n = static_cast<int>(c.adj.size());
    for (int v = from; v + k <= n; ++v)
        if (first_cover_of_size(c, k - 1, v + 1, chosen | (1u << v), out)) return true;
    return false;
}

}  // namespace

BruteForceVc brute_force_vc(const Graph& g) {
    CompactGraph c = compact_alive(g);
    const int n = static_cast<int>(c.adj.size());
    for (int k = 0; k <= n; ++k) {
        std::uint32_t mask = 0;
        if (first_cover_of_size(c, k, 0, 0, &mask)) {
            BruteForceVc r;
            r.size = k;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) r.witness.vertices.push_back(c.ids[v]);
            return r;
        }
    }
    return {0, {}};  // unreachable: the full vertex set always covers
}

namespace {

void clique_rec(const std::vector<std::uint32_t>& adj, std::uint32_t cand, int cur, int* best) {
    if (cur > *best) *best = cur;
    while (cand) {
        if (cur + std::popcount(cand) <= *best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        clique_rec(adj, cand & adj[v], cur + 1, best);
    }
}

}  // namespace

int brute_force_max_clique(const Graph& g) {
    CompactGraph c = compact_alive(g);
    const int n = static_cast<int>(c.adj.size());
    int best = 0;
    std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    clique_rec(c.adj, all, 0, &best);
    return best;
}

int brute_force_max_is(const Graph& g) {
    return g.alive_count() - brute_force_vc(g).size;
}

}  // namespace vc
