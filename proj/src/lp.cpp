#include "vc/lp.hpp"

#include <algorithm>
#include <limits>

namespace vc {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp on the double cover. Left and right sides are both the alive
// vertex set; L_u is adjacent to R_v iff (u,v) is an edge.
struct DoubleCoverMatching {
    const Graph& g;
    std::vector<Vertex> alive;
    std::vector<Vertex> match_l, match_r;
    std::vector<int> dist;
    std::vector<std::size_t> it;
    long long size = 0;

    explicit DoubleCoverMatching(const Graph& graph)
        : g(graph),
          alive(graph.alive_vertices()),
          match_l(graph.id_limit(), -1),
          match_r(graph.id_limit(), -1),
          dist(graph.id_limit(), kInf),
          it(graph.id_limit(), 0) {
        run();
    }

    bool bfs() {
        std::vector<Vertex> queue;
        for (Vertex u : alive) {
            if (match_l[u] == -1) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool reachable_free = false;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex v : g.neighbors(u)) {
                Vertex w = match_r[v];
                if (w == -1) {
                    reachable_free = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reachable_free;
    }

    // Iterative advance/retreat DFS; augmenting paths on path-like graphs can
    // be as long as the graph, so no recursion here.
    bool augment(Vertex root, std::vector<Vertex>& lefts, std::vector<Vertex>& rights) {
        lefts.assign(1, root);
        rights.clear();
        while (!lefts.empty()) {
            Vertex u = lefts.back();
            const auto& nbrs = g.neighbors(u);
            bool advanced = false;
            while (it[u] < nbrs.size()) {
                Vertex v = nbrs[it[u]++];
                Vertex w = match_r[v];
                if (w == -1) {
                    rights.push_back(v);
                    for (std::size_t i = 0; i < lefts.size(); ++i) {
                        match_l[lefts[i]] = rights[i];
                        match_r[rights[i]] = lefts[i];
                    }
                    return true;
                }
                if (dist[w] == dist[u] + 1) {
                    rights.push_back(v);
                    lefts.push_back(w);
                    advanced = true;
                    break;
                }
            }
            if (advanced) continue;
            dist[u] = kInf;
            lefts.pop_back();
            if (!rights.empty()) rights.pop_back();
        }
        return false;
    }

    void run() {
        std::vector<Vertex> lefts, rights;
        while (bfs()) {
            for (Vertex u : alive) it[u] = 0;
            for (Vertex u : alive)
                if (match_l[u] == -1 && augment(u, lefts, rights)) ++size;
        }
    }
};

// Iterative Tarjan over the matched-pair digraph (nodes are compacted core
// pair indices). Components are emitted sinks-first.
struct Scc {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> comp, low, order, stack;
    std::vector<char> on_stack;
    int counter = 0, comps = 0;

    explicit Scc(const std::vector<std::vector<int>>& a)
        : adj(a), comp(a.size(), -1), low(a.size(), -1), order(a.size(), -1),
          on_stack(a.size(), 0) {
        for (int v = 0; v < static_cast<int>(a.size()); ++v)
            if (order[v] == -1) run(v);
    }

    void run(int root) {
        // Explicit stack of (node, next edge index) frames.
        std::vector<std::pair<int, std::size_t>> frames{{root, 0}};
        while (!frames.empty()) {
            auto& [v, i] = frames.back();
            if (i == 0) {
                order[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            if (i < adj[v].size()) {
                int w = adj[v][i++];
                if (order[w] == -1) {
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], order[w]);
                }
                continue;
            }
            if (low[v] == order[v]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comps;
                    if (w == v) break;
                }
                ++comps;
            }
            int done = v;
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
};

}  // namespace

LpSolution solve_lp(const Graph& g) {
    DoubleCoverMatching m(g);
    const int limit = g.id_limit();

    LpSolution sol;
    sol.matching_size = m.size;
    sol.left_match = m.match_l;
    sol.right_match = m.match_r;
    sol.label.assign(limit, LpLabel::Half);

    // Z: copies forced into the source side of every minimum cut of the
    // double cover, found by alternating BFS from the free left copies.
    std::vector<char> z_left(limit, 0), z_right(limit, 0);
    {
        std::vector<Vertex> queue;
        for (Vertex u : m.alive)
            if (m.match_l[u] == -1) {
                z_left[u] = 1;
                queue.push_back(u);
            }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex v : g.neighbors(u)) {
                if (z_right[v]) continue;
                z_right[v] = 1;
                Vertex w = m.match_r[v];  // never -1: that would be an augmenting path
                if (w != -1 && !z_left[w]) {
                    z_left[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    // W: copies forced out, the mirror image of Z (reverse BFS from free
    // right copies).
    std::vector<char> w_left(limit, 0), w_right(limit, 0);
    {
        std::vector<Vertex> queue;  // holds right-copy ids
        for (Vertex v : m.alive)
            if (m.match_r[v] == -1) {
                w_right[v] = 1;
                queue.push_back(v);
            }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex u : g.neighbors(v)) {
                if (w_left[u]) continue;
                w_left[u] = 1;
                Vertex r = m.match_l[u];
                if (r != -1 && !w_right[r]) {
                    w_right[r] = 1;
                    queue.push_back(r);
                }
            }
        }
    }

    for (Vertex v : m.alive) {
        if (z_left[v]) sol.label[v] = LpLabel::Zero;
        if (w_left[v]) sol.label[v] = LpLabel::One;
    }

    // Core: pairs untouched by either closure, identified by their left id.
    std::vector<int> core_index(limit, -1);
    std::vector<Vertex> core;
    for (Vertex v : m.alive) {
        if (!z_left[v] && !w_left[v] && !z_right[v] && !w_right[v]) {
            // Both copies of a core pair stay undecided together.
            core_index[v] = static_cast<int>(core.size());
            core.push_back(v);
        }
    }
    if (core.empty()) return sol;

    // Arc u -> w when an edge (u,y) points into the pair owning R_y.
    std::vector<std::vector<int>> arcs(core.size());
    for (Vertex u : core) {
        for (Vertex y : g.neighbors(u)) {
            if (z_right[y] || w_right[y]) continue;
            Vertex w = m.match_r[y];
            if (w == -1 || w == u || core_index[w] == -1) continue;
            arcs[core_index[u]].push_back(core_index[w]);
        }
    }
    Scc scc(arcs);

    // mirror(scc of L_v) = scc of the pair owning R_v.
    std::vector<int> mirror(scc.comps, -1);
    std::vector<std::vector<int>> members(scc.comps);
    for (std::size_t i = 0; i < core.size(); ++i) members[scc.comp[i]].push_back(static_cast<int>(i));
    for (int s = 0; s < scc.comps; ++s) {
        Vertex v = core[members[s][0]];
        mirror[s] = scc.comp[core_index[m.match_r[v]]];
    }

    // Tarjan emits components sinks-first, so every successor of s is decided
    // when s is processed. Include s when that keeps the chosen side closed
    // and its mirror was not already taken; self-mirror components stay half.
    std::vector<char> in_t(scc.comps, 0);
    for (int s = 0; s < scc.comps; ++s) {
        if (mirror[s] == s || in_t[mirror[s]]) continue;
        bool closed = true;
        for (int i : members[s]) {
            for (int j : arcs[i])
                if (scc.comp[j] != s && !in_t[scc.comp[j]]) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (closed) in_t[s] = 1;
    }

    for (std::size_t i = 0; i < core.size(); ++i) {
        Vertex v = core[i];
        bool left_in = in_t[scc.comp[i]];
        bool right_in = in_t[scc.comp[core_index[m.match_r[v]]]];
        if (left_in && !right_in)
            sol.label[v] = LpLabel::Zero;
        else if (!left_in && right_in)
            sol.label[v] = LpLabel::One;
        else
            sol.label[v] = LpLabel::Half;
    }
    return sol;
}

}  // namespace vc
