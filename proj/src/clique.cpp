#include "vc/clique.hpp"

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "vc/verify.hpp"

namespace vc {

int Bits::count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
}

bool Bits::empty() const {
    for (auto x : w_)
        if (x) return false;
    return true;
}

bool Bits::intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

Bits& Bits::operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

Bits& Bits::operator-=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

int Bits::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i) * 64 + std::countr_zero(w_[i]);
    return -1;
}

int Bits::next(int after) const {
    int from = after + 1;
    if (from >= n_) return -1;
    std::size_t word = from >> 6;
    std::uint64_t cur = w_[word] & (~0ull << (from & 63));
    while (true) {
        if (cur) return static_cast<int>(word) * 64 + std::countr_zero(cur);
        if (++word >= w_.size()) return -1;
        cur = w_[word];
    }
}

BitsetGraph BitsetGraph::of(const Graph& g) {
    BitsetGraph bg;
    bg.ids = g.alive_vertices();
    bg.n = static_cast<int>(bg.ids.size());
    std::vector<int> compact(g.id_limit(), -1);
    for (int i = 0; i < bg.n; ++i) compact[bg.ids[i]] = i;
    bg.adj.assign(bg.n, Bits(bg.n));
    for (int i = 0; i < bg.n; ++i)
        for (Vertex u : g.neighbors(bg.ids[i])) bg.adj[i].set(compact[u]);
    return bg;
}

BitsetGraph BitsetGraph::complement_of(const Graph& g) {
    BitsetGraph bg = of(g);
    for (int i = 0; i < bg.n; ++i) {
        Bits row(bg.n);
        row.set_all();
        row -= bg.adj[i];
        row.reset(i);
        bg.adj[i] = std::move(row);
    }
    return bg;
}

namespace {

// Smallest-last peeling; returns rank[v] where higher rank = peeled later,
// i.e. deeper in the core. Coloring considers high-rank vertices first.
std::vector<int> degeneracy_rank(const BitsetGraph& g) {
    std::vector<int> deg(g.n), rank(g.n, 0);
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; ++v) deg[v] = g.adj[v].count();
    for (int round = 0; round < g.n; ++round) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        rank[best] = g.n - 1 - round;  // peeled first -> lowest priority
        for (int u = g.adj[best].first(); u != -1; u = g.adj[best].next(u))
            if (!removed[u]) --deg[u];
    }
    return rank;
}

// The solver relabels vertices so that bit order equals the static order:
// internal id 0 is the deepest-core vertex, and "first set bit" doubles as
// "next vertex in static order".
struct McsSolver {
    int n;
    std::vector<Bits> adj;          // permuted adjacency
    std::vector<int> to_original;   // internal id -> input id
    long long branch_budget;
    const std::atomic<bool>* cancel;
    double time_limit_s = -1.0;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    long long branches = 0;
    bool out_of_budget = false;
    int best_size;
    std::vector<int> best_clique;
    std::vector<int> current;

    McsSolver(const BitsetGraph& graph, int initial, long long budget,
              const std::atomic<bool>* cancel_flag)
        : n(graph.n), branch_budget(budget), cancel(cancel_flag), best_size(initial) {
        std::vector<int> rank = degeneracy_rank(graph);
        to_original.resize(n);
        std::vector<int> to_internal(n);
        for (int v = 0; v < n; ++v) {
            int internal = n - 1 - rank[v];  // highest rank first
            to_original[internal] = v;
            to_internal[v] = internal;
        }
        adj.assign(n, Bits(n));
        for (int v = 0; v < n; ++v)
            for (int u = graph.adj[v].first(); u != -1; u = graph.adj[v].next(u))
                adj[to_internal[v]].set(to_internal[u]);
    }

    bool budget_hit() {
        if (branch_budget >= 0 && branches > branch_budget) return true;
        if ((branches & 255) == 0) {
            if (cancel && cancel->load(std::memory_order_relaxed)) return true;
            if (time_limit_s >= 0 &&
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                        .count() > time_limit_s)
                return true;
        }
        return false;
    }

    // Greedy sequential coloring in static order, with the MCS re-coloring
    // step pulling high-color vertices below the pruning threshold when a
    // single-conflict swap exists.
    void color_sort(const Bits& p, std::vector<int>& out_v, std::vector<int>& out_c) {
        std::vector<Bits> classes;
        Bits left = p;
        while (!left.empty()) {
            Bits cls(n);
            Bits q = left;
            for (int v = q.first(); v != -1; v = q.first()) {
                cls.set(v);
                q -= adj[v];
                q.reset(v);
            }
            left -= cls;
            classes.push_back(std::move(cls));
        }
        const int threshold = best_size - static_cast<int>(current.size());
        // Re-color: for v in a class above the threshold, find a class k1
        // where v has exactly one neighbor w, and a class k2 below the
        // threshold with no neighbor of w; moving w to k2 makes room for v.
        // Pointless (and the class index invalid) once the threshold hits 0.
        for (int k = threshold; threshold > 0 && k < static_cast<int>(classes.size()); ++k) {
            for (int v = classes[k].first(); v != -1; v = classes[k].next(v)) {
                bool moved = false;
                for (int k1 = 0; k1 + 1 < threshold && !moved; ++k1) {
                    Bits conflict = classes[k1];
                    conflict &= adj[v];
                    int w = conflict.first();
                    if (w == -1 || conflict.next(w) != -1) continue;
                    for (int k2 = 0; k2 + 1 < threshold; ++k2) {
                        if (k2 == k1 || classes[k2].intersects(adj[w])) continue;
                        classes[k].reset(v);
                        classes[k1].reset(w);
                        classes[k1].set(v);
                        classes[k2].set(w);
                        moved = true;
                        break;
                    }
                }
                if (moved) v = -1;  // restart scan of this class
            }
        }
        out_v.clear();
        out_c.clear();
        for (int k = 0; k < static_cast<int>(classes.size()); ++k)
            for (int v = classes[k].first(); v != -1; v = classes[k].next(v)) {
                out_v.push_back(v);
                out_c.push_back(k + 1);
            }
    }

    void expand(const Bits& p) {
        ++branches;
        if (budget_hit()) {
            out_of_budget = true;
            return;
        }
        std::vector<int> vs, colors;
        color_sort(p, vs, colors);
        Bits cand = p;
        for (int i = static_cast<int>(vs.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + colors[i] <= best_size) return;
            int v = vs[i];
            current.push_back(v);
            Bits next = cand;
            next &= adj[v];
            if (next.empty()) {
                if (static_cast<int>(current.size()) > best_size) {
                    best_size = static_cast<int>(current.size());
                    best_clique = current;
                }
            } else {
                expand(next);
                if (out_of_budget) {
                    current.pop_back();
                    return;
                }
            }
            current.pop_back();
            cand.reset(v);
        }
    }
};

}  // namespace

CliqueResult max_clique(const BitsetGraph& g, int initial_size, long long branch_budget,
                        const std::atomic<bool>* cancel, double time_limit_s) {
    CliqueResult r;
    if (g.n == 0) {
        r.size = initial_size;
        return r;
    }
    McsSolver solver(g, initial_size, branch_budget, cancel);
    solver.time_limit_s = time_limit_s;
    Bits all(g.n);
    all.set_all();
    solver.expand(all);
    r.status = solver.out_of_budget ? SolveStatus::TimedOut : SolveStatus::Optimal;
    r.size = solver.best_size;
    for (int v : solver.best_clique) r.clique.push_back(solver.to_original[v]);
    std::sort(r.clique.begin(), r.clique.end());
    r.branches = solver.branches;
    return r;
}

namespace {

// Adapter for an external clique binary: dumps the complement in DIMACS
// format, runs `<solver> <file>`, and reads 1-based vertex ids from lines
// starting with "v". Falls back to the internal solver on any mismatch.
std::vector<Vertex> run_external_clique(const std::string& solver, const BitsetGraph& comp) {
    std::string path = "/tmp/vc_ext_clique_" + std::to_string(getpid()) + ".clq";
    {
        std::ofstream out(path);
        long long m = 0;
        for (int v = 0; v < comp.n; ++v) m += comp.adj[v].count();
        out << "p edge " << comp.n << ' ' << m / 2 << '\n';
        for (int v = 0; v < comp.n; ++v)
            for (int u = comp.adj[v].next(v); u != -1; u = comp.adj[v].next(u))
                out << "e " << v + 1 << ' ' << u + 1 << '\n';
    }
    std::string cmd = solver + " " + path;
    std::vector<Vertex> clique;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe) {
        char buf[4096];
        std::string output;
        while (fgets(buf, sizeof(buf), pipe)) output += buf;
        pclose(pipe);
        std::istringstream lines(output);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty() || line[0] != 'v') continue;
            std::istringstream ls(line.substr(1));
            long long x;
            while (ls >> x)
                if (x >= 1 && x <= comp.n) clique.push_back(static_cast<Vertex>(x - 1));
        }
    }
    std::remove(path.c_str());
    // pairwise adjacency check in the complement
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!comp.adj[clique[i]].test(clique[j])) return {};
    return clique;
}

}  // namespace

VcViaClique solve_vc_via_clique(const Graph& g, const VertexCover& initial_cover,
                                const CliqueOptions& opts) {
    VcViaClique out;
    const int a = g.alive_count();
    if (a == 0) return out;
    if (a > opts.densify_cap) {
        out.status = SolveStatus::Skipped;
        return out;
    }
    BitsetGraph comp = BitsetGraph::complement_of(g);

    int alive_in_cover = 0;
    for (Vertex v : initial_cover.vertices)
        if (g.alive(v)) ++alive_in_cover;
    const int seed = a - alive_in_cover;  // independent set the cover implies

    std::vector<Vertex> clique;
    bool external_done = false;
    if (!opts.external_solver.empty()) {
        clique = run_external_clique(opts.external_solver, comp);
        if (!clique.empty() && static_cast<int>(clique.size()) >= seed) {
            external_done = true;
        } else {
            std::cerr << "external clique solver output rejected; using internal solver\n";
            clique.clear();
        }
    }
    if (!external_done) {
        CliqueResult cr = max_clique(comp, seed, opts.branch_budget, opts.cancel,
                                     opts.time_limit_s);
        out.branches = cr.branches;
        if (cr.status != SolveStatus::Optimal) {
            out.status = cr.status;
            return out;
        }
        clique = cr.clique;
        if (clique.empty()) {
            // nothing beats the seed: the initial cover is optimal
            out.cover = initial_cover;
            return out;
        }
    }

    std::vector<char> in_is(g.id_limit(), 0);
    for (Vertex c : clique) in_is[comp.ids[c]] = 1;
    std::vector<Vertex> cover;
    for (Vertex v : g.alive_vertices())
        if (!in_is[v]) cover.push_back(v);
    out.cover = VertexCover::of(std::move(cover));
    return out;
}

}  // namespace vc
