#include "vc/bnr.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "vc/bounds.hpp"
#include "vc/verify.hpp"

namespace vc {

VertexSet mirrors(const Graph& g, Vertex v) {
    VertexSet out(g.id_limit());
    const std::vector<Vertex>& nv = g.neighbors(v);
    VertexSet dist2 = two_neighborhood_exact(g, v);
    for (Vertex u : dist2.members()) {
        std::vector<Vertex> diff;
        for (Vertex x : nv)
            if (!g.has_edge(u, x)) diff.push_back(x);
        bool clique = true;
        for (std::size_t i = 0; i < diff.size() && clique; ++i)
            for (std::size_t j = i + 1; j < diff.size(); ++j)
                if (!g.has_edge(diff[i], diff[j])) {
                    clique = false;
                    break;
                }
        if (clique) out.add(u);
    }
    out.sort_members();
    return out;
}

VertexSet satellites(const Graph& g, Vertex v) {
    VertexSet out(g.id_limit());
    VertexSet closed = neighborhood(g, v, 1, /*closed=*/true);
    for (Vertex w : g.neighbors(v)) {
        Vertex lone = -1;
        int outside = 0;
        for (Vertex x : g.neighbors(w)) {
            if (!closed.contains(x)) {
                lone = x;
                if (++outside > 1) break;
            }
        }
        if (outside == 1) out.add(lone);
    }
    out.sort_members();
    return out;
}

namespace {

struct SharedBudget {
    BnrLimits limits;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
    long long nodes = 0;
    bool expired = false;

    void tick() {
        ++nodes;
        if (expired) return;
        if (limits.node_budget >= 0 && nodes > limits.node_budget) {
            expired = true;
            return;
        }
        if ((nodes & 255) == 0) {
            if (limits.cancel && limits.cancel->load(std::memory_order_relaxed)) expired = true;
            if (limits.time_limit_s >= 0 &&
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                        .count() > limits.time_limit_s)
                expired = true;
        }
    }
};

struct PackingLedger : ReductionObserver {
    struct Constraint {
        std::vector<Vertex> vars;  // sorted
        int possible = 0;          // vars that may still be excluded
        bool active = true;
    };
    struct UndoEntry {
        int index;
        int old_possible;
        bool old_active;
        bool created;
    };

    std::vector<Constraint> constraints;
    std::vector<UndoEntry> undo;
    bool violated = false;

    std::size_t checkpoint() const { return undo.size(); }
    void rollback(std::size_t to) {
        while (undo.size() > to) {
            UndoEntry e = undo.back();
            undo.pop_back();
            if (e.created) {
                constraints.pop_back();
            } else {
                constraints[e.index].possible = e.old_possible;
                constraints[e.index].active = e.old_active;
            }
        }
        violated = false;
    }

    void add_constraint(std::vector<Vertex> vars) {
        std::sort(vars.begin(), vars.end());
        int idx = static_cast<int>(constraints.size());
        constraints.push_back({std::move(vars), 0, true});
        constraints.back().possible = static_cast<int>(constraints.back().vars.size());
        undo.push_back({idx, 0, true, true});
    }

    void for_each_hit(Vertex v, bool include) {
        for (int i = 0; i < static_cast<int>(constraints.size()); ++i) {
            Constraint& c = constraints[i];
            if (!c.active || !std::binary_search(c.vars.begin(), c.vars.end(), v)) continue;
            undo.push_back({i, c.possible, c.active, false});
            if (include) {
                if (--c.possible == 0) {
                    violated = true;
                    c.active = false;
                }
            } else {
                c.active = false;  // satisfied or conservatively dropped
            }
        }
    }

    void on_include(Vertex v) override { for_each_hit(v, true); }
    void on_exclude(Vertex v) override { for_each_hit(v, false); }
    void on_defer(Vertex v) override { for_each_hit(v, false); }
};

struct BnrSolver {
    Graph& g;
    SharedBudget& budget;
    ReductionOptions ropts;
    ReductionTrace trace;
    PackingLedger packing;
    Kernelizer kern;

    int best_size;
    VertexCover best_cover;  // cover of the solver's input graph

    BnrSolver(Graph& graph, SharedBudget& shared, ReductionOptions opts,
              const VertexCover& initial)
        : g(graph), budget(shared), ropts(opts), kern(g, trace, opts, &packing),
          best_size(static_cast<int>(initial.size())), best_cover(initial) {}

    void record_leaf(const VertexCover& reduced_cover) {
        VertexCover lifted = lift(trace, reduced_cover);
        if (static_cast<int>(lifted.size()) < best_size) {
            best_size = static_cast<int>(lifted.size());
            best_cover = std::move(lifted);
        }
    }

    std::vector<std::vector<Vertex>> components() const {
        std::vector<std::vector<Vertex>> comps;
        std::vector<char> seen(g.id_limit(), 0);
        for (Vertex s : g.alive_vertices()) {
            if (seen[s]) continue;
            std::vector<Vertex> comp{s};
            seen[s] = 1;
            for (std::size_t head = 0; head < comp.size(); ++head)
                for (Vertex u : g.neighbors(comp[head]))
                    if (!seen[u]) {
                        seen[u] = 1;
                        comp.push_back(u);
                    }
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    // Solves the current graph state; updates best_* through record_leaf.
    void search() {
        budget.tick();
        if (budget.expired) return;

        Graph::Checkpoint g_cp = g.checkpoint();
        ReductionTrace::Checkpoint t_cp = trace.checkpoint();
        std::size_t p_cp = packing.checkpoint();

        kern.run();
        if (!packing.violated && !budget.expired) {
            if (g.alive_count() == 0) {
                record_leaf(VertexCover{});
            } else if (trace.offset + lower_bounds(g).best() < best_size) {
                auto comps = components();
                if (comps.size() > 1) {
                    solve_components(comps);
                } else {
                    branch();
                }
            }
        }
        packing.rollback(p_cp);
        trace.rollback(t_cp);
        g.rollback(g_cp);
    }

    void solve_components(const std::vector<std::vector<Vertex>>& comps_in) {
        // Smallest component first; each is an independent subproblem with a
        // fresh ledger (ancestor constraints do not transfer across the cut).
        std::vector<std::vector<Vertex>> comps = comps_in;
        std::sort(comps.begin(), comps.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
        std::vector<Vertex> combined;
        int total = trace.offset;
        for (const auto& comp : comps) {
            // Pruning: even a perfect outcome elsewhere cannot win.
            if (total >= best_size) return;
            auto [sub, ids] = induced_subgraph(comp);
            std::vector<Vertex> trivial = sub.alive_vertices();
            SubResult r = solve_subgraph(sub, VertexCover::of(trivial));
            if (!r.optimal) return;  // budget ran out
            total += static_cast<int>(r.cover.size());
            for (Vertex v : r.cover.vertices) combined.push_back(ids[v]);
        }
        if (total < best_size) record_leaf(VertexCover::of(combined));
    }

    struct SubResult {
        bool optimal = false;
        VertexCover cover;
    };

    std::pair<Graph, std::vector<Vertex>> induced_subgraph(const std::vector<Vertex>& comp) const {
        std::vector<Vertex> ids = comp;
        std::sort(ids.begin(), ids.end());
        std::vector<int> compact(g.id_limit(), -1);
        for (std::size_t i = 0; i < ids.size(); ++i) compact[ids[i]] = static_cast<int>(i);
        Graph sub(static_cast<int>(ids.size()));
        for (Vertex v : ids)
            for (Vertex u : g.neighbors(v))
                if (u > v && compact[u] != -1) sub.add_edge(compact[v], compact[u]);
        return {std::move(sub), std::move(ids)};
    }

    SubResult solve_subgraph(Graph& sub, const VertexCover& initial) {
        BnrSolver solver(sub, budget, ropts, initial);
        solver.search();
        SubResult r;
        r.optimal = !budget.expired;
        r.cover = solver.best_cover;
        return r;
    }

    Vertex pick_branch_vertex() const {
        Vertex best = -1;
        for (Vertex v : g.alive_vertices())
            if (best == -1 || g.degree(v) > g.degree(best)) best = v;
        return best;
    }

    void branch() {
        Vertex v = pick_branch_vertex();
        std::vector<Vertex> nv = g.neighbors(v);
        VertexSet m = mirrors(g, v);

        if (!m.empty()) {
            // Either N(v) or {v} and all mirrors is in a minimum cover.
            apply_and_search({/*include*/ nv, /*exclude*/ {v}, /*constraint*/ {}});
            std::vector<Vertex> take = m.members();
            take.push_back(v);
            apply_and_search({take, {}, {}});
            return;
        }

        // No mirrors: either v is in the cover (and then some neighbor is
        // not, the packing constraint), or v and its satellites are all out.
        apply_and_search({{v}, {}, nv});

        std::vector<Vertex> sats = satellites(g, v).members();
        for (std::size_t i = 0; i < sats.size(); ++i)
            for (std::size_t j = i + 1; j < sats.size(); ++j)
                if (g.has_edge(sats[i], sats[j])) return;  // excluded side impossible
        std::vector<Vertex> excluded = sats;
        excluded.push_back(v);
        std::sort(excluded.begin(), excluded.end());
        VertexSet include_set(g.id_limit());
        for (Vertex x : excluded)
            for (Vertex u : g.neighbors(x))
                if (!std::binary_search(excluded.begin(), excluded.end(), u)) include_set.add(u);
        include_set.sort_members();
        apply_and_search({include_set.members(), excluded, {}});
    }

    struct Decision {
        std::vector<Vertex> include;
        std::vector<Vertex> exclude;
        std::vector<Vertex> constraint;  // nonempty: >=1 of these stays out
    };

    void apply_and_search(const Decision& d) {
        if (budget.expired) return;
        Graph::Checkpoint g_cp = g.checkpoint();
        ReductionTrace::Checkpoint t_cp = trace.checkpoint();
        std::size_t p_cp = packing.checkpoint();

        for (Vertex x : d.exclude)
            if (g.alive(x)) kern.exclude_vertex(x);
        for (Vertex x : d.include)
            if (g.alive(x)) kern.include_vertex(x);
        if (!d.constraint.empty()) packing.add_constraint(d.constraint);

        if (!packing.violated) search();

        packing.rollback(p_cp);
        trace.rollback(t_cp);
        g.rollback(g_cp);
    }
};

}  // namespace

BnrOutcome solve_bnr(const Graph& g, const VertexCover& initial, const BnrLimits& limits,
                     ReductionOptions ropts) {
    if (!is_vertex_cover(g, initial))
        throw std::logic_error("solve_bnr: initial solution is not a vertex cover");

    SharedBudget budget{limits};
    Graph work = g;
    BnrSolver solver(work, budget, ropts, initial);
    solver.search();

    BnrOutcome out;
    out.nodes = budget.nodes;
    out.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - budget.started).count();
    if (budget.expired) {
        out.status = SolveStatus::TimedOut;
        return out;
    }
    assert(is_vertex_cover(g, solver.best_cover));
    out.cover = std::move(solver.best_cover);
    return out;
}

}  // namespace vc
