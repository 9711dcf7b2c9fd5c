#include "vc/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <stdexcept>

#include "vc/lp.hpp"

namespace vc {

namespace {

std::vector<Vertex> sorted_intersection(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

Kernelizer::Kernelizer(Graph& g, ReductionTrace& trace, ReductionOptions opts,
                       ReductionObserver* observer)
    : g_(g), trace_(trace), opts_(opts), observer_(observer) {
    ensure_scratch();
}

void Kernelizer::ensure_scratch() {
    if (static_cast<int>(stamp_a_.size()) < g_.id_limit()) {
        stamp_a_.resize(g_.id_limit(), 0);
        stamp_b_.resize(g_.id_limit(), 0);
    }
}

void Kernelizer::mark_dirty(Vertex v) {
    for (auto& q : pending_) q.add(v);
}

void Kernelizer::touch(Vertex v) {
    mark_dirty(v);
    lp_dirty_ = true;
}

std::vector<Vertex> Kernelizer::drain_queue(int rule) {
    std::vector<Vertex> out;
    for (Vertex v : pending_[rule].members())
        if (g_.alive(v)) out.push_back(v);
    pending_[rule].clear();
    std::sort(out.begin(), out.end());
    return out;
}

void Kernelizer::include_vertex(Vertex v) {
    trace_.fixed_in_cover.push_back(v);
    ++trace_.offset;
    std::vector<Vertex> nbrs = g_.neighbors(v);
    g_.hide_vertex(v);
    for (Vertex u : nbrs) touch(u);
    lp_dirty_ = true;
    if (observer_) observer_->on_include(v);
}

void Kernelizer::exclude_vertex(Vertex v) {
    std::vector<Vertex> nbrs = g_.neighbors(v);
    g_.hide_vertex(v);
    for (Vertex u : nbrs) touch(u);
    lp_dirty_ = true;
    if (observer_) observer_->on_exclude(v);
}

void Kernelizer::defer_hide(Vertex v) {
    std::vector<Vertex> nbrs = g_.neighbors(v);
    g_.hide_vertex(v);
    for (Vertex u : nbrs) touch(u);
    lp_dirty_ = true;
    if (observer_) observer_->on_defer(v);
}

bool Kernelizer::run() {
    firings_ = 0;
    for (auto& q : pending_) q.clear();
    for (Vertex v : all_alive()) mark_dirty(v);
    lp_dirty_ = true;

    bool any = false;
    while (true) {
        if (firings_ > 10ll * g_.id_limit() + 64)
            throw std::logic_error("kernelize: rule firing cap exceeded");
        bool fired = false;
        for (int r = 0; r < kRuleCount && !fired; ++r) {
            switch (r) {
                case 0: fired = pendant_pass(drain_queue(0)); break;
                case 1: fired = unconfined_pass(drain_queue(1)); break;
                case 2: fired = lp_pass(); break;
                case 3: fired = fold_pass(drain_queue(3)); break;
                case 4: fired = opts_.twin && twin_pass(drain_queue(4)); break;
                case 5: fired = opts_.funnel && funnel_pass(drain_queue(5)); break;
                case 6: fired = opts_.desk && desk_pass(drain_queue(6)); break;
            }
        }
        if (fired) {
            any = true;
            continue;  // restart from the first rule
        }
        // Queues are quiet; one full rescan guards the fixpoint against any
        // structural change the distance-1 dirty marking missed.
        bool rescan_fired = false;
        for (int r = 0; r < kRuleCount && !rescan_fired; ++r) {
            switch (r) {
                case 0: rescan_fired = pendant_pass(all_alive()); break;
                case 1: rescan_fired = unconfined_pass(all_alive()); break;
                case 2: rescan_fired = lp_pass(); break;
                case 3: rescan_fired = fold_pass(all_alive()); break;
                case 4: rescan_fired = opts_.twin && twin_pass(all_alive()); break;
                case 5: rescan_fired = opts_.funnel && funnel_pass(all_alive()); break;
                case 6: rescan_fired = opts_.desk && desk_pass(all_alive()); break;
            }
        }
        if (!rescan_fired) break;
        any = true;
    }
    return any;
}

bool Kernelizer::pendant_pass(std::vector<Vertex> work) {
    bool changed = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
        Vertex v = work[i];
        if (!g_.alive(v) || g_.degree(v) != 1) continue;
        Vertex u = g_.neighbors(v)[0];
        trace_.steps.push_back(PendantStep{v, u});
        ++stats_.pendant;
        ++firings_;
        exclude_vertex(v);
        std::vector<Vertex> u_nbrs = g_.neighbors(u);
        include_vertex(u);
        for (Vertex w : u_nbrs) work.push_back(w);  // cascade
        changed = true;
    }
    return changed;
}

bool Kernelizer::vertex_unconfined(Vertex v) {
    ensure_scratch();
    const int in_s = ++epoch_;
    // stamp_a_: membership in S; stamp_b_: membership in N[S].
    std::vector<Vertex> frontier;  // N(S), S stays independent
    stamp_a_[v] = in_s;
    stamp_b_[v] = in_s;
    for (Vertex u : g_.neighbors(v)) {
        stamp_b_[u] = in_s;
        frontier.push_back(u);
    }
    while (true) {
        std::sort(frontier.begin(), frontier.end());
        Vertex best_u = -1, best_w = -1;
        int best_d = std::numeric_limits<int>::max();
        for (Vertex u : frontier) {
            int in_count = 0;
            for (Vertex x : g_.neighbors(u)) {
                if (stamp_a_[x] == in_s && ++in_count > 1) break;
            }
            if (in_count != 1) continue;
            int d = 0;
            Vertex w = -1;
            for (Vertex x : g_.neighbors(u)) {
                if (stamp_b_[x] != in_s) {
                    ++d;
                    w = x;
                }
            }
            if (d < best_d) {
                best_d = d;
                best_u = u;
                best_w = w;
            }
        }
        if (best_u == -1) return false;      // confined
        if (best_d == 0) return true;        // unconfined
        if (best_d != 1) return false;       // confined
        Vertex w = best_w;                   // grow S by the single leftover
        stamp_a_[w] = in_s;
        stamp_b_[w] = in_s;
        for (Vertex x : g_.neighbors(w)) {
            if (stamp_b_[x] != in_s) {
                stamp_b_[x] = in_s;
                frontier.push_back(x);
            }
        }
    }
}

bool Kernelizer::unconfined_pass(std::vector<Vertex> candidates) {
    bool changed = false;
    for (Vertex v : candidates) {
        if (!g_.alive(v)) continue;
        if (vertex_unconfined(v)) {
            trace_.steps.push_back(UnconfinedStep{v});
            ++stats_.unconfined;
            ++firings_;
            include_vertex(v);
            changed = true;
        }
    }
    return changed;
}

bool Kernelizer::lp_pass() {
    if (!lp_dirty_ || g_.alive_count() == 0) {
        lp_dirty_ = false;
        return false;
    }
    LpSolution sol = solve_lp(g_);
    LpFixedStep step;
    for (Vertex v : g_.alive_vertices()) {
        if (sol.label[v] == LpLabel::One) step.ones.push_back(v);
        if (sol.label[v] == LpLabel::Zero) step.zeros.push_back(v);
    }
    if (step.ones.empty() && step.zeros.empty()) {
        lp_dirty_ = false;
        return false;
    }
    std::vector<Vertex> ones = step.ones, zeros = step.zeros;
    trace_.steps.push_back(std::move(step));
    ++stats_.lp;
    ++firings_;
    for (Vertex v : ones) include_vertex(v);
    for (Vertex v : zeros) exclude_vertex(v);
    lp_dirty_ = false;  // applying the fixing leaves an all-half residual
    return true;
}

bool Kernelizer::fold_pass(std::vector<Vertex> work) {
    bool changed = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
        Vertex v = work[i];
        if (!g_.alive(v) || g_.degree(v) != 2) continue;
        Vertex u = g_.neighbors(v)[0];
        Vertex w = g_.neighbors(v)[1];
        if (g_.has_edge(u, w)) continue;
        std::vector<Vertex> merged_adj;
        for (Vertex x : g_.neighbors(u))
            if (x != v && x != w) merged_adj.push_back(x);
        for (Vertex x : g_.neighbors(w))
            if (x != v && x != u) merged_adj.push_back(x);
        defer_hide(v);
        defer_hide(u);
        defer_hide(w);
        Vertex merged = g_.materialize_vertex(merged_adj);
        ++creations_;
        ensure_scratch();
        touch(merged);
        for (Vertex x : g_.neighbors(merged)) touch(x);
        trace_.steps.push_back(FoldStep{v, u, w, merged});
        ++trace_.offset;
        ++stats_.fold;
        ++firings_;
        work.push_back(merged);
        for (Vertex x : g_.neighbors(merged)) work.push_back(x);
        changed = true;
    }
    return changed;
}

bool Kernelizer::twin_pass(std::vector<Vertex>) {
    // Pairs need a global signature map, so this pass always scans every
    // degree-3 vertex; the map build is cheap next to the other rules.
    bool changed = false;
    while (true) {
        std::map<std::array<Vertex, 3>, Vertex> sig;
        Vertex tu = -1, tv = -1;
        for (Vertex v : all_alive()) {
            if (g_.degree(v) != 3) continue;
            const auto& n = g_.neighbors(v);
            std::array<Vertex, 3> key{n[0], n[1], n[2]};
            auto [it, inserted] = sig.try_emplace(key, v);
            if (!inserted) {
                tu = it->second;
                tv = v;
                break;
            }
        }
        if (tu == -1) return changed;

        const auto nbrs_vec = g_.neighbors(tu);
        std::array<Vertex, 3> nbrs{nbrs_vec[0], nbrs_vec[1], nbrs_vec[2]};
        bool has_inner_edge = g_.has_edge(nbrs[0], nbrs[1]) || g_.has_edge(nbrs[0], nbrs[2]) ||
                              g_.has_edge(nbrs[1], nbrs[2]);
        ++stats_.twin;
        ++firings_;
        if (has_inner_edge) {
            trace_.steps.push_back(TwinEdgesStep{tu, tv, nbrs});
            exclude_vertex(tu);
            exclude_vertex(tv);
            for (Vertex x : nbrs) include_vertex(x);
        } else {
            std::vector<Vertex> gadget_adj;
            VertexSet dist2 = two_neighborhood_exact(g_, tu);
            for (Vertex x : dist2.members())
                if (x != tv) gadget_adj.push_back(x);
            defer_hide(tu);
            defer_hide(tv);
            for (Vertex x : nbrs) defer_hide(x);
            Vertex w = g_.materialize_vertex(gadget_adj);
            ++creations_;
            ensure_scratch();
            touch(w);
            for (Vertex x : g_.neighbors(w)) touch(x);
            trace_.steps.push_back(TwinGadgetStep{tu, tv, nbrs, w});
            trace_.offset += 2;
        }
        changed = true;
    }
}

void Kernelizer::apply_funnel(Vertex u, Vertex v) {
    std::vector<Vertex> shared = sorted_intersection(g_.neighbors(u), g_.neighbors(v));
    std::vector<Vertex> u_out, v_out;
    for (Vertex x : g_.neighbors(u))
        if (x != v && !std::binary_search(shared.begin(), shared.end(), x)) u_out.push_back(x);
    for (Vertex x : g_.neighbors(v))
        if (x != u && !std::binary_search(shared.begin(), shared.end(), x)) v_out.push_back(x);

    for (Vertex s : shared) include_vertex(s);
    defer_hide(u);
    defer_hide(v);
    std::vector<Edge> added;
    for (Vertex x : u_out)
        for (Vertex y : v_out)
            if (!g_.has_edge(x, y)) {
                g_.add_edge(x, y);
                touch(x);
                touch(y);
                added.emplace_back(x, y);
            }
    trace_.steps.push_back(FunnelStep{u, v, u_out, v_out, shared, std::move(added)});
    ++trace_.offset;
    ++stats_.funnel;
    ++firings_;
}

bool Kernelizer::funnel_pass(std::vector<Vertex> candidates) {
    bool changed = false;
    for (Vertex v : candidates) {
        if (!g_.alive(v) || g_.degree(v) == 0) continue;
        ensure_scratch();
        const int mark = ++epoch_;
        const std::vector<Vertex> nv = g_.neighbors(v);
        const int k = static_cast<int>(nv.size());
        for (Vertex u : nv) stamp_a_[u] = mark;
        // Inside-degree of every neighbor; if some removal leaves a clique,
        // removing a minimum-inside-degree vertex does.
        Vertex best_u = -1;
        int best_din = std::numeric_limits<int>::max();
        std::vector<int> din(nv.size(), 0);
        for (std::size_t i = 0; i < nv.size(); ++i) {
            for (Vertex x : g_.neighbors(nv[i]))
                if (stamp_a_[x] == mark) ++din[i];
            if (din[i] < best_din) {
                best_din = din[i];
                best_u = nv[i];
            }
        }
        bool clique = true;
        for (std::size_t i = 0; i < nv.size() && clique; ++i) {
            if (nv[i] == best_u) continue;
            int inside = din[i] - (g_.has_edge(nv[i], best_u) ? 1 : 0);
            if (inside != k - 2) clique = false;
        }
        if (!clique) continue;
        apply_funnel(best_u, v);
        changed = true;
    }
    return changed;
}

bool Kernelizer::try_desk(Vertex a0) {
    if (!g_.alive(a0) || g_.degree(a0) < 3) return false;
    VertexSet dist2 = two_neighborhood_exact(g_, a0);
    for (Vertex a1 : dist2.members()) {
        if (g_.degree(a1) < 3) continue;
        std::vector<Vertex> common = sorted_intersection(g_.neighbors(a0), g_.neighbors(a1));
        for (std::size_t i = 0; i < common.size(); ++i) {
            Vertex b0 = common[i];
            if (g_.degree(b0) < 3) continue;
            for (std::size_t j = i + 1; j < common.size(); ++j) {
                Vertex b1 = common[j];
                if (g_.degree(b1) < 3 || g_.has_edge(b0, b1)) continue;
                auto outside = [&](Vertex p, Vertex q, Vertex skip0, Vertex skip1) {
                    std::vector<Vertex> out;
                    for (Vertex x : g_.neighbors(p))
                        if (x != skip0 && x != skip1) out.push_back(x);
                    for (Vertex x : g_.neighbors(q))
                        if (x != skip0 && x != skip1 &&
                            !std::binary_search(g_.neighbors(p).begin(), g_.neighbors(p).end(), x))
                            out.push_back(x);
                    std::sort(out.begin(), out.end());
                    return out;
                };
                std::vector<Vertex> a_out = outside(a0, a1, b0, b1);
                if (a_out.size() > 2) continue;
                std::vector<Vertex> b_out = outside(b0, b1, a0, a1);
                if (b_out.size() > 2) continue;
                if (!sorted_intersection(a_out, b_out).empty()) continue;

                defer_hide(a0);
                defer_hide(a1);
                defer_hide(b0);
                defer_hide(b1);
                std::vector<Edge> added;
                for (Vertex x : a_out)
                    for (Vertex y : b_out)
                        if (!g_.has_edge(x, y)) {
                            g_.add_edge(x, y);
                            touch(x);
                            touch(y);
                            added.emplace_back(x, y);
                        }
                trace_.steps.push_back(
                    DeskStep{{a0, a1}, {b0, b1}, a_out, b_out, std::move(added)});
                trace_.offset += 2;
                ++stats_.desk;
                ++firings_;
                return true;
            }
        }
    }
    return false;
}

bool Kernelizer::desk_pass(std::vector<Vertex> candidates) {
    bool changed = false;
    for (Vertex a0 : candidates)
        if (try_desk(a0)) changed = true;
    return changed;
}

VertexCover lift(const ReductionTrace& trace, const VertexCover& reduced_cover) {
    VertexSet cover;
    for (Vertex v : reduced_cover.vertices) cover.add(v);
    for (Vertex v : trace.fixed_in_cover) cover.add(v);

    auto all_in = [&cover](const std::vector<Vertex>& vs) {
        for (Vertex v : vs)
            if (!cover.contains(v)) return false;
        return true;
    };

    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        if (const auto* fold = std::get_if<FoldStep>(&*it)) {
            if (cover.contains(fold->merged)) {
                cover.remove(fold->merged);
                cover.add(fold->u);
                cover.add(fold->w);
            } else {
                cover.add(fold->v);
            }
        } else if (const auto* twin = std::get_if<TwinGadgetStep>(&*it)) {
            if (cover.contains(twin->gadget)) {
                cover.remove(twin->gadget);
                for (Vertex x : twin->nbrs) cover.add(x);
            } else {
                cover.add(twin->u);
                cover.add(twin->v);
            }
        } else if (const auto* funnel = std::get_if<FunnelStep>(&*it)) {
            if (all_in(funnel->u_out)) {
                cover.add(funnel->v);
            } else {
                assert(all_in(funnel->v_out));
                cover.add(funnel->u);
            }
        } else if (const auto* desk = std::get_if<DeskStep>(&*it)) {
            if (all_in(desk->a_out)) {
                cover.add(desk->b[0]);
                cover.add(desk->b[1]);
            } else {
                assert(all_in(desk->b_out));
                cover.add(desk->a[0]);
                cover.add(desk->a[1]);
            }
        }
        // Pendant, Unconfined, LpFixed and TwinEdges already sit in
        // fixed_in_cover.
    }
    return VertexCover::of(cover.members());
}

KernelResult kernelize(const Graph& g, ReductionOptions opts) {
    KernelResult result;
    result.kernel = g;
    Kernelizer k(result.kernel, result.trace, opts);
    k.run();
    result.offset = result.trace.offset;
    result.stats = k.stats();
    result.n_prime = result.kernel.alive_count();
    result.m_prime = result.kernel.alive_edges();
    return result;
}

}  // namespace vc
