#pragma once

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include "vc/graph.hpp"
#include "vc/solution.hpp"

namespace vc {

// Trace step records. Pendant, Unconfined, LpFixed and TwinEdges commit their
// cover vertices immediately (via fixed_in_cover); Fold, TwinGadget, Funnel
// and Desk defer the choice to lift time.
struct PendantStep {
    Vertex v, u;  // v had degree one, u joined the cover
};
struct UnconfinedStep {
    Vertex v;
};
struct LpFixedStep {
    std::vector<Vertex> ones, zeros;
};
struct FoldStep {
    Vertex v, u, w;  // degree-2 v with non-adjacent u, w
    Vertex merged;   // the fresh contraction vertex
};
struct TwinEdgesStep {
    Vertex u, v;
    std::array<Vertex, 3> nbrs;
};
struct TwinGadgetStep {
    Vertex u, v;
    std::array<Vertex, 3> nbrs;
    Vertex gadget;
};
struct FunnelStep {
    Vertex u, v;                  // alternatives A={u}, B={v}; N(v)\{u} was a clique
    std::vector<Vertex> u_out;    // N(u) minus shared minus v, at firing time
    std::vector<Vertex> v_out;    // N(v) minus shared minus u
    std::vector<Vertex> shared;   // N(u) & N(v), committed to the cover
    std::vector<Edge> edges_added;
};
struct DeskStep {
    std::array<Vertex, 2> a, b;   // chordless 4-cycle a0 b0 a1 b1
    std::vector<Vertex> a_out, b_out;
    std::vector<Edge> edges_added;
};

using ReductionStep =
    std::variant<PendantStep, UnconfinedStep, LpFixedStep, FoldStep, TwinEdgesStep,
                 TwinGadgetStep, FunnelStep, DeskStep>;

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<Vertex> fixed_in_cover;  // insertion-ordered so it can unwind
    int offset = 0;  // fixed vertices plus deferred contributions

    struct Checkpoint {
        std::size_t steps = 0, fixed = 0;
        int offset = 0;
    };
    Checkpoint checkpoint() const { return {steps.size(), fixed_in_cover.size(), offset}; }
    void rollback(const Checkpoint& cp) {
        steps.resize(cp.steps);
        fixed_in_cover.resize(cp.fixed);
        offset = cp.offset;
    }
};

// Replays the trace backwards, turning a cover of the reduced graph into a
// cover of the graph the trace started from. If `reduced_cover` is minimum,
// the result is minimum, with size offset + |reduced_cover|.
VertexCover lift(const ReductionTrace& trace, const VertexCover& reduced_cover);

struct RuleStats {
    long long pendant = 0, unconfined = 0, lp = 0, fold = 0, twin = 0, funnel = 0, desk = 0;
    long long total() const { return pendant + unconfined + lp + fold + twin + funnel + desk; }
};

// Branch-and-reduce listens to cover decisions to maintain packing
// constraints; a vertex is either committed in, committed out, or deferred.
class ReductionObserver {
public:
    virtual ~ReductionObserver() = default;
    virtual void on_include(Vertex v) = 0;
    virtual void on_exclude(Vertex v) = 0;
    virtual void on_defer(Vertex v) = 0;
};

struct ReductionOptions {
    bool twin = true;
    bool funnel = true;
    bool desk = true;
};

// Applies the reduction rules to a graph in place, appending to a trace.
// Rules fire in the fixed order pendant, unconfined, LP, fold, twin, funnel,
// desk; any change restarts from the first rule. Scans work off per-rule
// dirty queues, with a full rescan before declaring the fixpoint.
class Kernelizer {
public:
    Kernelizer(Graph& g, ReductionTrace& trace, ReductionOptions opts = {},
               ReductionObserver* observer = nullptr);

    // Runs all rules to the joint fixpoint. Returns true if anything fired.
    bool run();

    // Single-rule entry points; each exhausts only its own rule.
    bool reduce_pendant() { return pendant_pass(all_alive()); }  // cascades internally
    bool reduce_unconfined() { return exhaust(&Kernelizer::unconfined_pass); }
    bool reduce_lp() { return lp_pass(); }  // one application reaches its own fixpoint
    bool reduce_fold() { return fold_pass(all_alive()); }        // cascades internally
    bool reduce_twin() { return twin_pass(all_alive()); }        // loops internally
    bool reduce_funnel() { return exhaust(&Kernelizer::funnel_pass); }
    bool reduce_desk() { return exhaust(&Kernelizer::desk_pass); }

    const RuleStats& stats() const { return stats_; }

    // Cover-decision primitives shared with branch-and-reduce.
    void include_vertex(Vertex v);
    void exclude_vertex(Vertex v);

private:
    static constexpr int kRuleCount = 7;

    std::vector<Vertex> all_alive() const { return g_.alive_vertices(); }
    bool exhaust(bool (Kernelizer::*pass)(std::vector<Vertex>)) {
        bool any = false;
        while ((this->*pass)(all_alive())) any = true;
        return any;
    }
    std::vector<Vertex> drain_queue(int rule);
    void mark_dirty(Vertex v);
    void touch(Vertex v);  // dirty marking plus LP flag
    void defer_hide(Vertex v);
    void ensure_scratch();

    bool pendant_pass(std::vector<Vertex> candidates);
    bool unconfined_pass(std::vector<Vertex> candidates);
    bool lp_pass();
    bool fold_pass(std::vector<Vertex> candidates);
    bool twin_pass(std::vector<Vertex> candidates);
    bool funnel_pass(std::vector<Vertex> candidates);
    bool desk_pass(std::vector<Vertex> candidates);

    bool vertex_unconfined(Vertex v);
    void apply_funnel(Vertex u, Vertex v);
    bool try_desk(Vertex a0);

    Graph& g_;
    ReductionTrace& trace_;
    ReductionOptions opts_;
    ReductionObserver* observer_;
    RuleStats stats_;

    std::array<VertexSet, kRuleCount> pending_;
    bool lp_dirty_ = true;
    long long firings_ = 0;
    long long creations_ = 0;

    // Stamped scratch space for set tests, grown as gadget ids appear.
    std::vector<int> stamp_a_, stamp_b_;
    int epoch_ = 0;
};

struct KernelResult {
    Graph kernel;
    ReductionTrace trace;
    int offset = 0;
    RuleStats stats;
    int n_prime = 0;
    long long m_prime = 0;
};

// Copies the input and reduces it to a kernel.
KernelResult kernelize(const Graph& g, ReductionOptions opts = {});

}  // namespace vc
