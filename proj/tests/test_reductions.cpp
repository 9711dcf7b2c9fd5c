#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <variant>

#include "test_util.hpp"
#include "vc/reductions.hpp"
#include "vc/verify.hpp"

using namespace vc;
using namespace vctest;

namespace {

struct RuleHarness {
    Graph work;
    ReductionTrace trace;
    Kernelizer kern;
    explicit RuleHarness(const Graph& g) : work(g), kern(work, trace) {}
};

// offset + optimum(residual) must equal optimum(input), and lifting an
// optimal residual cover must give a valid input cover of exactly that size.
void check_sound(const Graph& input, const Graph& residual, const ReductionTrace& trace) {
    int opt_in = brute_force_vc(input).size;
    BruteForceVc res = brute_force_vc(residual);
    CHECK(trace.offset + res.size == opt_in);
    VertexCover lifted = lift(trace, res.witness);
    CHECK(is_vertex_cover(input, lifted));
    CHECK(static_cast<int>(lifted.size()) == opt_in);
}

// Applies the trace forward to a fresh copy of the input; the result must be
// the kernel, gadget ids included.
Graph replay(const Graph& input, const ReductionTrace& trace) {
    Graph g = input;
    for (const auto& step : trace.steps) {
        if (const auto* s = std::get_if<PendantStep>(&step)) {
            g.hide_vertex(s->v);
            g.hide_vertex(s->u);
        } else if (const auto* s = std::get_if<UnconfinedStep>(&step)) {
            g.hide_vertex(s->v);
        } else if (const auto* s = std::get_if<LpFixedStep>(&step)) {
            for (Vertex v : s->ones) g.hide_vertex(v);
            for (Vertex v : s->zeros) g.hide_vertex(v);
        } else if (const auto* s = std::get_if<FoldStep>(&step)) {
            std::vector<Vertex> merged_adj;
            for (Vertex x : g.neighbors(s->u))
                if (x != s->v && x != s->w) merged_adj.push_back(x);
            for (Vertex x : g.neighbors(s->w))
                if (x != s->v && x != s->u) merged_adj.push_back(x);
            g.hide_vertex(s->v);
            g.hide_vertex(s->u);
            g.hide_vertex(s->w);
            Vertex got = g.materialize_vertex(merged_adj);
            REQUIRE(got == s->merged);
        } else if (const auto* s = std::get_if<TwinEdgesStep>(&step)) {
            g.hide_vertex(s->u);
            g.hide_vertex(s->v);
            for (Vertex x : s->nbrs) g.hide_vertex(x);
        } else if (const auto* s = std::get_if<TwinGadgetStep>(&step)) {
            std::vector<Vertex> gadget_adj;
            VertexSet dist2 = two_neighborhood_exact(g, s->u);
            for (Vertex x : dist2.members())
                if (x != s->v) gadget_adj.push_back(x);
            g.hide_vertex(s->u);
            g.hide_vertex(s->v);
            for (Vertex x : s->nbrs) g.hide_vertex(x);
            Vertex got = g.materialize_vertex(gadget_adj);
            REQUIRE(got == s->gadget);
        } else if (const auto* s = std::get_if<FunnelStep>(&step)) {
            for (Vertex x : s->shared) g.hide_vertex(x);
            g.hide_vertex(s->u);
            g.hide_vertex(s->v);
            for (auto [x, y] : s->edges_added) g.add_edge(x, y);
        } else if (const auto* s = std::get_if<DeskStep>(&step)) {
            g.hide_vertex(s->a[0]);
            g.hide_vertex(s->a[1]);
            g.hide_vertex(s->b[0]);
            g.hide_vertex(s->b[1]);
            for (auto [x, y] : s->edges_added) g.add_edge(x, y);
        }
    }
    return g;
}

}  // namespace

TEST_CASE("pendant removal cascades") {
    Graph p4 = path(4);
    RuleHarness h(p4);
    CHECK(h.kern.reduce_pendant());
    CHECK(h.trace.offset == 2);
    CHECK(h.work.alive_edges() == 0);
    check_sound(p4, h.work, h.trace);

    Graph k15 = star(5);
    RuleHarness h2(k15);
    CHECK(h2.kern.reduce_pendant());
    CHECK(h2.trace.offset == 1);
    CHECK(h2.trace.fixed_in_cover == std::vector<Vertex>{0});  // the center
    CHECK(h2.work.alive_edges() == 0);

    Graph c4 = cycle(4);
    RuleHarness h3(c4);
    CHECK(!h3.kern.reduce_pendant());
}

TEST_CASE("vertex folding") {
    Graph p3 = path(3);
    RuleHarness h(p3);
    CHECK(h.kern.reduce_fold());
    CHECK(h.trace.offset == 1);
    CHECK(h.work.alive_count() == 1);  // one isolated merged vertex
    CHECK(h.work.alive_edges() == 0);
    VertexCover lifted = lift(h.trace, VertexCover{});
    CHECK(lifted.vertices == std::vector<Vertex>{1});  // the center

    Graph c5 = cycle(5);
    RuleHarness h2(c5);
    CHECK(h2.kern.reduce_fold());
    check_sound(c5, h2.work, h2.trace);  // brute force gives VC(C5) = 3

    Graph c4 = cycle(4);
    RuleHarness h3(c4);
    CHECK(h3.kern.reduce_fold());
    check_sound(c4, h3.work, h3.trace);  // VC(C4) = 2
}

TEST_CASE("LP reduction fixes integral vertices") {
    Graph k13 = star(3);
    RuleHarness h(k13);
    CHECK(h.kern.reduce_lp());
    CHECK(h.trace.offset == 1);
    CHECK(h.work.alive_count() == 0);
    check_sound(k13, h.work, h.trace);

    // A single edge has the integral optimum (0,1), so the reduction
    // resolves it completely.
    Graph k2 = path(2);
    RuleHarness h2(k2);
    CHECK(h2.kern.reduce_lp());
    CHECK(h2.trace.offset == 1);
    CHECK(h2.work.alive_count() == 0);

    // Odd cycles are all-half: nothing to fix.
    Graph c5 = cycle(5);
    RuleHarness h3(c5);
    CHECK(!h3.kern.reduce_lp());
}

TEST_CASE("unconfined vertex removal") {
    Graph k3 = complete(3);
    RuleHarness h(k3);
    CHECK(h.kern.reduce_unconfined());
    check_sound(k3, h.work, h.trace);

    // The confinement loop certifies C5 vertices as unconfined (S grows by
    // one leftover, and then a frontier vertex has nothing outside N[S]).
    Graph c5 = cycle(5);
    RuleHarness h2(c5);
    CHECK(h2.kern.reduce_unconfined());
    check_sound(c5, h2.work, h2.trace);

    Graph edgeless = build_graph(4, {});
    RuleHarness h3(edgeless);
    CHECK(!h3.kern.reduce_unconfined());
}

TEST_CASE("twin reduction, neighborhood with edges") {
    // twins 3,4 over {0,1,2} with the edge (0,1) present
    Graph g = build_graph(5, {{3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}, {4, 2}, {0, 1}});
    RuleHarness h(g);
    CHECK(h.kern.reduce_twin());
    CHECK(h.trace.offset == 3);
    CHECK(h.work.alive_count() == 0);
    VertexCover lifted = lift(h.trace, VertexCover{});
    CHECK(lifted.vertices == std::vector<Vertex>{0, 1, 2});
    check_sound(g, h.work, h.trace);
}

TEST_CASE("twin reduction, independent neighborhood uses the gadget") {
    Graph g = complete_bipartite(2, 3);  // twins 0,1 over {2,3,4}
    RuleHarness h(g);
    CHECK(h.kern.reduce_twin());
    CHECK(h.trace.offset == 2);
    CHECK(h.work.alive_count() == 1);  // the isolated gadget
    // gadget stays out of an optimal residual cover -> {u,v} lifts
    VertexCover lifted = lift(h.trace, VertexCover{});
    CHECK(lifted.vertices == std::vector<Vertex>{0, 1});
    check_sound(g, h.work, h.trace);

    Graph c6 = cycle(6);
    RuleHarness h2(c6);
    CHECK(!h2.kern.reduce_twin());  // no degree-3 vertices at all
}

TEST_CASE("twin gadget wires the distance-2 neighborhood") {
    // twins 0,1 over {2,3,4}, each neighbor with a private outside vertex
    Graph g = build_graph(8, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                              {2, 5}, {3, 6}, {4, 7}});
    RuleHarness h(g);
    CHECK(h.kern.reduce_twin());
    CHECK(h.work.alive_count() == 4);  // 5,6,7 plus the gadget
    Vertex gadget = 8;
    CHECK(h.work.alive(gadget));
    CHECK(h.work.degree(gadget) == 3);
    check_sound(g, h.work, h.trace);
}

TEST_CASE("funnel fires on a near-clique neighborhood") {
    // triangle {0,1,2} plus the pendant 3-0
    Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    RuleHarness h(g);
    CHECK(h.kern.reduce_funnel());
    check_sound(g, h.work, h.trace);
}

TEST_CASE("desk preconditions and firing") {
    Graph c4 = cycle(4);
    RuleHarness h(c4);
    CHECK(!h.kern.reduce_desk());  // all degrees below three

    // chordless 4-cycle 0-2-1-3 with outside neighbors 4,5 (A side) and
    // 6,7 (B side): every cycle vertex has degree 3
    Graph g = build_graph(8, {{0, 2}, {2, 1}, {1, 3}, {3, 0},  // the cycle
                              {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    RuleHarness h2(g);
    CHECK(h2.kern.reduce_desk());
    CHECK(h2.trace.offset == 2);
    check_sound(g, h2.work, h2.trace);
}

TEST_CASE("kernelize handles the documented small cases") {
    KernelResult p3 = kernelize(path(3));
    CHECK(p3.n_prime == 0);
    CHECK(p3.offset == 1);
    VertexCover lifted = lift(p3.trace, VertexCover{});
    CHECK(lifted.vertices == std::vector<Vertex>{1});

    // C5 reduces completely: unconfined certifies a vertex, pendants finish.
    KernelResult c5 = kernelize(cycle(5));
    CHECK(c5.n_prime == 0);
    CHECK(c5.offset == 3);

    KernelResult k3 = kernelize(complete(3));
    CHECK(k3.n_prime == 0);
    CHECK(k3.offset == 2);
}

TEST_CASE("kernelize is deterministic") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(14, 0.25, rng);
        KernelResult a = kernelize(g);
        KernelResult b = kernelize(g);
        CHECK(a.kernel.fingerprint() == b.kernel.fingerprint());
        CHECK(a.offset == b.offset);
    }
}

TEST_CASE("kernelize soundness against the oracle") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uniform_int_distribution<int> nd(1, 16);
        double p = 0.1 + 0.08 * (trial % 10);
        Graph g = random_graph(nd(rng), p, rng);
        KernelResult kr = kernelize(g);
        CHECK(kr.n_prime <= g.alive_count());  // net vertex count never grows
        check_sound(g, kr.kernel, kr.trace);
    }
}

TEST_CASE("forward replay of the trace reproduces the kernel") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> nd(2, 16);
        Graph g = random_graph(nd(rng), 0.1 + 0.08 * (trial % 10), rng);
        KernelResult kr = kernelize(g);
        Graph replayed = replay(g, kr.trace);
        CHECK(replayed.fingerprint() == kr.kernel.fingerprint());
    }
}

TEST_CASE("trace checkpoints unwind cleanly") {
    Graph g = path(6);
    ReductionTrace trace;
    Kernelizer kern(g, trace);
    auto g_cp = g.checkpoint();
    auto t_cp = trace.checkpoint();
    kern.reduce_pendant();
    CHECK(trace.offset > 0);
    trace.rollback(t_cp);
    g.rollback(g_cp);
    CHECK(trace.offset == 0);
    CHECK(trace.steps.empty());
    CHECK(g.alive_count() == 6);
}

TEST_CASE("per-rule soundness on random graphs where the rule fires") {
    using Entry = std::pair<const char*, bool (Kernelizer::*)()>;
    const Entry rules[] = {
        {"pendant", &Kernelizer::reduce_pendant}, {"unconfined", &Kernelizer::reduce_unconfined},
        {"lp", &Kernelizer::reduce_lp},           {"fold", &Kernelizer::reduce_fold},
        {"funnel", &Kernelizer::reduce_funnel},
    };
    std::mt19937 rng(999);
    for (const auto& [name, rule] : rules) {
        CAPTURE(name);
        int fired = 0;
        for (int trial = 0; trial < 600 && fired < 100; ++trial) {
            std::uniform_int_distribution<int> nd(3, 14);
            Graph g = random_graph(nd(rng), 0.08 + 0.06 * (trial % 5), rng);
            RuleHarness h(g);
            if (!(h.kern.*rule)()) continue;
            ++fired;
            check_sound(g, h.work, h.trace);
        }
        CHECK(fired >= 100);
    }
}
