#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "vc/bnr.hpp"
#include "vc/ils.hpp"
#include "vc/verify.hpp"

using namespace vc;
using namespace vctest;

TEST_CASE("mirror detection") {
    // K4 minus the edge (0,1): 1 sees N(0) entirely, so it mirrors 0
    Graph g = build_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    VertexSet m = mirrors(g, 0);
    CHECK(m.size() == 1);
    CHECK(m.contains(1));

    // K3 has no distance-2 vertices at all
    CHECK(mirrors(complete(3), 0).empty());
}

TEST_CASE("satellite detection") {
    // path a-b-c-d: d is a satellite of b via c
    Graph p4 = path(4);
    VertexSet s = satellites(p4, 1);
    CHECK(s.size() == 1);
    CHECK(s.contains(3));

    CHECK(satellites(complete(3), 0).empty());
}

TEST_CASE("edgeless graph solves in one node") {
    Graph g = build_graph(5, {});
    BnrOutcome r = solve_bnr(g, VertexCover::of(g.alive_vertices()), {});
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.cover->size() == 0);
    CHECK(r.nodes == 1);
}

TEST_CASE("rejects an invalid initial cover") {
    CHECK_THROWS_AS(solve_bnr(path(3), VertexCover::of({0}), {}), std::logic_error);
}

TEST_CASE("matches the oracle on a large random corpus") {
    std::mt19937 rng(31337);
    for (int t = 0; t < 1000; ++t) {
        std::uniform_int_distribution<int> nd(1, 16);
        Graph g = random_graph(nd(rng), 0.1 + 0.08 * (t % 10), rng);
        BnrOutcome r = solve_bnr(g, VertexCover::of(g.alive_vertices()), {});
        REQUIRE(r.status == SolveStatus::Optimal);
        CHECK(is_vertex_cover(g, *r.cover));
        CHECK(static_cast<int>(r.cover->size()) == brute_force_vc(g).size);
    }
}

TEST_CASE("an exactly-optimal prime still completes with a proof") {
    std::mt19937 rng(4);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(13, 0.35, rng);
        VertexCover opt = brute_force_vc(g).witness;
        BnrOutcome r = solve_bnr(g, opt, {});
        CHECK(r.status == SolveStatus::Optimal);
        CHECK(r.cover->size() == opt.size());
    }
}

TEST_CASE("never reports a cover above the prime") {
    std::mt19937 rng(71);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(12, 0.3, rng);
        IndependentSet is = run_ils(g, 30, t);
        VertexCover prime = is_to_cover(g, is);
        BnrOutcome r = solve_bnr(g, prime, {});
        CHECK(r.status == SolveStatus::Optimal);
        CHECK(r.cover->size() <= prime.size());
    }
}

TEST_CASE("node budget trips to TimedOut") {
    std::mt19937 rng(90);
    Graph g = random_graph(40, 0.5, rng);
    BnrLimits limits;
    limits.node_budget = 2;
    BnrOutcome r = solve_bnr(g, VertexCover::of(g.alive_vertices()), limits);
    CHECK(r.status == SolveStatus::TimedOut);
    CHECK(!r.cover.has_value());
}

TEST_CASE("disconnected graphs are solved per component") {
    // two C5s and a K4, disjoint
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 1) % 5);
    for (int u = 10; u < 14; ++u)
        for (int v = u + 1; v < 14; ++v) e.emplace_back(u, v);
    Graph g = build_graph(14, e);
    BnrOutcome r = solve_bnr(g, VertexCover::of(g.alive_vertices()), {});
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.cover->size() == 3 + 3 + 3);
    CHECK(is_vertex_cover(g, *r.cover));
}

TEST_CASE("local-search priming does not increase the node count (trend)") {
    std::mt19937 rng(2718);
    int not_worse = 0, total = 0;
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<int> nd(10, 16);
        Graph g = random_graph(nd(rng), 0.25 + 0.03 * (t % 5), rng);
        BnrOutcome trivial = solve_bnr(g, VertexCover::of(g.alive_vertices()), {});
        IndependentSet is = run_ils(g, 10ll * g.alive_count(), t);
        BnrOutcome primed = solve_bnr(g, is_to_cover(g, is), {});
        REQUIRE(trivial.status == SolveStatus::Optimal);
        REQUIRE(primed.status == SolveStatus::Optimal);
        CHECK(primed.cover->size() == trivial.cover->size());
        not_worse += primed.nodes <= trivial.nodes;
        ++total;
    }
    // a desk-scale stand-in for the full-benchmark observation that priming
    // helps; required on at least 90% of the corpus
    CHECK(not_worse * 10 >= total * 9);
}
