#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/stat.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "test_util.hpp"
#include "vc/clique.hpp"
#include "vc/verify.hpp"

using namespace vc;
using namespace vctest;

namespace {

bool pairwise_adjacent(const BitsetGraph& g, const std::vector<Vertex>& clique) {
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adj[clique[i]].test(clique[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("bitset primitives") {
    Bits b(130);
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.first() == 0);
    CHECK(b.next(0) == 64);
    CHECK(b.next(64) == 129);
    CHECK(b.next(129) == -1);
    Bits c(130);
    c.set(64);
    CHECK(b.intersects(c));
    b -= c;
    CHECK(!b.test(64));
    b.set_all();
    CHECK(b.count() == 130);
}

TEST_CASE("max clique on K6 stays within the branch contract") {
    BitsetGraph k6 = BitsetGraph::of(complete(6));
    CliqueResult r = max_clique(k6, 0, -1);
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.size == 6);
    CHECK(r.branches <= 6);
    CHECK(pairwise_adjacent(k6, r.clique));
}

TEST_CASE("complement of C5 is C5 with clique number 2") {
    BitsetGraph comp = BitsetGraph::complement_of(cycle(5));
    CliqueResult r = max_clique(comp, 0, -1);
    CHECK(r.size == 2);
}

TEST_CASE("clique size matches the enumeration oracle") {
    std::mt19937 rng(33);
    for (int t = 0; t < 1000; ++t) {
        std::uniform_int_distribution<int> nd(1, 16);
        Graph g = random_graph(nd(rng), 0.1 + 0.08 * (t % 10), rng);
        BitsetGraph bg = BitsetGraph::of(g);
        CliqueResult r = max_clique(bg, 0, -1);
        CHECK(r.status == SolveStatus::Optimal);
        CHECK(r.size == brute_force_max_clique(g));
        CHECK(pairwise_adjacent(bg, r.clique));
    }
}

TEST_CASE("branch budget is respected") {
    std::mt19937 rng(44);
    Graph g = random_graph(30, 0.5, rng);
    BitsetGraph bg = BitsetGraph::of(g);
    CliqueResult r = max_clique(bg, 0, 1);
    CHECK(r.status == SolveStatus::TimedOut);
    CHECK(r.branches <= 2);  // budget plus the node that tripped it
}

TEST_CASE("a seeded bound prunes without losing optimality") {
    std::mt19937 rng(55);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(12, 0.4, rng);
        BitsetGraph bg = BitsetGraph::of(g);
        int omega = brute_force_max_clique(g);
        CliqueResult seeded = max_clique(bg, omega, -1);
        CHECK(seeded.status == SolveStatus::Optimal);
        CHECK(seeded.size == omega);
        CHECK(seeded.clique.empty());  // nothing beats the seed
        CliqueResult below = max_clique(bg, omega - 1, -1);
        CHECK(below.size == omega);
        CHECK(!below.clique.empty());
    }
}

TEST_CASE("solve_vc_via_clique on P3") {
    VcViaClique r = solve_vc_via_clique(path(3), VertexCover::of({0, 1, 2}), {});
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.cover.vertices == std::vector<Vertex>{1});
}

TEST_CASE("solve_vc_via_clique matches the oracle") {
    std::mt19937 rng(66);
    for (int t = 0; t < 500; ++t) {
        std::uniform_int_distribution<int> nd(1, 16);
        Graph g = random_graph(nd(rng), 0.1 + 0.08 * (t % 10), rng);
        VcViaClique r = solve_vc_via_clique(g, VertexCover::of(g.alive_vertices()), {});
        CHECK(r.status == SolveStatus::Optimal);
        CHECK(is_vertex_cover(g, r.cover));
        CHECK(static_cast<int>(r.cover.size()) == brute_force_vc(g).size);
    }
}

TEST_CASE("an optimal initial cover is returned unchanged") {
    std::mt19937 rng(77);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(12, 0.3, rng);
        VertexCover opt = brute_force_vc(g).witness;
        VcViaClique r = solve_vc_via_clique(g, opt, {});
        CHECK(r.status == SolveStatus::Optimal);
        CHECK(r.cover.size() == opt.size());
    }
}

TEST_CASE("densification cap skips huge graphs") {
    CliqueOptions opts;
    opts.densify_cap = 5;
    VcViaClique r = solve_vc_via_clique(cycle(10), VertexCover::of(cycle(10).alive_vertices()),
                                        opts);
    CHECK(r.status == SolveStatus::Skipped);
}

TEST_CASE("external solver adapter consumes a DIMACS clique answer") {
    // P3's complement is the single edge between the endpoints; a stub
    // "solver" that prints that clique must drive the cover to {center}.
    std::string script = "/tmp/vc_fake_clique_" + std::to_string(getpid()) + ".sh";
    {
        std::ofstream out(script);
        out << "#!/bin/sh\necho \"v 1 3\"\n";
    }
    chmod(script.c_str(), 0755);
    CliqueOptions opts;
    opts.external_solver = script;
    VcViaClique r = solve_vc_via_clique(path(3), VertexCover::of({0, 1, 2}), opts);
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.cover.vertices == std::vector<Vertex>{1});
    std::remove(script.c_str());
}
