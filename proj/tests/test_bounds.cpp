#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "vc/bounds.hpp"
#include "vc/verify.hpp"

using namespace vc;
using namespace vctest;

TEST_CASE("clique cover bound") {
    CHECK(lb_clique_cover(complete(4)) == 3);       // one clique
    CHECK(lb_clique_cover(build_graph(6, {})) == 0);  // six singletons
    CHECK(lb_clique_cover(cycle(5)) == 2);          // 2+2+1 partition
}

TEST_CASE("LP bound") {
    CHECK(lb_lp(cycle(5)) == 3);
    CHECK(lb_lp(path(2)) == 1);
    // odd cycles: ceil((2k+1)/2) = k+1, met exactly
    for (int k = 1; k <= 7; ++k) CHECK(lb_lp(cycle(2 * k + 1)) == k + 1);
}

TEST_CASE("cycle cover bound on simple graphs") {
    CHECK(lb_cycle_cover(path(2)) == 1);   // one 2-cycle in the double cover
    CHECK(lb_cycle_cover(cycle(6)) == 3);  // even cycles decompose to their optimum
    CHECK(lb_cycle_cover(cycle(5)) == 3);
    CHECK(lb_cycle_cover(build_graph(3, {})) == 0);
}

TEST_CASE("all three bounds are admissible") {
    std::mt19937 rng(606);
    for (int t = 0; t < 1000; ++t) {
        std::uniform_int_distribution<int> nd(1, 14);
        Graph g = random_graph(nd(rng), 0.1 + 0.08 * (t % 10), rng);
        int opt = brute_force_vc(g).size;
        LowerBounds b = lower_bounds(g);
        CHECK(b.clique_cover <= opt);
        CHECK(b.lp <= opt);
        CHECK(b.cycle_cover <= opt);
        CHECK(b.best() <= opt);
        CHECK(b.clique_cover == lb_clique_cover(g));
        CHECK(b.lp == lb_lp(g));
        CHECK(b.cycle_cover == lb_cycle_cover(g));
    }
}

TEST_CASE("bounds respect hidden vertices") {
    Graph g = complete(5);
    g.hide_vertex(0);
    CHECK(lb_clique_cover(g) == 3);  // K4 remains
    CHECK(lower_bounds(g).best() <= brute_force_vc(g).size);
}
