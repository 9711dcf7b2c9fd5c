#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "vc/pace_io.hpp"
#include "vc/portfolio.hpp"
#include "vc/reductions.hpp"
#include "vc/verify.hpp"

using namespace vc;
using namespace vctest;

namespace {

PhasePlan test_plan(std::uint32_t seed = 1) {
    PhasePlan plan;
    plan.test_mode = true;
    plan.seed = seed;
    return plan;
}

}  // namespace

TEST_CASE("an instance solved entirely by reductions reports Phase1Trivial") {
    SolveReport r = solve(path(3), test_plan(), "p3");
    CHECK(r.solved_by == SolvedBy::Phase1Trivial);
    CHECK(r.size == 1);
    CHECK(r.verified);
    CHECK(r.n_prime == 0);
    CHECK(r.m_prime == 0);
}

TEST_CASE("full portfolio matches the oracle in test mode") {
    std::mt19937 rng(1002);
    for (int t = 0; t < 300; ++t) {
        std::uniform_int_distribution<int> nd(1, 16);
        Graph g = random_graph(nd(rng), 0.1 + 0.08 * (t % 10), rng);
        SolveReport r = solve(g, test_plan(), "rnd");
        REQUIRE(r.solved());
        CHECK(r.verified);
        CHECK(r.size == brute_force_vc(g).size);
        CHECK(is_vertex_cover(g, *r.cover));
    }
}

TEST_CASE("later phases engage when the kernel is nonempty") {
    // scan seeds for a graph the kernelizer cannot finish
    std::mt19937 rng(51);
    bool found = false;
    for (int t = 0; t < 200 && !found; ++t) {
        Graph g = random_graph(16, 0.45, rng);
        SolveReport r = solve(g, test_plan(), "hard");
        REQUIRE(r.solved());
        CHECK(r.size == brute_force_vc(g).size);
        if (r.solved_by != SolvedBy::Phase1Trivial) found = true;
    }
    CHECK(found);
}

TEST_CASE("every ablation is exact on small graphs") {
    std::mt19937 rng(600);
    for (Ablation a : {Ablation::FullA, Ablation::MoMC, Ablation::RMoMC, Ablation::LSBnR,
                       Ablation::BnR}) {
        CAPTURE(to_string(a));
        for (int t = 0; t < 60; ++t) {
            std::uniform_int_distribution<int> nd(1, 14);
            Graph g = random_graph(nd(rng), 0.1 + 0.1 * (t % 8), rng);
            PhasePlan plan = test_plan();
            plan.ablation = a;
            SolveReport r = solve(g, plan, "abl");
            REQUIRE(r.solved());
            CHECK(r.size == brute_force_vc(g).size);
            CHECK(r.verified);
        }
    }
}

TEST_CASE("zero budgets surface as Unsolved without a cover") {
    // a graph that survives kernelization, given no search budget at all
    std::mt19937 rng(51);
    Graph g = random_graph(16, 0.45, rng);
    while (kernelize(g).n_prime == 0) g = random_graph(16, 0.45, rng);
    PhasePlan plan = test_plan();
    plan.bnr_short_nodes = 0;
    plan.bnr_long_nodes = 0;
    plan.clique_branch_budget_kernel = 0;
    plan.clique_branch_budget_original = 0;
    plan.phase5_branches = 0;
    plan.ils_iterations = 0;
    SolveReport r = solve(g, plan, "starved");
    CHECK(!r.solved());
    CHECK(!r.cover.has_value());
    CHECK(r.size == -1);
}

TEST_CASE("identical seeds give byte-identical reports and solutions") {
    std::mt19937 rng(77);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(14, 0.35, rng);
        SolveReport a = solve(g, test_plan(42), "det");
        SolveReport b = solve(g, test_plan(42), "det");
        REQUIRE(a.solved());
        CHECK(a.to_json() == b.to_json());
        CHECK(write_solution(*a.cover, 14) == write_solution(*b.cover, 14));
    }
}

TEST_CASE("plan validation") {
    PhasePlan bad;
    bad.short_limit_s = 60.0;
    bad.long_limit_s = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("report JSON carries the documented schema") {
    SolveReport r = solve(cycle(5), test_plan(), "c5");
    std::string j = r.to_json();
    for (const char* key : {"\"instance\"", "\"phase\"", "\"size\"", "\"n\"", "\"m\"",
                            "\"n_prime\"", "\"m_prime\"", "\"elapsed_ms\"", "\"branches\"",
                            "\"verified\""})
        CHECK(j.find(key) != std::string::npos);
    CHECK(r.size == 3);
}
