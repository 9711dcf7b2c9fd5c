#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "vc/graph.hpp"
#include "vc/solution.hpp"

namespace vc {

// Solver configurations studied side by side by the benchmark harness.
enum class Ablation { FullA, MoMC, RMoMC, LSBnR, BnR };

enum class SolvedBy {
    Phase1Trivial,
    Phase2,
    Phase3Kernel,
    Phase3Original,
    Phase4,
    Phase5,
    Unsolved
};

struct PhasePlan {
    double total_budget_s = 1800.0;
    double short_limit_s = 1.0;
    double long_limit_s = 30.0;
    long long clique_branch_budget_kernel = 50000;
    long long clique_branch_budget_original = 100000;
    std::uint32_t seed = 1;
    double ils_time_share_s = 5.0;  // additionally capped at 10% of the total
    int densify_cap = 20000;
    std::string external_clique_solver;
    Ablation ablation = Ablation::FullA;

    // Test mode swaps every wall-clock limit for the node budgets below and
    // zeroes reported times, making runs bit-reproducible for a fixed seed.
    bool test_mode = false;
    long long bnr_short_nodes = 20000;
    long long bnr_long_nodes = 200000;
    long long ils_iterations = 512;
    long long phase5_branches = 2000000;

    void validate() const;  // enforces short <= long <= total
};

struct SolveReport {
    std::string instance;
    SolvedBy solved_by = SolvedBy::Unsolved;
    int size = -1;
    std::optional<VertexCover> cover;  // original-graph ids
    int n = 0;
    long long m = 0;
    int n_prime = 0;
    long long m_prime = 0;
    std::map<std::string, double> elapsed_ms;  // per phase plus "total"
    long long branches = 0;                    // search nodes plus clique branches
    bool verified = false;

    bool solved() const { return solved_by != SolvedBy::Unsolved; }
    std::string to_json() const;
};

// Runs the phase schedule (or the selected ablation subset) and returns the
// first verified optimal cover found.
SolveReport solve(const Graph& g, const PhasePlan& plan, const std::string& instance_name = "");

const char* to_string(SolvedBy phase);
const char* to_string(Ablation a);
bool ablation_from_string(const std::string& name, Ablation* out);

}  // namespace vc
