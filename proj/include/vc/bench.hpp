#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vc/portfolio.hpp"

namespace vc {

// One row of the per-instance results CSV.
struct BenchRow {
    std::string instance;
    std::string ablation;
    int solved = 0;
    std::string phase = "Unsolved";
    int size = -1;
    int n = 0;
    long long m = 0;
    int n_prime = 0;
    long long m_prime = 0;
    double elapsed_s = 0.0;
    int verified = 0;
    std::string error;
};

extern const char* kBenchCsvHeader;

std::string bench_row_to_csv(const BenchRow& row);
std::optional<BenchRow> bench_row_from_csv(const std::string& line);

struct BenchConfig {
    std::string dir;           // instance directory (*.gr, *.gr.gz)
    std::string out_csv;
    Ablation ablation = Ablation::FullA;
    int jobs = 1;
    double time_limit_s = 1800.0;
    std::string solver_path;   // vc_solve binary
    bool test_mode = false;    // forwarded to the solver
    std::uint32_t seed = 1;
    double kill_grace_s = 10.0;
};

// Runs the solver over every instance in the directory, one OS process per
// instance with a hard kill at budget + grace. Existing (instance, ablation)
// rows in the output CSV are kept and skipped. Every solved row is
// re-verified against the instance before being written. Returns the number
// of newly computed rows.
int run_suite(const BenchConfig& config);

// Solved-over-time aggregation: for each ablation and each grid time t, the
// number of instances solved within t seconds. The grid is logarithmic,
// doubling from 1 ms past the slowest solve.
struct CurvePoint {
    std::string ablation;
    double t = 0.0;
    int solved = 0;
};

std::vector<CurvePoint> solved_over_time(const std::vector<BenchRow>& rows);

std::vector<BenchRow> read_results_csv(const std::string& path);
void write_curve_csv(const std::string& path, const std::vector<CurvePoint>& curve);

}  // namespace vc
