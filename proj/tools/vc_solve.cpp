#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vc/pace_io.hpp"
#include "vc/portfolio.hpp"
#include "vc/reductions.hpp"
#include "vc/verify.hpp"

namespace {

std::string instance_stem(const std::string& path) {
    if (path.empty()) return "stdin";
    std::string s = std::filesystem::path(path).filename().string();
    if (s.size() >= 3 && s.compare(s.size() - 3, 3, ".gz") == 0) s.resize(s.size() - 3);
    if (s.size() >= 3 && s.compare(s.size() - 3, 3, ".gr") == 0) s.resize(s.size() - 3);
    return s;
}

int run_verify(const std::string& instance_path, const std::string& solution_path) {
    try {
        vc::ParsedInstance inst =
            vc::parse_instance_text(vc::read_file_maybe_gz(instance_path));
        std::ifstream sf(solution_path);
        if (!sf) {
            std::cerr << "cannot open " << solution_path << "\n";
            return 1;
        }
        std::ostringstream ss;
        ss << sf.rdbuf();
        vc::VertexCover cover = vc::parse_solution(ss.str());
        if (vc::is_vertex_cover(inst.graph, cover)) {
            std::cout << "valid vertex cover of size " << cover.size() << "\n";
            return 0;
        }
        std::cerr << "not a vertex cover\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 1;
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(path);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimum vertex cover solver (kernelization + local search + "
                 "branch-and-reduce + clique branch-and-bound portfolio)"};

    std::string input_path, output_path, stats_json, external_solver, ablation_name = "FullA";
    bool kernel_only = false;
    vc::PhasePlan plan;

    app.add_option("--input", input_path, "instance file (.gr or .gr.gz); stdin if omitted");
    app.add_option("--output", output_path, "solution file; stdout if omitted");
    app.add_option("--time-limit", plan.total_budget_s, "total budget in seconds");
    app.add_option("--short-limit", plan.short_limit_s, "phase 2 limit in seconds");
    app.add_option("--long-limit", plan.long_limit_s, "phase 4 limit in seconds");
    app.add_option("--seed", plan.seed, "random seed");
    app.add_flag("--kernel-only", kernel_only, "write the kernel and exit");
    app.add_option("--stats-json", stats_json, "write the solve report as JSON");
    app.add_option("--external-clique-solver", external_solver,
                   "binary invoked on a DIMACS complement dump in the clique phases");
    app.add_option("--ablation", ablation_name, "FullA, MoMC, RMoMC, LSBnR, or BnR");
    app.add_flag("--test-mode", plan.test_mode,
                 "replace wall-clock limits with node budgets (reproducible runs)");
    app.add_option("--bnr-short-nodes", plan.bnr_short_nodes, "phase 2 node budget (test mode)");
    app.add_option("--bnr-long-nodes", plan.bnr_long_nodes, "phase 4 node budget (test mode)");
    app.add_option("--ils-iterations", plan.ils_iterations, "ILS iterations (test mode)");
    app.add_option("--phase5-branches", plan.phase5_branches, "phase 5 budget (test mode)");
    app.add_option("--clique-branches-kernel", plan.clique_branch_budget_kernel,
                   "phase 3 branch budget on the kernel");
    app.add_option("--clique-branches-original", plan.clique_branch_budget_original,
                   "phase 3 branch budget on the original graph");

    auto* verify_cmd = app.add_subcommand("verify", "validate a solution file");
    std::string v_instance, v_solution;
    verify_cmd->add_option("--instance", v_instance, "instance file")->required();
    verify_cmd->add_option("--solution", v_solution, "solution file")->required();

    CLI11_PARSE(app, argc, argv);

    if (*verify_cmd) return run_verify(v_instance, v_solution);

    if (!vc::ablation_from_string(ablation_name, &plan.ablation)) {
        std::cerr << "unknown ablation: " << ablation_name << "\n";
        return 1;
    }
    plan.external_clique_solver = external_solver;

    vc::ParsedInstance inst{vc::Graph(0), {}, {}};
    try {
        std::string text;
        if (input_path.empty()) {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            text = vc::read_file_maybe_gz(input_path);
        }
        inst = vc::parse_instance_text(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (!inst.warning.empty()) std::cerr << "warning: " << inst.warning << "\n";

    if (kernel_only) {
        vc::KernelResult kr = vc::kernelize(inst.graph);
        std::ostringstream stats;
        stats << "kernel n'=" << kr.n_prime << " m'=" << kr.m_prime << " offset=" << kr.offset;
        write_output(output_path, vc::write_instance(kr.kernel, {stats.str()}));
        return 0;
    }

    try {
        plan.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    vc::SolveReport report = vc::solve(inst.graph, plan, instance_stem(input_path));
    if (!stats_json.empty()) {
        std::ofstream js(stats_json);
        js << report.to_json() << "\n";
    }
    if (!report.solved()) {
        // Exact-track semantics: no best-effort output on a timeout.
        std::cerr << "unsolved within budget\n";
        return 2;
    }
    write_output(output_path, vc::write_solution(*report.cover, inst.header.n));
    return 0;
}
