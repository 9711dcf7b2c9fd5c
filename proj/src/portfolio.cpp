#include "vc/portfolio.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "vc/bnr.hpp"
#include "vc/clique.hpp"
#include "vc/ils.hpp"
#include "vc/pace_io.hpp"
#include "vc/reductions.hpp"
#include "vc/verify.hpp"

namespace vc {

void PhasePlan::validate() const {
    if (short_limit_s > long_limit_s || long_limit_s > total_budget_s)
        throw std::invalid_argument("phase plan needs short <= long <= total");
}

const char* to_string(SolvedBy phase) {
    switch (phase) {
        case SolvedBy::Phase1Trivial: return "Phase1Trivial";
        case SolvedBy::Phase2: return "Phase2";
        case SolvedBy::Phase3Kernel: return "Phase3Kernel";
        case SolvedBy::Phase3Original: return "Phase3Original";
        case SolvedBy::Phase4: return "Phase4";
        case SolvedBy::Phase5: return "Phase5";
        case SolvedBy::Unsolved: return "Unsolved";
    }
    return "Unsolved";
}

const char* to_string(Ablation a) {
    switch (a) {
        case Ablation::FullA: return "FullA";
        case Ablation::MoMC: return "MoMC";
        case Ablation::RMoMC: return "RMoMC";
        case Ablation::LSBnR: return "LSBnR";
        case Ablation::BnR: return "BnR";
    }
    return "FullA";
}

bool ablation_from_string(const std::string& name, Ablation* out) {
    for (Ablation a : {Ablation::FullA, Ablation::MoMC, Ablation::RMoMC, Ablation::LSBnR,
                       Ablation::BnR}) {
        if (name == to_string(a)) {
            *out = a;
            return true;
        }
    }
    return false;
}

std::string SolveReport::to_json() const {
    nlohmann::ordered_json j;
    j["instance"] = instance;
    j["phase"] = to_string(solved_by);
    j["size"] = size;
    j["n"] = n;
    j["m"] = m;
    j["n_prime"] = n_prime;
    j["m_prime"] = m_prime;
    nlohmann::ordered_json e;
    for (const auto& [k, v] : elapsed_ms) e[k] = v;
    j["elapsed_ms"] = e;
    j["branches"] = branches;
    j["verified"] = verified;
    return j.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

struct PhaseTimer {
    Clock::time_point start = Clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

struct Orchestrator {
    const Graph& input;
    const PhasePlan& plan;
    SolveReport report;
    Clock::time_point t0 = Clock::now();

    Orchestrator(const Graph& g, const PhasePlan& p, const std::string& name) : input(g), plan(p) {
        report.instance = name;
        report.n = g.alive_count();
        report.m = g.alive_edges();
        report.n_prime = report.n;
        report.m_prime = static_cast<long long>(report.m);
    }

    double remaining_s() const {
        if (plan.test_mode) return 1e18;
        double used = std::chrono::duration<double>(Clock::now() - t0).count();
        return plan.total_budget_s - used;
    }

    void note_phase(const std::string& key, const PhaseTimer& t) {
        report.elapsed_ms[key] = plan.test_mode ? 0.0 : t.ms();
    }

    // Validates a cover of the kernel, lifts it, verifies it on the input.
    bool finish_with_kernel_cover(const KernelResult& kr, const VertexCover& kernel_cover,
                                  SolvedBy phase) {
        if (!is_vertex_cover(kr.kernel, kernel_cover))
            throw std::logic_error("portfolio: phase produced a non-cover of the kernel");
        return finish(lift(kr.trace, kernel_cover), phase);
    }

    bool finish(VertexCover cover, SolvedBy phase) {
        if (!is_vertex_cover(input, cover)) return false;  // never emit unverified output
        report.solved_by = phase;
        report.size = static_cast<int>(cover.size());
        report.cover = std::move(cover);
        report.verified = true;
        return true;
    }

    VertexCover trivial_cover(const Graph& g) const {
        return VertexCover::of(g.alive_vertices());
    }

    long long ils_budget(const Graph& kernel) {
        if (plan.test_mode) return plan.ils_iterations;
        double share = std::min(plan.ils_time_share_s, 0.1 * plan.total_budget_s);
        share = std::min(share, std::max(0.0, remaining_s()));
        PhaseTimer probe;
        run_ils(kernel, 64, plan.seed);
        double per_iter_s = std::max(probe.ms() / 1000.0 / 64.0, 1e-9);
        double budget = share / per_iter_s;
        return std::min<long long>(static_cast<long long>(budget), 10'000'000ll);
    }

    BnrLimits bnr_limits(double wall_limit, long long node_budget) const {
        BnrLimits lim;
        if (plan.test_mode) {
            lim.node_budget = node_budget;
        } else {
            lim.time_limit_s = std::max(0.0, std::min(wall_limit, remaining_s()));
        }
        return lim;
    }

    // Branch budgets stand in for the clock inside the tight clique loop;
    // the global deadline is still honored at the 256-branch poll points.
    CliqueOptions clique_opts(long long branch_budget) {
        CliqueOptions opts;
        opts.branch_budget = branch_budget;
        opts.densify_cap = plan.densify_cap;
        opts.external_solver = plan.external_clique_solver;
        if (!plan.test_mode) opts.time_limit_s = std::max(0.0, remaining_s());
        return opts;
    }

    SolveReport run() {
        plan.validate();
        switch (plan.ablation) {
            case Ablation::FullA: run_full(); break;
            case Ablation::MoMC: run_momc_only(); break;
            case Ablation::RMoMC: run_rmomc(); break;
            case Ablation::LSBnR: run_bnr_ablation(true); break;
            case Ablation::BnR: run_bnr_ablation(false); break;
        }
        report.elapsed_ms["total"] =
            plan.test_mode ? 0.0
                           : std::chrono::duration<double>(Clock::now() - t0).count() * 1000.0;
        return report;
    }

    KernelResult phase1_kernelize() {
        PhaseTimer t;
        KernelResult kr = kernelize(input);
        report.n_prime = kr.n_prime;
        report.m_prime = kr.m_prime;
        note_phase("phase1", t);
        return kr;
    }

    void run_full() {
        // Phase 1: kernelize; an empty kernel solves the instance outright.
        KernelResult kr = phase1_kernelize();
        if (kr.kernel.alive_count() == 0) {
            finish_with_kernel_cover(kr, VertexCover{}, SolvedBy::Phase1Trivial);
            return;
        }
        PhaseTimer t_ils;
        IndependentSet s_init = run_ils(kr.kernel, ils_budget(kr.kernel), plan.seed);
        VertexCover c_init = is_to_cover(kr.kernel, s_init);
        report.elapsed_ms["phase1"] += plan.test_mode ? 0.0 : t_ils.ms();

        // Phase 2: short branch-and-reduce primed by local search.
        {
            PhaseTimer t;
            BnrOutcome r = solve_bnr(kr.kernel, c_init,
                                     bnr_limits(plan.short_limit_s, plan.bnr_short_nodes));
            report.branches += r.nodes;
            note_phase("phase2", t);
            if (r.status == SolveStatus::Optimal &&
                finish_with_kernel_cover(kr, *r.cover, SolvedBy::Phase2))
                return;
        }
        // Phase 3: clique solver on the kernel complement, then on the
        // original input (kernelization sometimes makes it harder).
        {
            PhaseTimer t;
            VcViaClique r = solve_vc_via_clique(
                kr.kernel, c_init, clique_opts(plan.clique_branch_budget_kernel));
            report.branches += r.branches;
            if (r.status == SolveStatus::Optimal &&
                finish_with_kernel_cover(kr, r.cover, SolvedBy::Phase3Kernel)) {
                note_phase("phase3", t);
                return;
            }
            VcViaClique r2 = solve_vc_via_clique(
                input, trivial_cover(input), clique_opts(plan.clique_branch_budget_original));
            report.branches += r2.branches;
            note_phase("phase3", t);
            if (r2.status == SolveStatus::Optimal && finish(r2.cover, SolvedBy::Phase3Original))
                return;
        }
        // Phase 4: long branch-and-reduce.
        if (remaining_s() > 0) {
            PhaseTimer t;
            BnrOutcome r =
                solve_bnr(kr.kernel, c_init, bnr_limits(plan.long_limit_s, plan.bnr_long_nodes));
            report.branches += r.nodes;
            note_phase("phase4", t);
            if (r.status == SolveStatus::Optimal &&
                finish_with_kernel_cover(kr, *r.cover, SolvedBy::Phase4))
                return;
        }
        // Phase 5: clique solver on the original input with the rest of the
        // time, approximated by a large branch budget in test mode.
        if (remaining_s() > 0) {
            PhaseTimer t;
            long long budget = plan.test_mode ? plan.phase5_branches : -1;
            VcViaClique r = solve_vc_via_clique(input, trivial_cover(input), clique_opts(budget));
            report.branches += r.branches;
            note_phase("phase5", t);
            if (r.status == SolveStatus::Optimal && finish(r.cover, SolvedBy::Phase5)) return;
        }
    }

    void run_momc_only() {
        PhaseTimer t;
        long long budget = plan.test_mode ? plan.phase5_branches : -1;
        VcViaClique r = solve_vc_via_clique(input, trivial_cover(input), clique_opts(budget));
        report.branches += r.branches;
        note_phase("phase5", t);
        if (r.status == SolveStatus::Optimal) finish(r.cover, SolvedBy::Phase5);
    }

    void run_rmomc() {
        KernelResult kr = phase1_kernelize();
        if (kr.kernel.alive_count() == 0) {
            finish_with_kernel_cover(kr, VertexCover{}, SolvedBy::Phase1Trivial);
            return;
        }
        PhaseTimer t;
        long long budget = plan.test_mode ? plan.phase5_branches : -1;
        VcViaClique r =
            solve_vc_via_clique(kr.kernel, trivial_cover(kr.kernel), clique_opts(budget));
        report.branches += r.branches;
        note_phase("phase3", t);
        if (r.status == SolveStatus::Optimal)
            finish_with_kernel_cover(kr, r.cover, SolvedBy::Phase3Kernel);
    }

    void run_bnr_ablation(bool with_ils) {
        KernelResult kr = phase1_kernelize();
        if (kr.kernel.alive_count() == 0) {
            finish_with_kernel_cover(kr, VertexCover{}, SolvedBy::Phase1Trivial);
            return;
        }
        VertexCover init;
        if (with_ils) {
            PhaseTimer t_ils;
            IndependentSet s = run_ils(kr.kernel, ils_budget(kr.kernel), plan.seed);
            init = is_to_cover(kr.kernel, s);
            report.elapsed_ms["phase1"] += plan.test_mode ? 0.0 : t_ils.ms();
        } else {
            init = trivial_cover(kr.kernel);
        }
        PhaseTimer t;
        BnrOutcome r = solve_bnr(kr.kernel, init,
                                 bnr_limits(remaining_s(), plan.bnr_long_nodes));
        report.branches += r.nodes;
        note_phase("phase4", t);
        if (r.status == SolveStatus::Optimal)
            finish_with_kernel_cover(kr, *r.cover, SolvedBy::Phase4);
    }
};

}  // namespace

SolveReport solve(const Graph& g, const PhasePlan& plan, const std::string& instance_name) {
    Orchestrator orch(g, plan, instance_name);
    return orch.run();
}

}  // namespace vc
