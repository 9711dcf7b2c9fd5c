#include "vc/bench.hpp"

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "vc/pace_io.hpp"
#include "vc/verify.hpp"

namespace vc {

namespace fs = std::filesystem;

const char* kBenchCsvHeader =
    "instance,ablation,solved,phase,size,n,m,n_prime,m_prime,elapsed_s,verified,error";

std::string bench_row_to_csv(const BenchRow& r) {
    std::ostringstream out;
    out << r.instance << ',' << r.ablation << ',' << r.solved << ',' << r.phase << ',' << r.size
        << ',' << r.n << ',' << r.m << ',' << r.n_prime << ',' << r.m_prime << ',' << r.elapsed_s
        << ',' << r.verified << ',' << r.error;
    return out.str();
}

std::optional<BenchRow> bench_row_from_csv(const std::string& line) {
    std::vector<std::string> f;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            f.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    f.push_back(cur);
    if (f.size() != 12 || f[0] == "instance") return std::nullopt;
    try {
        BenchRow r;
        r.instance = f[0];
        r.ablation = f[1];
        r.solved = std::stoi(f[2]);
        r.phase = f[3];
        r.size = std::stoi(f[4]);
        r.n = std::stoi(f[5]);
        r.m = std::stoll(f[6]);
        r.n_prime = std::stoi(f[7]);
        r.m_prime = std::stoll(f[8]);
        r.elapsed_s = std::stod(f[9]);
        r.verified = std::stoi(f[10]);
        r.error = f[11];
        return r;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::vector<BenchRow> read_results_csv(const std::string& path) {
    std::vector<BenchRow> rows;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line))
        if (auto r = bench_row_from_csv(line)) rows.push_back(*r);
    return rows;
}

namespace {

struct Job {
    std::string instance_path;
    std::string name;
    pid_t pid = -1;
    std::string sol_path, json_path;
    std::chrono::steady_clock::time_point started;
    double deadline_s = 0.0;
    bool killed = false;
};

pid_t spawn_solver(const BenchConfig& cfg, const std::string& instance, const std::string& sol,
                   const std::string& json) {
    std::vector<std::string> args = {cfg.solver_path,
                                     "--input", instance,
                                     "--output", sol,
                                     "--stats-json", json,
                                     "--ablation", to_string(cfg.ablation),
                                     "--time-limit", std::to_string(cfg.time_limit_s),
                                     "--seed", std::to_string(cfg.seed)};
    if (cfg.test_mode) args.push_back("--test-mode");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);
    pid_t pid = fork();
    if (pid == 0) {
        // child: silence solver chatter, keep stderr for diagnostics
        FILE* devnull = fopen("/dev/null", "w");
        if (devnull) dup2(fileno(devnull), STDOUT_FILENO);
        execv(argv[0], argv.data());
        perror("execv");
        _exit(127);
    }
    return pid;
}

BenchRow collect(const BenchConfig& cfg, const Job& job, int exit_code) {
    BenchRow row;
    row.instance = job.name;
    row.ablation = to_string(cfg.ablation);
    row.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - job.started)
                        .count();
    if (job.killed) {
        row.error = "timeout-killed";
        return row;
    }
    std::ifstream jf(job.json_path);
    if (jf) {
        try {
            nlohmann::json j = nlohmann::json::parse(jf);
            row.phase = j.value("phase", "Unsolved");
            row.size = j.value("size", -1);
            row.n = j.value("n", 0);
            row.m = j.value("m", 0ll);
            row.n_prime = j.value("n_prime", 0);
            row.m_prime = j.value("m_prime", 0ll);
            if (!cfg.test_mode && j.contains("elapsed_ms") && j["elapsed_ms"].contains("total"))
                row.elapsed_s = j["elapsed_ms"]["total"].get<double>() / 1000.0;
        } catch (const std::exception& e) {
            row.error = std::string("stats-parse: ") + e.what();
            return row;
        }
    }
    if (exit_code == 1) {
        row.error = "instance-error";
        return row;
    }
    if (exit_code != 0) return row;  // timeout or unsolved: keep phase info

    // Independent re-verification of the emitted solution.
    try {
        ParsedInstance inst = parse_instance_text(read_file_maybe_gz(job.instance_path));
        std::ifstream sf(job.sol_path);
        std::ostringstream ss;
        ss << sf.rdbuf();
        VertexCover cover = parse_solution(ss.str());
        if (is_vertex_cover(inst.graph, cover) &&
            static_cast<int>(cover.size()) == row.size) {
            row.solved = 1;
            row.verified = 1;
        } else {
            row.error = "verification-failed";
        }
    } catch (const std::exception& e) {
        row.error = std::string("verify: ") + e.what();
    }
    return row;
}

}  // namespace

int run_suite(const BenchConfig& cfg) {
    std::vector<std::string> instances;
    for (const auto& entry : fs::directory_iterator(cfg.dir)) {
        std::string p = entry.path().string();
        if (p.size() >= 3 && p.compare(p.size() - 3, 3, ".gr") == 0) instances.push_back(p);
        if (p.size() >= 6 && p.compare(p.size() - 6, 6, ".gr.gz") == 0) instances.push_back(p);
    }
    std::sort(instances.begin(), instances.end());

    std::vector<BenchRow> existing = read_results_csv(cfg.out_csv);
    std::set<std::pair<std::string, std::string>> done;
    for (const auto& r : existing) done.insert({r.instance, r.ablation});

    auto stem = [](const std::string& p) {
        fs::path path(p);
        std::string s = path.filename().string();
        if (s.size() >= 3 && s.compare(s.size() - 3, 3, ".gz") == 0) s.resize(s.size() - 3);
        if (s.size() >= 3 && s.compare(s.size() - 3, 3, ".gr") == 0) s.resize(s.size() - 3);
        return s;
    };

    std::vector<std::string> todo;
    for (const auto& p : instances)
        if (!done.count({stem(p), to_string(cfg.ablation)})) todo.push_back(p);

    std::vector<BenchRow> fresh;
    std::vector<Job> running;
    std::size_t next = 0;
    const int jobs = std::max(1, cfg.jobs);
    int seq = 0;

    while (next < todo.size() || !running.empty()) {
        while (static_cast<int>(running.size()) < jobs && next < todo.size()) {
            Job job;
            job.instance_path = todo[next++];
            job.name = stem(job.instance_path);
            std::string base = "/tmp/vc_bench_" + std::to_string(getpid()) + "_" +
                               std::to_string(seq++);
            job.sol_path = base + ".sol";
            job.json_path = base + ".json";
            job.started = std::chrono::steady_clock::now();
            job.deadline_s = cfg.time_limit_s + cfg.kill_grace_s;
            job.pid = spawn_solver(cfg, job.instance_path, job.sol_path, job.json_path);
            running.push_back(std::move(job));
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(20));
        for (std::size_t i = 0; i < running.size();) {
            Job& job = running[i];
            int status = 0;
            pid_t r = waitpid(job.pid, &status, WNOHANG);
            if (r == job.pid) {
                int code = WIFEXITED(status) ? WEXITSTATUS(status) : 128;
                fresh.push_back(collect(cfg, job, code));
                std::remove(job.sol_path.c_str());
                std::remove(job.json_path.c_str());
                running.erase(running.begin() + i);
                continue;
            }
            double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - job.started)
                    .count();
            if (!job.killed && elapsed > job.deadline_s) {
                kill(job.pid, SIGKILL);  // hard stop; in-process timers can't
                                         // guarantee deep recursion unwinds
                job.killed = true;
            }
            ++i;
        }
    }

    std::sort(fresh.begin(), fresh.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.instance, a.ablation) < std::tie(b.instance, b.ablation);
    });

    std::ofstream out(cfg.out_csv);
    out << kBenchCsvHeader << '\n';
    for (const auto& r : existing) out << bench_row_to_csv(r) << '\n';
    for (const auto& r : fresh) out << bench_row_to_csv(r) << '\n';
    return static_cast<int>(fresh.size());
}

std::vector<CurvePoint> solved_over_time(const std::vector<BenchRow>& rows) {
    std::map<std::string, std::vector<double>> solved_times;
    double t_max = 0.001;
    for (const auto& r : rows) {
        if (r.solved && r.verified) {
            solved_times[r.ablation].push_back(r.elapsed_s);
            t_max = std::max(t_max, r.elapsed_s);
        } else {
            solved_times.try_emplace(r.ablation);
        }
    }
    std::vector<double> grid;
    for (double t = 0.001; t / 2 <= t_max; t *= 2) grid.push_back(t);
    std::vector<CurvePoint> curve;
    for (auto& [ablation, times] : solved_times) {
        std::sort(times.begin(), times.end());
        for (double t : grid) {
            int count = static_cast<int>(
                std::upper_bound(times.begin(), times.end(), t) - times.begin());
            curve.push_back({ablation, t, count});
        }
    }
    return curve;
}

void write_curve_csv(const std::string& path, const std::vector<CurvePoint>& curve) {
    std::ofstream out(path);
    out << "ablation,t,solved\n";
    for (const auto& p : curve) out << p.ablation << ',' << p.t << ',' << p.solved << '\n';
}

}  // namespace vc
