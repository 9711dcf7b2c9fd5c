#pragma once

#include <atomic>
#include <chrono>

namespace vc {

enum class SolveStatus { Optimal, TimedOut, Skipped };

// Wall-clock / node / cancellation budget polled inside solver loops.
struct Budget {
    double time_limit_s = -1.0;   // < 0: unlimited
    long long max_steps = -1;     // nodes or branches; < 0: unlimited
    const std::atomic<bool>* cancel = nullptr;

    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void restart() { started = std::chrono::steady_clock::now(); }
    double elapsed_s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }
    // `steps` is the solver's own counter; the clock is only consulted every
    // 256 steps since frequent time checks slow tight search loops down.
    bool expired(long long steps) const {
        if (max_steps >= 0 && steps > max_steps) return true;
        if ((steps & 255) == 0) {
            if (cancel && cancel->load(std::memory_order_relaxed)) return true;
            if (time_limit_s >= 0 && elapsed_s() > time_limit_s) return true;
        }
        return false;
    }
};

}  // namespace vc
