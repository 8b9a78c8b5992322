#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

namespace cliquebound {

// Cooperative budget shared between workers. Searches call charge()
// periodically; once it returns false the limiter stays tripped and all
// holders are expected to unwind.
class SearchLimiter {
public:
    SearchLimiter() = default;

    void set_step_limit(std::uint64_t steps) { max_steps_ = steps; }

    void set_deadline_after(double seconds) {
        deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(seconds));
        has_deadline_ = true;
    }

    bool tripped() const { return tripped_.load(std::memory_order_relaxed); }

    // Accounts for `steps` units of work; false once the budget is gone.
    bool charge(std::uint64_t steps) {
        if (tripped_.load(std::memory_order_relaxed)) return false;
        std::uint64_t used = used_.fetch_add(steps, std::memory_order_relaxed) + steps;
        if (used > max_steps_ ||
            (has_deadline_ && std::chrono::steady_clock::now() > deadline_)) {
            tripped_.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

private:
    std::atomic<std::uint64_t> used_{0};
    std::uint64_t max_steps_ = UINT64_MAX;
    std::chrono::steady_clock::time_point deadline_{};
    bool has_deadline_ = false;
    std::atomic<bool> tripped_{false};
};

}  // namespace cliquebound
