#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "nmi/errors.hpp"

namespace nmi {

/// Resource limits for one run. A default-constructed budget is unlimited.
///
/// `max_points` caps every enumeration (lattice boxes, subsets, search
/// nodes); `max_seconds` is a wall-clock deadline measured from
/// construction.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    Budget() : start_(Clock::now()) {}
    Budget(std::optional<std::uint64_t> max_points, std::optional<double> max_seconds)
        : max_points_(max_points), max_seconds_(max_seconds), start_(Clock::now()) {}

    static Budget unlimited() { return Budget{}; }

    std::optional<std::uint64_t> max_points() const noexcept { return max_points_; }
    std::optional<double> max_seconds() const noexcept { return max_seconds_; }

    double elapsed_seconds() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

    /// Throws if `count` items would exceed the point budget.
    void require_points(std::uint64_t count, const std::string& what) const {
        if (max_points_ && count > *max_points_) {
            throw BudgetExceeded(what + " needs " + std::to_string(count) +
                                 " points, budget is " + std::to_string(*max_points_));
        }
    }

    void check_time(const std::string& what) const {
        if (max_seconds_ && elapsed_seconds() > *max_seconds_) {
            throw BudgetExceeded(what + " exceeded the wall-clock budget of " +
                                 std::to_string(*max_seconds_) + " s");
        }
    }

private:
    std::optional<std::uint64_t> max_points_;
    std::optional<double> max_seconds_;
    Clock::time_point start_;
};

}  // namespace nmi
