#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "predsched/instance.hpp"
#include "predsched/rational.hpp"

namespace predsched {

struct Assignment {
    int machine = 0;
    Rational start;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// One (machine, start) entry per job, indexed by job id.
struct NonPreemptiveSchedule {
    std::vector<Assignment> assignments;
};

/// Piecewise-constant processing speeds. intervals[k] holds the speeds on
/// [breakpoints[k], breakpoints[k+1]); jobs absent from the map run at 0.
struct FluidSchedule {
    std::vector<Rational> breakpoints;
    std::vector<std::map<int, Rational>> intervals;
};

struct Segment {
    int job = 0;
    int machine = 0;
    Rational start;
    Rational end;

    friend bool operator==(const Segment&, const Segment&) = default;
};

struct DiscretePreemptiveSchedule {
    std::vector<Segment> segments;
};

/// Outcome of a schedule check. On failure, names the first violated
/// invariant and whichever of job / machine / interval it concerns.
struct Validation {
    bool ok = true;
    std::string violation;
    std::optional<int> job;
    std::optional<int> machine;
    std::optional<std::size_t> interval;

    explicit operator bool() const { return ok; }
    [[nodiscard]] std::string describe() const;

    static Validation pass() { return {}; }
    static Validation fail(std::string what, std::optional<int> job = {}, std::optional<int> machine = {},
                           std::optional<std::size_t> interval = {}) {
        return Validation{false, std::move(what), job, machine, interval};
    }
};

Validation validate_nonpreemptive(const Instance& instance, const NonPreemptiveSchedule& schedule);
Validation validate_fluid(const Instance& instance, const FluidSchedule& schedule);
Validation validate_discrete(const Instance& instance, const DiscretePreemptiveSchedule& schedule);

Rational makespan(const Instance& instance, const NonPreemptiveSchedule& schedule);
Rational makespan(const FluidSchedule& schedule);
Rational makespan(const DiscretePreemptiveSchedule& schedule);

/// Completion time of each job in a fluid schedule (the instant its
/// cumulative work reaches p_j). Requires a valid schedule.
std::vector<Rational> fluid_completion_times(const Instance& instance, const FluidSchedule& schedule);

}  // namespace predsched
