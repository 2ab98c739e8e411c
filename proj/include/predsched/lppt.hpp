#pragma once

#include <vector>

#include "predsched/instance.hpp"
#include "predsched/schedule.hpp"

namespace predsched {

struct DispatchEvent {
    Rational time;
    int machine = 0;
    int job = 0;
};

struct LpptTrace {
    std::vector<DispatchEvent> dispatches;
    NonPreemptiveSchedule schedule;
};

/// Job ids ordered by predicted time descending, ties by ascending id.
std::vector<int> lppt_order(const Instance& instance);

/// Longest Predicted Processing Time: whenever a machine falls idle it takes
/// the unassigned job with the largest prediction. Completions are driven by
/// actual times. Machines freed at the same instant are served in ascending
/// index order.
LpptTrace run_lppt(const Instance& instance);

}  // namespace predsched
