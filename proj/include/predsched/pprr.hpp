#pragma once

#include <map>
#include <span>
#include <vector>

#include "predsched/instance.hpp"
#include "predsched/schedule.hpp"

namespace predsched {

/// State captured each time the PPRR procedure runs (start, and after every
/// batch of simultaneous completions).
struct PprrPhase {
    Rational start;
    int unoccupied = 0;                // g
    std::vector<int> non_mandatory;    // uncompleted, predicted desc / id asc; size is h
    int mandatory_count = 0;           // d
    std::map<int, Rational> shared_speeds;
};

struct PprrOptions {
    /// What-if variant: rank and weight jobs by q_j minus the work already
    /// done on them instead of the original q_j. Overdue jobs (work >= q_j)
    /// fall back to q_j. Not covered by the competitive-ratio guarantee.
    bool residual_predictions = false;
};

struct PprrResult {
    FluidSchedule fluid;
    std::vector<PprrPhase> phases;
};

/// Largest k in [1, min(g, h)] with (g - k) * q_k >= q_{k+1} + ... + q_h
/// (1-based), or 0 when no k qualifies. `predicted` must be nonempty,
/// positive and non-increasing; throws InvalidInput otherwise.
int compute_mandatory_count(int unoccupied, std::span<const Rational> predicted);

/// Predicted Proportional Round Robin, simulated exactly as a fluid schedule.
PprrResult run_pprr(const Instance& instance, const PprrOptions& options = {});

/// Turn a fluid schedule into machine segments, one wrap-around packing per
/// interval (jobs in ascending id). Adjacent pieces of the same job on the
/// same machine are merged. Throws InvalidInput if a speed leaves [0, 1] or
/// an interval's speeds sum above m.
DiscretePreemptiveSchedule realize_fluid(const FluidSchedule& fluid, int machines);

}  // namespace predsched
