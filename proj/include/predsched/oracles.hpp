#pragma once

#include <cstdint>
#include <optional>

#include "predsched/instance.hpp"
#include "predsched/schedule.hpp"

namespace predsched {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Offline optimum (actual times only). `optimal` is false when a node
/// budget ran out; `makespan` is then only an upper bound.
struct OptResult {
    Rational makespan;
    std::optional<NonPreemptiveSchedule> nonpreemptive_witness;
    std::optional<DiscretePreemptiveSchedule> preemptive_witness;
    std::uint64_t nodes = 0;
    bool optimal = true;
};

/// max(max_j p_j, sum_j p_j / m), with a McNaughton witness.
OptResult opt_preemptive(const Instance& instance);

/// Wrap-around rule at T = opt_preemptive: fill machines in turn, jobs in
/// id order, spilling the overflow of a job onto the next machine.
DiscretePreemptiveSchedule mcnaughton_schedule(const Instance& instance);

/// Depth-first branch-and-bound for P||Cmax. Jobs largest first, machines
/// with equal load tried once, visited (depth, sorted loads) states skipped.
/// Starts from the LPT incumbent on actual times. A missing budget means
/// kDefaultNodeBudget.
OptResult opt_nonpreemptive(const Instance& instance, std::optional<std::uint64_t> node_budget = std::nullopt);

inline constexpr std::size_t kExhaustiveMaxJobs = 12;

/// Full enumeration of all m^n machine assignments. Throws InvalidInput for
/// n > kExhaustiveMaxJobs.
OptResult opt_nonpreemptive_exhaustive(const Instance& instance);

}  // namespace predsched
