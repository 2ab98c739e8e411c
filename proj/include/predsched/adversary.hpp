#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "predsched/bounds.hpp"
#include "predsched/instance.hpp"
#include "predsched/report.hpp"

namespace predsched {

struct GeneratorConfig {
    int machines = 2;
    std::size_t n_min = 1;
    std::size_t n_max = 8;
    Rational x_max = 4;
    Rational step = Rational(1, 16);   // grid for q and for the ratio p/q
    Rational value_max = 4;            // largest predicted time drawn
    std::uint64_t seed = 0;
};

/// Predicted times from {step, 2 step, ..., value_max}; p = q r with r drawn
/// from the step grid subject to r^2 <= x_max and r^-2 <= x_max. Throws
/// InvalidInput when the config admits no ratio or no value.
Instance gen_random_instance(const GeneratorConfig& config);

/// m(m-1) unit jobs followed by one job of actual length m, all predicted 1.
/// LPPT finishes at 2m - 1 against an optimum of m.
Instance worst_case_family_lppt(int m);

struct SearchConfig {
    Algorithm algorithm = Algorithm::Lppt;
    int machines = 2;
    Rational x = 4;                    // alpha^2 cap
    std::size_t n_max = 8;
    std::uint64_t budget = 10'000;     // candidate evaluations
    std::uint64_t seed = 1;
    Rational step = Rational(1, 16);
    Rational value_max = 16;
    std::size_t batch = 8;             // candidates per iteration
    unsigned threads = 1;              // evaluation workers; output does not depend on it
    std::optional<std::uint64_t> node_budget;
};

struct SearchLogEntry {
    std::uint64_t iteration = 0;
    double ratio = 0.0;
    bool accepted = false;
};

struct SearchOutcome {
    Instance best;
    Rational best_ratio;
    BoundEvaluation bound;             // guarantee at the best instance's own alpha^2
    std::uint64_t evaluations = 0;
    std::vector<SearchLogEntry> log;
};

/// Randomized hill climbing with annealed acceptance and restarts over
/// instances on the step grid with alpha^2 <= x. Mutations perturb one p or
/// q, push a job to the edge of its allowed ratio, add, duplicate or drop a
/// job, or swap two job ids. Deterministic in (config, seed). Throws
/// BoundViolation if any candidate beats the applicable guarantee.
SearchOutcome local_search_worst_ratio(const SearchConfig& config);

}  // namespace predsched
