#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "predsched/bounds.hpp"
#include "predsched/instance.hpp"

namespace predsched {

enum class Algorithm { Lppt, Pprr };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

/// One algorithm run compared against the clairvoyant optimum and the
/// guarantee for the instance's own alpha^2.
struct RatioReport {
    std::string digest;
    Algorithm algorithm = Algorithm::Lppt;
    Rational algorithm_makespan;
    Rational optimal_makespan;
    Rational ratio;
    Rational alpha_squared;
    BoundEvaluation bound;
    bool compliant = false;
    bool optimum_exact = true;  // false if the branch-and-bound hit its node budget
};

/// LPPT is paired with opt_nonpreemptive and f_2 / f_3 / f_n by m; PPRR
/// with opt_preemptive and the PPRR guarantee.
RatioReport make_report(const Instance& instance, Algorithm algorithm,
                        std::optional<std::uint64_t> node_budget = std::nullopt);

nlohmann::json to_json(const RatioReport& report);

/// Raised when an empirical ratio exceeds the proven guarantee.
class BoundViolation : public std::runtime_error {
public:
    BoundViolation(Instance instance, Rational ratio, BoundEvaluation bound);

    [[nodiscard]] const Instance& instance() const { return instance_; }
    [[nodiscard]] const Rational& ratio() const { return ratio_; }
    [[nodiscard]] const BoundEvaluation& bound() const { return bound_; }

private:
    Instance instance_;
    Rational ratio_;
    BoundEvaluation bound_;
};

}  // namespace predsched
