#include "predsched/report.hpp"

#include "predsched/io.hpp"
#include "predsched/lppt.hpp"
#include "predsched/oracles.hpp"
#include "predsched/pprr.hpp"

namespace predsched {

std::string_view algorithm_name(Algorithm a) { return a == Algorithm::Lppt ? "lppt" : "pprr"; }

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    if (name == "lppt") return Algorithm::Lppt;
    if (name == "pprr") return Algorithm::Pprr;
    return std::nullopt;
}

RatioReport make_report(const Instance& instance, Algorithm algorithm, std::optional<std::uint64_t> node_budget) {
    RatioReport r;
    r.digest = io::instance_digest(instance);
    r.algorithm = algorithm;
    r.alpha_squared = alpha_squared_of_instance(instance);
    const AlphaSquared x(r.alpha_squared);
    if (algorithm == Algorithm::Lppt) {
        r.algorithm_makespan = makespan(instance, run_lppt(instance).schedule);
        const OptResult opt = opt_nonpreemptive(instance, node_budget);
        r.optimal_makespan = opt.makespan;
        r.optimum_exact = opt.optimal;
        r.bound = lppt_bound(instance.machines(), x);
    } else {
        r.algorithm_makespan = makespan(run_pprr(instance).fluid);
        r.optimal_makespan = opt_preemptive(instance).makespan;
        r.bound = pprr_bound(instance.machines(), x);
    }
    r.ratio = r.algorithm_makespan / r.optimal_makespan;
    r.compliant = r.ratio <= r.bound.value;
    return r;
}

nlohmann::json to_json(const RatioReport& r) {
    return {
        {"instance_digest", r.digest},
        {"algorithm", algorithm_name(r.algorithm)},
        {"algorithm_makespan", r.algorithm_makespan.str()},
        {"optimal_makespan", r.optimal_makespan.str()},
        {"optimum_exact", r.optimum_exact},
        {"ratio", r.ratio.str()},
        {"ratio_float", r.ratio.to_double()},
        {"alpha_squared", r.alpha_squared.str()},
        {"bound", {{"formula", formula_id(r.bound.formula)}, {"value", r.bound.value.str()}, {"piece", r.bound.piece}}},
        {"compliant", r.compliant},
    };
}

BoundViolation::BoundViolation(Instance instance, Rational ratio, BoundEvaluation bound)
    : std::runtime_error("bound violation: ratio " + ratio.str() + " exceeds " + std::string(formula_id(bound.formula)) +
                         " = " + bound.value.str() + " on instance " + io::canonical_instance(instance)),
      instance_(std::move(instance)),
      ratio_(std::move(ratio)),
      bound_(std::move(bound)) {}

}  // namespace predsched
