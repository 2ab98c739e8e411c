#include "predsched/instance.hpp"

#include <string>

#include "predsched/error.hpp"

namespace predsched {

Instance::Instance(int machines, std::vector<Rational> actual, std::vector<Rational> predicted)
    : machines_(machines) {
    if (machines < 2) throw InvalidInput("instance: need at least 2 machines, got " + std::to_string(machines));
    if (actual.empty()) throw InvalidInput("instance: job list is empty");
    if (actual.size() != predicted.size()) throw InvalidInput("instance: actual/predicted length mismatch");
    jobs_.reserve(actual.size());
    for (std::size_t j = 0; j < actual.size(); ++j) {
        if (actual[j].sign() <= 0 || predicted[j].sign() <= 0) {
            throw InvalidInput("instance: job " + std::to_string(j) + " has a nonpositive time");
        }
        jobs_.push_back(Job{static_cast<int>(j), std::move(actual[j]), std::move(predicted[j])});
    }
}

std::vector<Rational> Instance::actual_times() const {
    std::vector<Rational> out;
    out.reserve(jobs_.size());
    for (const auto& j : jobs_) out.push_back(j.actual);
    return out;
}

std::vector<Rational> Instance::predicted_times() const {
    std::vector<Rational> out;
    out.reserve(jobs_.size());
    for (const auto& j : jobs_) out.push_back(j.predicted);
    return out;
}

Rational Instance::total_actual() const {
    Rational sum;
    for (const auto& j : jobs_) sum += j.actual;
    return sum;
}

Rational Instance::max_actual() const {
    Rational best = jobs_.front().actual;
    for (const auto& j : jobs_) best = max(best, j.actual);
    return best;
}

Rational alpha_squared_of_instance(const Instance& instance) {
    Rational alpha = 1;
    for (const auto& j : instance.jobs()) {
        alpha = max(alpha, max(j.actual / j.predicted, j.predicted / j.actual));
    }
    return alpha * alpha;
}

}  // namespace predsched
