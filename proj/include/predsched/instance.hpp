#pragma once

#include <cstddef>
#include <vector>

#include "predsched/rational.hpp"

namespace predsched {

struct Job {
    int id = 0;
    Rational actual;     // p_j, revealed on completion
    Rational predicted;  // q_j, known at time zero

    friend bool operator==(const Job&, const Job&) = default;
};

/// m >= 2 identical machines and a nonempty job list; job ids equal list
/// positions. Immutable once built.
class Instance {
public:
    /// Throws InvalidInput on m < 2, an empty job list, or a nonpositive time.
    Instance(int machines, std::vector<Rational> actual, std::vector<Rational> predicted);

    [[nodiscard]] int machines() const { return machines_; }
    [[nodiscard]] std::size_t size() const { return jobs_.size(); }
    [[nodiscard]] const std::vector<Job>& jobs() const { return jobs_; }
    [[nodiscard]] const Job& job(std::size_t id) const { return jobs_.at(id); }

    [[nodiscard]] std::vector<Rational> actual_times() const;
    [[nodiscard]] std::vector<Rational> predicted_times() const;
    [[nodiscard]] Rational total_actual() const;
    [[nodiscard]] Rational max_actual() const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    int machines_;
    std::vector<Job> jobs_;
};

/// (max_j max{p_j/q_j, q_j/p_j})^2. Always >= 1.
Rational alpha_squared_of_instance(const Instance& instance);

}  // namespace predsched
