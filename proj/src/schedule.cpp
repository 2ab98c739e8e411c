#include "predsched/schedule.hpp"

#include <algorithm>
#include <sstream>

namespace predsched {

std::string Validation::describe() const {
    if (ok) return "valid";
    std::ostringstream os;
    os << violation;
    if (job) os << " (job " << *job << ")";
    if (machine) os << " (machine " << *machine << ")";
    if (interval) os << " (interval " << *interval << ")";
    return os.str();
}

Validation validate_nonpreemptive(const Instance& instance, const NonPreemptiveSchedule& schedule) {
    const int m = instance.machines();
    if (schedule.assignments.size() != instance.size()) {
        return Validation::fail("assignment count differs from job count");
    }
    std::vector<std::vector<int>> per_machine(static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < instance.size(); ++j) {
        const auto& a = schedule.assignments[j];
        const int id = static_cast<int>(j);
        if (a.machine < 0 || a.machine >= m) return Validation::fail("machine index out of range", id, a.machine);
        if (a.start.sign() < 0) return Validation::fail("negative start time", id, a.machine);
        per_machine[static_cast<std::size_t>(a.machine)].push_back(id);
    }
    for (int machine = 0; machine < m; ++machine) {
        auto& ids = per_machine[static_cast<std::size_t>(machine)];
        std::sort(ids.begin(), ids.end(), [&](int x, int y) {
            return schedule.assignments[static_cast<std::size_t>(x)].start <
                   schedule.assignments[static_cast<std::size_t>(y)].start;
        });
        for (std::size_t k = 1; k < ids.size(); ++k) {
            const auto prev = static_cast<std::size_t>(ids[k - 1]);
            const auto cur = static_cast<std::size_t>(ids[k]);
            const Rational prev_end = schedule.assignments[prev].start + instance.job(prev).actual;
            if (schedule.assignments[cur].start < prev_end) {
                return Validation::fail("overlapping jobs on machine", ids[k], machine);
            }
        }
    }
    return Validation::pass();
}

Validation validate_fluid(const Instance& instance, const FluidSchedule& schedule) {
    const auto& bp = schedule.breakpoints;
    if (bp.empty() || bp.front() != Rational(0)) return Validation::fail("breakpoints must start at 0");
    if (schedule.intervals.size() + 1 != bp.size()) return Validation::fail("interval count must be breakpoints - 1");
    const Rational m(instance.machines());
    const int n = static_cast<int>(instance.size());
    std::vector<Rational> done(instance.size());
    std::vector<bool> finished(instance.size(), false);
    for (std::size_t k = 0; k < schedule.intervals.size(); ++k) {
        if (!(bp[k] < bp[k + 1])) return Validation::fail("breakpoints not strictly increasing", {}, {}, k);
        const Rational length = bp[k + 1] - bp[k];
        Rational total;
        for (const auto& [job, speed] : schedule.intervals[k]) {
            if (job < 0 || job >= n) return Validation::fail("unknown job id", job, {}, k);
            if (speed.sign() < 0) return Validation::fail("negative speed", job, {}, k);
            if (speed > Rational(1)) return Validation::fail("speed above 1", job, {}, k);
            const auto j = static_cast<std::size_t>(job);
            if (speed.sign() > 0 && finished[j]) return Validation::fail("job runs after completion", job, {}, k);
            total += speed;
            done[j] += speed * length;
            if (done[j] > instance.job(j).actual) return Validation::fail("job processed beyond its actual time", job, {}, k);
            if (done[j] == instance.job(j).actual) finished[j] = true;
        }
        if (total > m) return Validation::fail("speed sum exceeds machine count", {}, {}, k);
    }
    for (int j = 0; j < n; ++j) {
        if (!finished[static_cast<std::size_t>(j)]) return Validation::fail("job not completed", j);
    }
    return Validation::pass();
}

Validation validate_discrete(const Instance& instance, const DiscretePreemptiveSchedule& schedule) {
    const int m = instance.machines();
    const int n = static_cast<int>(instance.size());
    std::vector<Rational> done(instance.size());
    for (const auto& s : schedule.segments) {
        if (s.job < 0 || s.job >= n) return Validation::fail("unknown job id", s.job, s.machine);
        if (s.machine < 0 || s.machine >= m) return Validation::fail("machine index out of range", s.job, s.machine);
        if (s.start.sign() < 0) return Validation::fail("negative start time", s.job, s.machine);
        if (!(s.start < s.end)) return Validation::fail("empty or reversed segment", s.job, s.machine);
        done[static_cast<std::size_t>(s.job)] += s.end - s.start;
    }
    auto disjoint_by = [&](auto key, const char* what) -> Validation {
        std::vector<Segment> sorted = schedule.segments;
        std::sort(sorted.begin(), sorted.end(), [&](const Segment& a, const Segment& b) {
            if (key(a) != key(b)) return key(a) < key(b);
            return a.start < b.start;
        });
        for (std::size_t k = 1; k < sorted.size(); ++k) {
            if (key(sorted[k]) == key(sorted[k - 1]) && sorted[k].start < sorted[k - 1].end) {
                return Validation::fail(what, sorted[k].job, sorted[k].machine);
            }
        }
        return Validation::pass();
    };
    if (auto v = disjoint_by([](const Segment& s) { return s.machine; }, "overlapping segments on machine"); !v) return v;
    if (auto v = disjoint_by([](const Segment& s) { return s.job; }, "job runs on two machines at once"); !v) return v;
    for (int j = 0; j < n; ++j) {
        if (done[static_cast<std::size_t>(j)] != instance.job(static_cast<std::size_t>(j)).actual) {
            return Validation::fail("segment lengths do not sum to actual time", j);
        }
    }
    return Validation::pass();
}

Rational makespan(const Instance& instance, const NonPreemptiveSchedule& schedule) {
    Rational best;
    for (std::size_t j = 0; j < schedule.assignments.size(); ++j) {
        best = max(best, schedule.assignments[j].start + instance.job(j).actual);
    }
    return best;
}

Rational makespan(const FluidSchedule& schedule) {
    for (std::size_t k = schedule.intervals.size(); k-- > 0;) {
        for (const auto& [job, speed] : schedule.intervals[k]) {
            if (speed.sign() > 0) return schedule.breakpoints[k + 1];
        }
    }
    return Rational(0);
}

Rational makespan(const DiscretePreemptiveSchedule& schedule) {
    Rational best;
    for (const auto& s : schedule.segments) best = max(best, s.end);
    return best;
}

std::vector<Rational> fluid_completion_times(const Instance& instance, const FluidSchedule& schedule) {
    std::vector<Rational> done(instance.size());
    std::vector<Rational> completion(instance.size());
    for (std::size_t k = 0; k < schedule.intervals.size(); ++k) {
        for (const auto& [job, speed] : schedule.intervals[k]) {
            if (speed.sign() == 0) continue;
            const auto j = static_cast<std::size_t>(job);
            const Rational remaining = instance.job(j).actual - done[j];
            const Rational length = schedule.breakpoints[k + 1] - schedule.breakpoints[k];
            if (speed * length >= remaining) {
                completion[j] = schedule.breakpoints[k] + remaining / speed;
                done[j] = instance.job(j).actual;
            } else {
                done[j] += speed * length;
            }
        }
    }
    return completion;
}

}  // namespace predsched
