#include "predsched/pprr.hpp"

#include <algorithm>
#include <optional>

#include "predsched/error.hpp"

namespace predsched {

int compute_mandatory_count(int unoccupied, std::span<const Rational> predicted) {
    if (predicted.empty()) throw InvalidInput("mandatory count: no jobs");
    if (unoccupied < 1) throw InvalidInput("mandatory count: need at least one unoccupied machine");
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (predicted[i].sign() <= 0) throw InvalidInput("mandatory count: predictions must be positive");
        if (i > 0 && predicted[i] > predicted[i - 1]) throw InvalidInput("mandatory count: predictions not sorted non-increasing");
    }
    const int h = static_cast<int>(predicted.size());
    // tail[k] = q_{k+1} + ... + q_h with 1-based k, i.e. sum of predicted[k..h-1].
    std::vector<Rational> tail(static_cast<std::size_t>(h) + 1);
    for (int i = h - 1; i >= 0; --i) {
        tail[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i) + 1] + predicted[static_cast<std::size_t>(i)];
    }
    for (int k = std::min(unoccupied, h); k >= 1; --k) {
        const auto kk = static_cast<std::size_t>(k);
        if (Rational(unoccupied - k) * predicted[kk - 1] >= tail[kk]) return k;
    }
    return 0;
}

PprrResult run_pprr(const Instance& instance, const PprrOptions& options) {
    const int m = instance.machines();
    const std::size_t n = instance.size();

    std::vector<Rational> remaining = instance.actual_times();
    std::vector<bool> completed(n, false);
    std::vector<bool> mandatory(n, false);
    std::vector<std::optional<int>> machine_job(static_cast<std::size_t>(m));  // mandatory job per machine

    PprrResult result;
    result.fluid.breakpoints.push_back(Rational(0));
    Rational now;
    std::size_t left = n;

    auto estimate = [&](std::size_t j) {
        const Job& job = instance.job(j);
        if (!options.residual_predictions) return job.predicted;
        const Rational residual = job.predicted - (job.actual - remaining[j]);
        return residual.sign() > 0 ? residual : job.predicted;
    };

    while (left > 0) {
        PprrPhase phase;
        phase.start = now;

        std::vector<std::pair<Rational, int>> pool;
        for (std::size_t j = 0; j < n; ++j) {
            if (!completed[j] && !mandatory[j]) pool.emplace_back(estimate(j), static_cast<int>(j));
        }
        std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

        int g = 0;
        for (const auto& slot : machine_job) g += slot ? 0 : 1;
        const int h = static_cast<int>(pool.size());
        phase.unoccupied = g;
        for (const auto& entry : pool) phase.non_mandatory.push_back(entry.second);

        int d = 0;
        if (g >= 1 && h >= 1) {
            std::vector<Rational> preds;
            preds.reserve(pool.size());
            for (const auto& entry : pool) preds.push_back(entry.first);
            d = compute_mandatory_count(g, preds);
        }
        phase.mandatory_count = d;

        // Newly mandatory jobs take the lowest-index free machines.
        int placed = 0;
        for (int machine = 0; machine < m && placed < d; ++machine) {
            auto& slot = machine_job[static_cast<std::size_t>(machine)];
            if (slot) continue;
            const int job = pool[static_cast<std::size_t>(placed)].second;
            slot = job;
            mandatory[static_cast<std::size_t>(job)] = true;
            ++placed;
        }

        std::map<int, Rational> speeds;
        for (const auto& slot : machine_job) {
            if (slot) speeds[*slot] = Rational(1);
        }
        if (h > d) {
            Rational weight;
            for (int i = d; i < h; ++i) weight += pool[static_cast<std::size_t>(i)].first;
            const Rational capacity(g - d);
            for (int i = d; i < h; ++i) {
                const auto& [q, job] = pool[static_cast<std::size_t>(i)];
                const Rational s = capacity * q / weight;
                phase.shared_speeds[job] = s;
                if (s.sign() > 0) speeds[job] = s;
            }
        }

        std::optional<Rational> step;
        for (const auto& [job, s] : speeds) {
            const Rational t = remaining[static_cast<std::size_t>(job)] / s;
            if (!step || t < *step) step = t;
        }
        // Some job always runs: either a machine is occupied or g >= 1 and
        // the shared pool gets positive speed.
        const Rational dt = *step;

        for (const auto& [job, s] : speeds) {
            const auto j = static_cast<std::size_t>(job);
            remaining[j] -= s * dt;
            if (remaining[j].sign() == 0) {
                completed[j] = true;
                --left;
                for (auto& slot : machine_job) {
                    if (slot == job) slot.reset();
                }
            }
        }

        now += dt;
        result.fluid.breakpoints.push_back(now);
        result.fluid.intervals.push_back(std::move(speeds));
        result.phases.push_back(std::move(phase));
    }
    return result;
}

DiscretePreemptiveSchedule realize_fluid(const FluidSchedule& fluid, int machines) {
    if (fluid.intervals.size() + 1 != fluid.breakpoints.size()) throw InvalidInput("realize: interval count mismatch");
    DiscretePreemptiveSchedule out;
    // Index into out.segments of the latest segment per machine, for merging.
    std::vector<std::optional<std::size_t>> last(static_cast<std::size_t>(machines));
    auto emit = [&](int job, int machine, const Rational& start, const Rational& end) {
        auto& tail = last[static_cast<std::size_t>(machine)];
        if (tail) {
            Segment& prev = out.segments[*tail];
            if (prev.job == job && prev.end == start) {
                prev.end = end;
                return;
            }
        }
        tail = out.segments.size();
        out.segments.push_back(Segment{job, machine, start, end});
    };

    for (std::size_t k = 0; k < fluid.intervals.size(); ++k) {
        const Rational& a = fluid.breakpoints[k];
        const Rational& b = fluid.breakpoints[k + 1];
        if (!(a < b)) throw InvalidInput("realize: breakpoints not strictly increasing");
        const Rational length = b - a;
        Rational total;
        for (const auto& [job, s] : fluid.intervals[k]) {
            if (s.sign() < 0 || s > Rational(1)) throw InvalidInput("realize: speed outside [0, 1]");
            total += s;
        }
        if (total > Rational(machines)) throw InvalidInput("realize: speed sum exceeds machine count");

        int machine = 0;
        Rational cursor;  // offset into [a, b) on the current machine
        for (const auto& [job, s] : fluid.intervals[k]) {
            if (s.sign() == 0) continue;
            const Rational work = s * length;
            const Rational room = length - cursor;
            if (work <= room) {
                emit(job, machine, a + cursor, a + cursor + work);
                cursor += work;
                if (cursor == length) {
                    ++machine;
                    cursor = Rational(0);
                }
            } else {
                // Tail of this machine plus head of the next; work <= length
                // keeps the two pieces disjoint in time.
                const Rational spill = work - room;
                emit(job, machine + 1, a, a + spill);
                emit(job, machine, a + cursor, b);
                ++machine;
                cursor = spill;
            }
        }
    }
    return out;
}

}  // namespace predsched
