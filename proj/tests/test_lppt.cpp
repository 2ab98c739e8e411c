#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "predsched/bounds.hpp"
#include "predsched/lppt.hpp"
#include "predsched/oracles.hpp"

using namespace predsched;
using testing::inst;

namespace {

// Classical list scheduling: walk a fixed job sequence and give each job to
// the machine that frees up first (lowest index on ties).
Rational list_scheduling_makespan(const Instance& instance, const std::vector<int>& sequence) {
    std::vector<Rational> load(static_cast<std::size_t>(instance.machines()));
    for (int job : sequence) {
        auto it = std::min_element(load.begin(), load.end());
        *it += instance.job(static_cast<std::size_t>(job)).actual;
    }
    return *std::max_element(load.begin(), load.end());
}

std::vector<int> sorted_by_prediction(const Instance& instance) {
    std::vector<int> seq(instance.size());
    std::iota(seq.begin(), seq.end(), 0);
    std::sort(seq.begin(), seq.end(), [&](int a, int b) {
        const auto& qa = instance.job(static_cast<std::size_t>(a)).predicted;
        const auto& qb = instance.job(static_cast<std::size_t>(b)).predicted;
        if (qa != qb) return qa > qb;
        return a < b;
    });
    return seq;
}

}  // namespace

TEST_CASE("run_lppt: hand-simulated examples") {
    SUBCASE("m=2, p=q=[3,2,2]") {
        const Instance i = inst(2, {3, 2, 2});
        const auto t = run_lppt(i);
        CHECK(t.schedule.assignments[0] == Assignment{0, Rational(0)});
        CHECK(t.schedule.assignments[1] == Assignment{1, Rational(0)});
        CHECK(t.schedule.assignments[2] == Assignment{1, Rational(2)});
        CHECK(makespan(i, t.schedule) == Rational(4));
    }
    SUBCASE("m=2, q=[1,1,1], p=[1,1,2]") {
        const Instance i = inst(2, {1, 1, 2}, {1, 1, 1});
        const auto t = run_lppt(i);
        CHECK(t.schedule.assignments[0].start == Rational(0));
        CHECK(t.schedule.assignments[1].start == Rational(0));
        CHECK(t.schedule.assignments[2].start == Rational(1));
        CHECK(makespan(i, t.schedule) == Rational(3));
    }
    SUBCASE("single job") {
        const Instance i = inst(2, {7});
        CHECK(makespan(i, run_lppt(i).schedule) == Rational(7));
    }
}

TEST_CASE("run_lppt: ties go to the lower id, simultaneous frees to the lower machine") {
    // J1 and J2 tie on prediction; J1 must be dispatched first.
    const Instance i = inst(2, {5, 1, 4}, {3, 2, 2});
    const auto t = run_lppt(i);
    REQUIRE(t.dispatches.size() == 3);
    CHECK(t.dispatches[0].job == 0);
    CHECK(t.dispatches[1].job == 1);
    CHECK(t.dispatches[2].job == 2);
    CHECK(t.dispatches[2].machine == 1);
    CHECK(t.dispatches[2].time == Rational(1));

    // Both machines free at t=1: J2 goes to M0, J3 to M1.
    const Instance j = inst(2, {1, 1, 3, 1}, {4, 4, 2, 1});
    const auto u = run_lppt(j);
    CHECK(u.schedule.assignments[2] == Assignment{0, Rational(1)});
    CHECK(u.schedule.assignments[3] == Assignment{1, Rational(1)});
}

TEST_CASE("run_lppt: n < m leaves surplus machines idle") {
    const Instance i = inst(5, {2, 3}, {1, 1});
    const auto t = run_lppt(i);
    CHECK(t.dispatches.size() == 2);
    CHECK(makespan(i, t.schedule) == Rational(3));
    CHECK(makespan(i, t.schedule) == opt_nonpreemptive(i).makespan);
}

TEST_CASE("run_lppt: properties on random instances") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1500; ++trial) {
        const int m = 2 + trial % 4;
        const Instance i = testing::random_instance(rng, m, 10, 8, 2);
        const auto t = run_lppt(i);
        const Rational mk = makespan(i, t.schedule);

        REQUIRE(validate_nonpreemptive(i, t.schedule).ok);
        CHECK(mk == list_scheduling_makespan(i, sorted_by_prediction(i)));

        // Dispatch order: non-decreasing times, predictions non-increasing, ties by id.
        for (std::size_t k = 1; k < t.dispatches.size(); ++k) {
            const auto& a = t.dispatches[k - 1];
            const auto& b = t.dispatches[k];
            CHECK(a.time <= b.time);
            const auto& qa = i.job(static_cast<std::size_t>(a.job)).predicted;
            const auto& qb = i.job(static_cast<std::size_t>(b.job)).predicted;
            CHECK((qa > qb || (qa == qb && a.job < b.job)));
        }

        // No idling: while jobs remain, each machine's next job starts at the
        // previous one's completion.
        std::vector<std::vector<std::pair<Rational, Rational>>> busy(static_cast<std::size_t>(m));
        for (const auto& d : t.dispatches) {
            busy[static_cast<std::size_t>(d.machine)].emplace_back(d.time, d.time + i.job(static_cast<std::size_t>(d.job)).actual);
        }
        for (const auto& intervals : busy) {
            if (intervals.empty()) continue;
            CHECK(intervals.front().first == Rational(0));
            for (std::size_t k = 1; k < intervals.size(); ++k) CHECK(intervals[k].first == intervals[k - 1].second);
        }

        const OptResult opt = opt_nonpreemptive(i);
        REQUIRE(opt.optimal);
        CHECK(opt.makespan <= mk);
        const AlphaSquared x(alpha_squared_of_instance(i));
        CHECK(mk / opt.makespan <= ub_lppt_general(m, x).value);
        CHECK(mk / opt.makespan <= lppt_bound(m, x).value);
    }
}
