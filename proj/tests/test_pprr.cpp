#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "predsched/bounds.hpp"
#include "predsched/error.hpp"
#include "predsched/oracles.hpp"
#include "predsched/pprr.hpp"

using namespace predsched;
using testing::inst;
using testing::ints;

namespace {

// Definition of d evaluated term by term, no shared prefix sums.
int mandatory_by_definition(int g, const std::vector<Rational>& q) {
    const int h = static_cast<int>(q.size());
    int best = 0;
    for (int k = 1; k <= std::min(g, h); ++k) {
        Rational rest;
        for (int i = k + 1; i <= h; ++i) rest += q[static_cast<std::size_t>(i - 1)];
        if (Rational(g - k) * q[static_cast<std::size_t>(k - 1)] >= rest) best = k;
    }
    return best;
}

}  // namespace

TEST_CASE("compute_mandatory_count: examples") {
    const auto a = ints({2, 1, 1});
    CHECK(compute_mandatory_count(2, a) == 1);
    const auto b = ints({1, 1, 1});
    CHECK(compute_mandatory_count(2, b) == 0);
    const auto c = ints({5, 4});
    CHECK(compute_mandatory_count(3, c) == 2);
    // every k qualifies; the largest wins (k=g leaves an empty tail)
    const auto d = ints({1, 1, 1});
    CHECK(compute_mandatory_count(3, d) == 3);
}

TEST_CASE("compute_mandatory_count: rejects bad input") {
    const auto unsorted = ints({1, 2});
    CHECK_THROWS_AS(compute_mandatory_count(2, unsorted), InvalidInput);
    CHECK_THROWS_AS(compute_mandatory_count(2, std::vector<Rational>{}), InvalidInput);
    const auto ok = ints({2, 1});
    CHECK_THROWS_AS(compute_mandatory_count(0, ok), InvalidInput);
}

TEST_CASE("compute_mandatory_count matches the definition") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 3000; ++t) {
        const int g = std::uniform_int_distribution<int>(1, 6)(rng);
        const std::size_t h = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
        std::vector<Rational> q;
        for (std::size_t i = 0; i < h; ++i) q.emplace_back(std::uniform_int_distribution<long>(1, 20)(rng), 4);
        std::sort(q.begin(), q.end(), [](const Rational& a, const Rational& b) { return a > b; });
        CHECK(compute_mandatory_count(g, q) == mandatory_by_definition(g, q));
    }
}

TEST_CASE("run_pprr: hand-simulated examples") {
    SUBCASE("m=2, q=p=[2,1,1]") {
        const Instance i = inst(2, {2, 1, 1});
        const auto r = run_pprr(i);
        REQUIRE(r.phases.size() == 1);
        CHECK(r.phases[0].mandatory_count == 1);
        CHECK(r.phases[0].shared_speeds.at(1) == Rational(1, 2));
        CHECK(r.phases[0].shared_speeds.at(2) == Rational(1, 2));
        CHECK(r.fluid.intervals[0].at(0) == Rational(1));
        CHECK(makespan(r.fluid) == Rational(2));
        CHECK(opt_preemptive(i).makespan == Rational(2));
    }
    SUBCASE("m=2, q=p=[1,1,1]") {
        const Instance i = inst(2, {1, 1, 1});
        const auto r = run_pprr(i);
        CHECK(r.phases[0].mandatory_count == 0);
        for (int j = 0; j < 3; ++j) CHECK(r.fluid.intervals[0].at(j) == Rational(2, 3));
        CHECK(makespan(r.fluid) == Rational(3, 2));
    }
    SUBCASE("m=2, q=[2,1,1], p=[1,1,1]") {
        const Instance i = inst(2, {1, 1, 1}, {2, 1, 1});
        const auto r = run_pprr(i);
        REQUIRE(r.phases.size() == 2);
        CHECK(r.phases[0].mandatory_count == 1);
        CHECK(r.fluid.breakpoints[1] == Rational(1));
        CHECK(r.phases[1].unoccupied == 2);
        CHECK(r.phases[1].non_mandatory.size() == 2);
        CHECK(r.phases[1].mandatory_count == 2);
        CHECK(makespan(r.fluid) == Rational(3, 2));
        CHECK(opt_preemptive(i).makespan == Rational(3, 2));
    }
}

TEST_CASE("run_pprr: simultaneous completions share one recomputation") {
    const Instance i = inst(3, {2, 2, 2, 1}, {2, 2, 2, 1});
    const auto r = run_pprr(i);
    CHECK(validate_fluid(i, r.fluid).ok);
    for (std::size_t k = 1; k < r.fluid.breakpoints.size(); ++k) {
        CHECK(r.fluid.breakpoints[k - 1] < r.fluid.breakpoints[k]);
    }
    CHECK(r.phases.size() + 1 == r.fluid.breakpoints.size());
}

TEST_CASE("realize_fluid: wrap-around examples") {
    SUBCASE("mandatory plus two halves") {
        FluidSchedule f{{Rational(0), Rational(2)}, {{{0, Rational(1)}, {1, Rational(1, 2)}, {2, Rational(1, 2)}}}};
        const auto d = realize_fluid(f, 2);
        const std::vector<Segment> expected{{0, 0, Rational(0), Rational(2)},
                                            {1, 1, Rational(0), Rational(1)},
                                            {2, 1, Rational(1), Rational(2)}};
        CHECK(d.segments == expected);
    }
    SUBCASE("three jobs at 2/3") {
        const Rational s(2, 3);
        FluidSchedule f{{Rational(0), Rational(3, 2)}, {{{0, s}, {1, s}, {2, s}}}};
        const auto d = realize_fluid(f, 2);
        const std::set<std::tuple<int, int, std::string, std::string>> got = [&] {
            std::set<std::tuple<int, int, std::string, std::string>> out;
            for (const auto& seg : d.segments) out.emplace(seg.job, seg.machine, seg.start.str(), seg.end.str());
            return out;
        }();
        const std::set<std::tuple<int, int, std::string, std::string>> expected{
            {0, 0, "0", "1"}, {1, 0, "1", "3/2"}, {1, 1, "0", "1/2"}, {2, 1, "1/2", "3/2"}};
        CHECK(got == expected);
        CHECK(validate_discrete(inst(2, {1, 1, 1}), d).ok);
    }
    SUBCASE("single job") {
        FluidSchedule f{{Rational(0), Rational(4)}, {{{0, Rational(1)}}}};
        const auto d = realize_fluid(f, 2);
        REQUIRE(d.segments.size() == 1);
        CHECK(d.segments[0] == Segment{0, 0, Rational(0), Rational(4)});
    }
    SUBCASE("capacity violations are rejected") {
        FluidSchedule fast{{Rational(0), Rational(1)}, {{{0, Rational(3, 2)}}}};
        CHECK_THROWS_AS(realize_fluid(fast, 2), InvalidInput);
        FluidSchedule crowded{{Rational(0), Rational(1)}, {{{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1, 2)}}}};
        CHECK_THROWS_AS(realize_fluid(crowded, 2), InvalidInput);
    }
}

TEST_CASE("run_pprr: phase invariants and realization on random instances") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1500; ++trial) {
        const int m = 2 + trial % 5;
        const Instance i = testing::random_instance(rng, m, 10, 12, 3);
        const auto r = run_pprr(i);

        REQUIRE(validate_fluid(i, r.fluid).ok);
        std::set<int> mandatory;
        for (const auto& ph : r.phases) {
            const int h = static_cast<int>(ph.non_mandatory.size());
            const int d = ph.mandatory_count;
            CHECK(d >= 0);
            CHECK(d <= std::min(ph.unoccupied, h));
            for (int job : ph.non_mandatory) CHECK(mandatory.count(job) == 0);  // absorbing
            for (int k = 0; k < d; ++k) mandatory.insert(ph.non_mandatory[static_cast<std::size_t>(k)]);

            if (ph.unoccupied >= 1 && h >= 1) {
                std::vector<Rational> q;
                for (int job : ph.non_mandatory) q.push_back(i.job(static_cast<std::size_t>(job)).predicted);
                CHECK(d == mandatory_by_definition(ph.unoccupied, q));
            }
            if (h > d) {
                Rational sum;
                Rational largest;
                for (const auto& [job, s] : ph.shared_speeds) {
                    sum += s;
                    largest = max(largest, s);
                }
                CHECK(sum == Rational(ph.unoccupied - d));
                CHECK(largest < Rational(1));
            }
        }

        const Rational mk = makespan(r.fluid);
        const auto discrete = realize_fluid(r.fluid, m);
        CHECK(validate_discrete(i, discrete).ok);
        CHECK(makespan(discrete) == mk);

        // Cumulative work never exceeds m t.
        Rational work;
        for (std::size_t k = 0; k < r.fluid.intervals.size(); ++k) {
            for (const auto& [job, s] : r.fluid.intervals[k]) work += s * (r.fluid.breakpoints[k + 1] - r.fluid.breakpoints[k]);
            CHECK(work <= Rational(m) * r.fluid.breakpoints[k + 1]);
        }

        const Rational opt = opt_preemptive(i).makespan;
        CHECK(mk >= i.max_actual());
        CHECK(mk >= i.total_actual() / Rational(m));
        CHECK(mk / opt <= ub_pprr(m, AlphaSquared(alpha_squared_of_instance(i))).value);

        const Instance clean(m, i.actual_times(), i.actual_times());
        CHECK(makespan(run_pprr(clean).fluid) == opt_preemptive(clean).makespan);

        const auto variant = run_pprr(i, PprrOptions{true});
        CHECK(validate_fluid(i, variant.fluid).ok);
    }
}
