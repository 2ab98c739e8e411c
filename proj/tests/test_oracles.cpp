#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "predsched/error.hpp"
#include "predsched/lppt.hpp"
#include "predsched/oracles.hpp"

using namespace predsched;
using testing::inst;

namespace {

// Plain odometer over all m^n assignments in exact rationals.
Rational brute_force_opt(const Instance& i) {
    const std::size_t n = i.size();
    const int m = i.machines();
    std::vector<int> digit(n, 0);
    std::optional<Rational> best;
    while (true) {
        std::vector<Rational> load(static_cast<std::size_t>(m));
        for (std::size_t j = 0; j < n; ++j) load[static_cast<std::size_t>(digit[j])] += i.job(j).actual;
        const Rational mk = *std::max_element(load.begin(), load.end());
        if (!best || mk < *best) best = mk;
        std::size_t pos = 0;
        while (pos < n && ++digit[pos] == m) digit[pos++] = 0;
        if (pos == n) break;
    }
    return *best;
}

}  // namespace

TEST_CASE("opt_preemptive: closed form") {
    CHECK(opt_preemptive(inst(2, {2, 1, 1})).makespan == Rational(2));
    CHECK(opt_preemptive(inst(2, {1, 1, 1})).makespan == Rational(3, 2));
    CHECK(opt_preemptive(inst(3, {9})).makespan == Rational(9));
}

TEST_CASE("mcnaughton_schedule: examples") {
    const std::vector<Segment> a{{0, 0, Rational(0), Rational(2)},
                                 {1, 1, Rational(0), Rational(1)},
                                 {2, 1, Rational(1), Rational(2)}};
    CHECK(mcnaughton_schedule(inst(2, {2, 1, 1})).segments == a);

    const auto b = mcnaughton_schedule(inst(2, {1, 1, 1}));
    std::set<std::tuple<int, int, std::string, std::string>> got;
    for (const auto& s : b.segments) got.emplace(s.job, s.machine, s.start.str(), s.end.str());
    const std::set<std::tuple<int, int, std::string, std::string>> expected{
        {0, 0, "0", "1"}, {1, 0, "1", "3/2"}, {1, 1, "0", "1/2"}, {2, 1, "1/2", "3/2"}};
    CHECK(got == expected);

    const auto c = mcnaughton_schedule(inst(2, {4}));
    REQUIRE(c.segments.size() == 1);
    CHECK(c.segments[0] == Segment{0, 0, Rational(0), Rational(4)});
}

TEST_CASE("opt_nonpreemptive: examples against brute force") {
    const Instance a = inst(2, {3, 2, 2});
    const Instance b = inst(2, {1, 1, 2});
    const Instance c = inst(3, {1, 1, 1, 3});
    CHECK(brute_force_opt(a) == Rational(4));
    CHECK(brute_force_opt(b) == Rational(2));
    CHECK(brute_force_opt(c) == Rational(3));
    for (const Instance* i : {&a, &b, &c}) {
        const OptResult r = opt_nonpreemptive(*i);
        CHECK(r.optimal);
        CHECK(r.makespan == brute_force_opt(*i));
        REQUIRE(r.nonpreemptive_witness);
        CHECK(validate_nonpreemptive(*i, *r.nonpreemptive_witness).ok);
        CHECK(makespan(*i, *r.nonpreemptive_witness) == r.makespan);
    }
}

TEST_CASE("opt_nonpreemptive_exhaustive: examples and size cap") {
    CHECK(opt_nonpreemptive_exhaustive(inst(2, {3, 2, 2})).makespan == Rational(4));
    CHECK(opt_nonpreemptive_exhaustive(inst(2, {5})).makespan == Rational(5));
    CHECK(opt_nonpreemptive_exhaustive(inst(2, {1, 1})).makespan == Rational(1));
    std::vector<Rational> thirteen(13, Rational(1));
    CHECK_THROWS_AS(opt_nonpreemptive_exhaustive(Instance(2, thirteen, thirteen)), InvalidInput);
}

TEST_CASE("opt_nonpreemptive: budget exhaustion is reported, not hidden") {
    // Odd-sum job sets where LPT is not optimal need real search.
    const Instance i = Instance(3, testing::ints({19, 17, 16, 14, 13, 11, 10, 8, 7, 5, 4, 3}),
                                testing::ints({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    const OptResult full = opt_nonpreemptive(i);
    CHECK(full.optimal);
    CHECK(full.makespan == opt_nonpreemptive_exhaustive(i).makespan);
    const OptResult capped = opt_nonpreemptive(i, 1);
    if (!capped.optimal) CHECK(capped.makespan >= full.makespan);
    CHECK(capped.nodes <= 1);
}

TEST_CASE("opt_nonpreemptive: huge denominators take the big-integer path") {
    const Rational big = Rational::parse("1/1000000000000000000000");
    const Instance i(2, {Rational(1) + big, Rational(1), Rational(1) - big, Rational(1)},
                     {Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(opt_nonpreemptive(i).makespan == Rational(2));
    CHECK(opt_nonpreemptive_exhaustive(i).makespan == Rational(2));
}

TEST_CASE("oracles: randomized cross-checks") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 400; ++t) {
        const int m = 2 + t % 3;
        const Instance i = testing::random_instance(rng, m, 8, 20, 3);
        const OptResult bnb = opt_nonpreemptive(i);
        REQUIRE(bnb.optimal);
        CHECK(bnb.makespan == opt_nonpreemptive_exhaustive(i).makespan);
        CHECK(bnb.makespan == brute_force_opt(i));
        CHECK(validate_nonpreemptive(i, *bnb.nonpreemptive_witness).ok);
        CHECK(makespan(i, *bnb.nonpreemptive_witness) == bnb.makespan);

        const OptResult pre = opt_preemptive(i);
        CHECK(pre.makespan <= bnb.makespan);
        const auto mc = mcnaughton_schedule(i);
        CHECK(validate_discrete(i, mc).ok);
        CHECK(makespan(mc) == pre.makespan);

        CHECK(bnb.makespan <= makespan(i, run_lppt(i).schedule));
    }
}
