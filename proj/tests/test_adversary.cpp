#include "doctest.h"

#include "predsched/adversary.hpp"
#include "predsched/error.hpp"
#include "predsched/io.hpp"
#include "predsched/lppt.hpp"
#include "predsched/oracles.hpp"
#include "predsched/pprr.hpp"

using namespace predsched;

TEST_CASE("gen_random_instance: constraints and determinism") {
    GeneratorConfig c;
    c.machines = 2;
    c.n_min = 5;
    c.n_max = 5;
    c.x_max = 4;
    c.seed = 42;
    const Instance a = gen_random_instance(c);
    CHECK(a.size() == 5);
    CHECK(a.machines() == 2);
    CHECK(alpha_squared_of_instance(a) <= Rational(4));
    CHECK(gen_random_instance(c) == a);

    c.x_max = 1;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        c.seed = seed;
        const Instance b = gen_random_instance(c);
        CHECK(b.actual_times() == b.predicted_times());
    }

    c.step = Rational(2, 3);
    c.x_max = Rational(9, 8);
    CHECK_THROWS_AS(gen_random_instance(c), InvalidInput);
}

TEST_CASE("gen_random_instance: alpha cap holds exactly") {
    GeneratorConfig c;
    c.machines = 3;
    c.n_max = 12;
    for (const Rational& cap : {Rational(9, 8), Rational(3, 2), Rational(2), Rational(9)}) {
        c.x_max = cap;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            c.seed = seed;
            CHECK(alpha_squared_of_instance(gen_random_instance(c)) <= cap);
        }
    }
}

TEST_CASE("worst_case_family_lppt reaches 2 - 1/m") {
    for (int m = 2; m <= 6; ++m) {
        const Instance i = worst_case_family_lppt(m);
        CHECK(i.size() == static_cast<std::size_t>(m * (m - 1) + 1));
        CHECK(alpha_squared_of_instance(i) == Rational(m * m));
        const Rational lppt = makespan(i, run_lppt(i).schedule);
        const OptResult opt = opt_nonpreemptive(i);
        REQUIRE(opt.optimal);
        CHECK(lppt == Rational(2 * m - 1));
        CHECK(opt.makespan == Rational(m));
        CHECK(lppt / opt.makespan == Rational(2) - Rational(1, m));
        CHECK(lppt / opt.makespan == ub_lppt_general(m, AlphaSquared(Rational(m * m))).value);
    }
    CHECK(opt_nonpreemptive_exhaustive(worst_case_family_lppt(2)).makespan == Rational(2));
    CHECK(opt_nonpreemptive_exhaustive(worst_case_family_lppt(3)).makespan == Rational(3));
}

TEST_CASE("local_search_worst_ratio: LPPT, m=2, x=4 recovers the family ratio") {
    SearchConfig c;
    c.algorithm = Algorithm::Lppt;
    c.machines = 2;
    c.x = 4;
    c.n_max = 8;
    c.budget = 10'000;
    c.seed = 1;
    const SearchOutcome s = local_search_worst_ratio(c);
    CHECK(s.best_ratio.to_double() >= 1.45);
    CHECK(s.best_ratio <= s.bound.value);
    CHECK(s.evaluations >= c.budget);
    CHECK(alpha_squared_of_instance(s.best) <= Rational(4));
    // The reported ratio is reproducible from the instance alone.
    const Instance replay = io::parse_instance(io::canonical_instance(s.best));
    CHECK(makespan(replay, run_lppt(replay).schedule) / opt_nonpreemptive(replay).makespan == s.best_ratio);
}

TEST_CASE("local_search_worst_ratio: perfect predictions and PPRR compliance") {
    SearchConfig c;
    c.machines = 2;
    c.x = 1;
    c.budget = 500;
    const SearchOutcome lppt = local_search_worst_ratio(c);
    CHECK(lppt.best_ratio >= Rational(1));

    c.algorithm = Algorithm::Pprr;
    c.budget = 1000;
    CHECK(local_search_worst_ratio(c).best_ratio == Rational(1));

    c.x = 2;
    c.budget = 10'000;
    const SearchOutcome pprr = local_search_worst_ratio(c);
    CHECK(pprr.best_ratio <= Rational(5, 4));
    const Instance& b = pprr.best;
    CHECK(makespan(run_pprr(b).fluid) / opt_preemptive(b).makespan == pprr.best_ratio);
}

TEST_CASE("local_search_worst_ratio: LPPT, m=3, x=9 stays within 5/3") {
    SearchConfig c;
    c.machines = 3;
    c.x = 9;
    c.n_max = 10;
    c.budget = 3000;
    const SearchOutcome s = local_search_worst_ratio(c);
    CHECK(s.best_ratio <= Rational(5, 3));
    CHECK(s.bound.value == Rational(5, 3));
}

TEST_CASE("local_search_worst_ratio: deterministic for any worker count") {
    SearchConfig c;
    c.machines = 3;
    c.x = 3;
    c.budget = 2000;
    c.seed = 77;
    const SearchOutcome one = local_search_worst_ratio(c);
    c.threads = 4;
    const SearchOutcome four = local_search_worst_ratio(c);
    CHECK(one.best == four.best);
    CHECK(one.best_ratio == four.best_ratio);
    CHECK(one.log.size() == four.log.size());

    c.budget = 0;
    CHECK_THROWS_AS(local_search_worst_ratio(c), InvalidInput);
}
