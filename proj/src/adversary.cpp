#include "predsched/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>
#include <utility>

#include "predsched/error.hpp"
#include "predsched/lppt.hpp"
#include "predsched/oracles.hpp"
#include "predsched/pprr.hpp"

namespace predsched {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

/// Largest grid index K with K * step <= limit.
long grid_count(const Rational& limit, const Rational& step) {
    if (step.sign() <= 0) throw InvalidInput("generator: step must be positive");
    return static_cast<long>((limit / step).floor().get_si());
}

/// For q = k_q * step, the grid indices k_p with (k_p / k_q)^2 <= x and
/// (k_q / k_p)^2 <= x form a contiguous range around k_q.
struct RatioWindow {
    long lo;
    long hi;
};

RatioWindow ratio_window(long kq, const Rational& x) {
    auto ok = [&](long kp) {
        const Rational r(kp, kq);
        const Rational r2 = r * r;
        return r2 <= x && Rational(1) <= x * r2;
    };
    long lo = kq;
    while (lo > 1 && ok(lo - 1)) --lo;
    long hi = kq;
    while (ok(hi + 1)) ++hi;
    return {lo, hi};
}

using Genome = std::vector<std::pair<long, long>>;  // (k_p, k_q) grid indices

Instance to_instance(const Genome& genome, int machines, const Rational& step) {
    std::vector<Rational> p;
    std::vector<Rational> q;
    for (const auto& [kp, kq] : genome) {
        p.push_back(Rational(kp) * step);
        q.push_back(Rational(kq) * step);
    }
    return Instance(machines, std::move(p), std::move(q));
}

struct Evaluation {
    std::optional<Rational> ratio;  // empty when the optimum is not certified
    std::exception_ptr error;
};

Evaluation evaluate(const Instance& instance, Algorithm algorithm, std::optional<std::uint64_t> node_budget) {
    Evaluation e;
    try {
        const AlphaSquared x(alpha_squared_of_instance(instance));
        Rational ratio;
        BoundEvaluation bound;
        if (algorithm == Algorithm::Lppt) {
            const OptResult opt = opt_nonpreemptive(instance, node_budget);
            if (!opt.optimal) return e;
            ratio = makespan(instance, run_lppt(instance).schedule) / opt.makespan;
            bound = lppt_bound(instance.machines(), x);
        } else {
            ratio = makespan(run_pprr(instance).fluid) / opt_preemptive(instance).makespan;
            bound = pprr_bound(instance.machines(), x);
        }
        if (ratio > bound.value) throw BoundViolation(instance, ratio, bound);
        e.ratio = std::move(ratio);
    } catch (...) {
        e.error = std::current_exception();
    }
    return e;
}

class Mutator {
public:
    Mutator(const SearchConfig& config, long grid_max) : config_(config), grid_max_(grid_max) {
        windows_.reserve(static_cast<std::size_t>(grid_max));
        for (long k = 1; k <= grid_max; ++k) windows_.push_back(ratio_window(k, config.x));
    }

    [[nodiscard]] const RatioWindow& window(long kq) const { return windows_[static_cast<std::size_t>(kq - 1)]; }

    std::pair<long, long> random_job(std::mt19937_64& rng) const {
        const long kq = std::uniform_int_distribution<long>(1, grid_max_)(rng);
        const auto& w = window(kq);
        return {std::uniform_int_distribution<long>(w.lo, w.hi)(rng), kq};
    }

    Genome random_genome(std::mt19937_64& rng) const {
        const std::size_t lo = std::min<std::size_t>(config_.n_max, static_cast<std::size_t>(config_.machines) + 1);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(lo, config_.n_max)(rng);
        Genome g;
        for (std::size_t i = 0; i < n; ++i) g.push_back(random_job(rng));
        return g;
    }

    void mutate(Genome& g, std::mt19937_64& rng) const {
        static constexpr long kDeltas[] = {1, 2, 3, 4, 8};
        auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
        auto delta = [&]() {
            const long d = kDeltas[pick(std::size(kDeltas))];
            return (rng() & 1U) ? d : -d;
        };
        auto clamp_p = [&](std::pair<long, long>& job) {
            const auto& w = window(job.second);
            job.first = std::clamp(job.first, w.lo, w.hi);
        };

        switch (pick(8)) {
            case 0: {
                auto& job = g[pick(g.size())];
                job.second = std::clamp(job.second + delta(), 1L, grid_max_);
                clamp_p(job);
                break;
            }
            case 1: {
                auto& job = g[pick(g.size())];
                job.first += delta();
                clamp_p(job);
                break;
            }
            case 2: {
                auto& job = g[pick(g.size())];
                const auto& w = window(job.second);
                job.first = (rng() & 1U) ? w.lo : w.hi;
                break;
            }
            case 3:
                g[pick(g.size())] = random_job(rng);
                break;
            case 4:
                if (g.size() < config_.n_max) {
                    g.insert(g.begin() + static_cast<long>(pick(g.size() + 1)),
                             (rng() & 1U) ? random_job(rng) : g[pick(g.size())]);
                }
                break;
            case 5:
                if (g.size() > 1) g.erase(g.begin() + static_cast<long>(pick(g.size())));
                break;
            case 6:
                if (g.size() > 1) std::swap(g[pick(g.size())], g[pick(g.size())]);
                break;
            case 7: {
                auto& job = g[pick(g.size())];
                job.second = g[pick(g.size())].second;
                clamp_p(job);
                break;
            }
            default:
                break;
        }
    }

private:
    const SearchConfig& config_;
    long grid_max_;
    std::vector<RatioWindow> windows_;
};

}  // namespace

Instance gen_random_instance(const GeneratorConfig& config) {
    if (config.n_min < 1 || config.n_min > config.n_max) throw InvalidInput("generator: bad job-count range");
    if (config.x_max < Rational(1)) throw InvalidInput("generator: x_max must be >= 1");
    const long values = grid_count(config.value_max, config.step);
    if (values < 1) throw InvalidInput("generator: value_max admits no grid value");

    std::vector<Rational> ratios;
    for (long k = 1;; ++k) {
        const Rational r = Rational(k) * config.step;
        const Rational r2 = r * r;
        if (r2 > config.x_max) break;
        if (Rational(1) <= config.x_max * r2) ratios.push_back(r);
    }
    if (ratios.empty()) throw InvalidInput("generator: step grid admits no ratio within x_max");

    std::mt19937_64 rng(config.seed);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(config.n_min, config.n_max)(rng);
    std::vector<Rational> p;
    std::vector<Rational> q;
    for (std::size_t j = 0; j < n; ++j) {
        const Rational qj = Rational(std::uniform_int_distribution<long>(1, values)(rng)) * config.step;
        const Rational& r = ratios[std::uniform_int_distribution<std::size_t>(0, ratios.size() - 1)(rng)];
        p.push_back(qj * r);
        q.push_back(qj);
    }
    return Instance(config.machines, std::move(p), std::move(q));
}

Instance worst_case_family_lppt(int m) {
    if (m < 2) throw InvalidInput("worst-case family: need m >= 2");
    const std::size_t units = static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1);
    std::vector<Rational> p(units, Rational(1));
    p.push_back(Rational(m));
    std::vector<Rational> q(units + 1, Rational(1));
    return Instance(m, std::move(p), std::move(q));
}

SearchOutcome local_search_worst_ratio(const SearchConfig& config) {
    if (config.budget < 1) throw InvalidInput("search: budget must be >= 1");
    if (config.n_max < 1) throw InvalidInput("search: n_max must be >= 1");
    if (config.machines < 2) throw InvalidInput("search: need m >= 2");
    const AlphaSquared cap(config.x);
    const long grid_max = grid_count(config.value_max, config.step);
    if (grid_max < 1) throw InvalidInput("search: value_max admits no grid value");
    const Mutator mutator(config, grid_max);
    const std::size_t batch = std::max<std::size_t>(config.batch, 1);
    const unsigned threads = std::max(config.threads, 1U);

    std::uint64_t evaluations = 0;
    std::vector<SearchLogEntry> log;

    std::mt19937_64 init_rng(derive_seed(config.seed, 0, 0));
    Genome current = mutator.random_genome(init_rng);
    auto first = evaluate(to_instance(current, config.machines, config.step), config.algorithm, config.node_budget);
    ++evaluations;
    if (first.error) std::rethrow_exception(first.error);
    Rational current_ratio = first.ratio.value_or(Rational(1));
    Genome best = current;
    Rational best_ratio = current_ratio;

    const std::uint64_t restart_window = std::max<std::uint64_t>(500, config.budget / 20);
    std::uint64_t since_improvement = 0;
    constexpr double kInitialTemperature = 0.02;

    std::vector<Genome> candidates;
    std::vector<Evaluation> results;
    for (std::uint64_t iteration = 1; evaluations < config.budget; ++iteration) {
        const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(batch, config.budget - evaluations));
        candidates.assign(count, current);
        for (std::size_t c = 0; c < count; ++c) {
            std::mt19937_64 rng(derive_seed(config.seed, iteration, c + 1));
            const int moves = 1 + static_cast<int>(rng() % 3 == 0 ? rng() % 3 : 0);
            for (int k = 0; k < moves; ++k) mutator.mutate(candidates[c], rng);
        }

        results.assign(count, Evaluation{});
        auto work = [&](unsigned worker) {
            for (std::size_t c = worker; c < count; c += threads) {
                results[c] = evaluate(to_instance(candidates[c], config.machines, config.step), config.algorithm,
                                      config.node_budget);
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
            for (auto& t : pool) t.join();
        }
        evaluations += count;
        since_improvement += count;

        std::optional<std::size_t> chosen;
        for (std::size_t c = 0; c < count; ++c) {
            if (results[c].error) std::rethrow_exception(results[c].error);
            if (!results[c].ratio) continue;
            if (!chosen || *results[c].ratio > *results[*chosen].ratio) chosen = c;
        }
        if (!chosen) continue;

        const Rational& candidate_ratio = *results[*chosen].ratio;
        std::mt19937_64 accept_rng(derive_seed(config.seed, iteration, 0));
        bool accept = candidate_ratio >= current_ratio;
        if (!accept) {
            const double progress = static_cast<double>(evaluations) / static_cast<double>(config.budget);
            const double temperature = kInitialTemperature * (1.0 - progress);
            const double drop = (current_ratio - candidate_ratio).to_double();
            const double u = std::uniform_real_distribution<double>(0.0, 1.0)(accept_rng);
            accept = temperature > 0.0 && u < std::exp(-drop / temperature);
        }
        log.push_back(SearchLogEntry{iteration, candidate_ratio.to_double(), accept});
        if (accept) {
            current = candidates[*chosen];
            current_ratio = candidate_ratio;
        }
        if (candidate_ratio > best_ratio) {
            best = candidates[*chosen];
            best_ratio = candidate_ratio;
            since_improvement = 0;
        }
        if (since_improvement >= restart_window) {
            since_improvement = 0;
            if (accept_rng() & 1U) {
                current = best;
                current_ratio = best_ratio;
            } else {
                current = mutator.random_genome(accept_rng);
                const auto e = evaluate(to_instance(current, config.machines, config.step), config.algorithm,
                                        config.node_budget);
                ++evaluations;
                if (e.error) std::rethrow_exception(e.error);
                current_ratio = e.ratio.value_or(Rational(1));
            }
        }
    }

    Instance best_instance = to_instance(best, config.machines, config.step);
    BoundEvaluation bound = config.algorithm == Algorithm::Lppt
                                ? lppt_bound(config.machines, AlphaSquared(alpha_squared_of_instance(best_instance)))
                                : pprr_bound(config.machines, AlphaSquared(alpha_squared_of_instance(best_instance)));
    return SearchOutcome{std::move(best_instance), std::move(best_ratio), std::move(bound), evaluations, std::move(log)};
}

}  // namespace predsched
