#include "predsched/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "predsched/error.hpp"

namespace predsched {

namespace {

/// Actual times on a common integer grid: p_j = scaled[j] / scale.
struct ScaledTimes {
    std::vector<mpz_class> scaled;
    mpz_class scale;
    bool fits_int64 = false;
};

ScaledTimes scale_actual_times(const Instance& instance) {
    const std::vector<Rational> p = instance.actual_times();
    ScaledTimes out;
    out.scale = common_denominator(p.data(), p.data() + p.size());
    mpz_class total = 0;
    for (const auto& v : p) {
        out.scaled.push_back(v.numerator() * (out.scale / v.denominator()));
        total += out.scaled.back();
    }
    out.fits_int64 = total < (mpz_class(1) << 62);
    return out;
}

std::int64_t to_int64(const mpz_class& v) { return static_cast<std::int64_t>(v.get_si()); }
mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
mpz_class to_mpz(const mpz_class& v) { return v; }

template <class Int>
std::vector<Int> convert(const std::vector<mpz_class>& values) {
    if constexpr (std::is_same_v<Int, mpz_class>) {
        return values;
    } else {
        std::vector<Int> out;
        out.reserve(values.size());
        for (const auto& v : values) out.push_back(to_int64(v));
        return out;
    }
}

template <class Int>
Int ceil_div(const Int& a, const Int& b) {
    return (a + b - 1) / b;
}

/// Turn a job -> machine map into a schedule with jobs packed from time 0
/// in ascending id order on each machine.
NonPreemptiveSchedule pack_assignment(const Instance& instance, const std::vector<int>& machine_of) {
    NonPreemptiveSchedule s;
    s.assignments.resize(instance.size());
    std::vector<Rational> load(static_cast<std::size_t>(instance.machines()));
    for (std::size_t j = 0; j < instance.size(); ++j) {
        const auto machine = static_cast<std::size_t>(machine_of[j]);
        s.assignments[j] = Assignment{machine_of[j], load[machine]};
        load[machine] += instance.job(j).actual;
    }
    return s;
}

template <class Int>
class BranchAndBound {
public:
    static constexpr std::size_t kMemoCap = 4'000'000;

    BranchAndBound(std::vector<Int> times, int machines, std::uint64_t budget)
        : times_(std::move(times)), machines_(machines), budget_(budget) {
        order_.resize(times_.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return times_[static_cast<std::size_t>(a)] > times_[static_cast<std::size_t>(b)];
        });
        Int total = 0;
        Int longest = 0;
        for (const auto& t : times_) {
            total += t;
            longest = std::max(longest, t);
        }
        lower_ = std::max(longest, ceil_div(total, Int(machines_)));
        loads_.assign(static_cast<std::size_t>(machines_), Int(0));
        assign_.assign(times_.size(), 0);
        seed_with_lpt();
    }

    void solve() {
        if (best_ != lower_) dfs(0);
    }

    [[nodiscard]] const Int& best() const { return best_; }
    [[nodiscard]] const std::vector<int>& machine_of() const { return best_assign_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
    [[nodiscard]] bool exhausted() const { return exhausted_; }

private:
    void seed_with_lpt() {
        std::vector<Int> load(static_cast<std::size_t>(machines_), Int(0));
        best_assign_.assign(times_.size(), 0);
        for (int job : order_) {
            const auto it = std::min_element(load.begin(), load.end());
            *it += times_[static_cast<std::size_t>(job)];
            best_assign_[static_cast<std::size_t>(job)] = static_cast<int>(it - load.begin());
        }
        best_ = *std::max_element(load.begin(), load.end());
    }

    void dfs(std::size_t depth) {
        if (best_ == lower_ || exhausted_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (depth == order_.size()) {
            best_ = *std::max_element(loads_.begin(), loads_.end());
            best_assign_ = assign_;
            return;
        }

        std::vector<Int> key = loads_;
        std::sort(key.begin(), key.end());
        key.push_back(Int(static_cast<long>(depth)));
        if (memo_.size() < kMemoCap) {
            if (!memo_.insert(std::move(key)).second) return;
        } else if (memo_.count(key) != 0) {
            return;
        }

        const int job = order_[depth];
        const Int& t = times_[static_cast<std::size_t>(job)];
        std::vector<int> machines(static_cast<std::size_t>(machines_));
        std::iota(machines.begin(), machines.end(), 0);
        std::stable_sort(machines.begin(), machines.end(), [&](int a, int b) {
            return loads_[static_cast<std::size_t>(a)] < loads_[static_cast<std::size_t>(b)];
        });
        for (std::size_t i = 0; i < machines.size(); ++i) {
            const auto machine = static_cast<std::size_t>(machines[i]);
            if (i > 0 && loads_[machine] == loads_[static_cast<std::size_t>(machines[i - 1])]) continue;
            if (loads_[machine] + t >= best_) break;  // loads ascend, so every later machine fails too
            loads_[machine] += t;
            assign_[static_cast<std::size_t>(job)] = machines[i];
            dfs(depth + 1);
            loads_[machine] -= t;
            if (best_ == lower_ || exhausted_) return;
        }
    }

    std::vector<Int> times_;
    int machines_;
    std::uint64_t budget_;
    std::vector<int> order_;
    std::vector<Int> loads_;
    std::vector<int> assign_;
    std::vector<int> best_assign_;
    Int best_{};
    Int lower_{};
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::set<std::vector<Int>> memo_;
};

template <class Int>
OptResult run_branch_and_bound(const Instance& instance, const ScaledTimes& scaled, std::uint64_t budget) {
    BranchAndBound<Int> bnb(convert<Int>(scaled.scaled), instance.machines(), budget);
    bnb.solve();
    OptResult r;
    r.makespan = Rational(to_mpz(bnb.best()), scaled.scale);
    r.nonpreemptive_witness = pack_assignment(instance, bnb.machine_of());
    r.nodes = bnb.nodes();
    r.optimal = !bnb.exhausted();
    return r;
}

template <class Int>
class Enumerator {
public:
    Enumerator(std::vector<Int> times, int machines)
        : times_(std::move(times)), loads_(static_cast<std::size_t>(machines), Int(0)),
          assign_(times_.size(), 0) {}

    void run() { visit(0); }

    bool found = false;
    Int best{};
    std::vector<int> best_assign;
    std::uint64_t leaves = 0;

private:
    void visit(std::size_t j) {
        if (j == times_.size()) {
            ++leaves;
            const Int mk = *std::max_element(loads_.begin(), loads_.end());
            if (!found || mk < best) {
                found = true;
                best = mk;
                best_assign = assign_;
            }
            return;
        }
        for (std::size_t i = 0; i < loads_.size(); ++i) {
            loads_[i] += times_[j];
            assign_[j] = static_cast<int>(i);
            visit(j + 1);
            loads_[i] -= times_[j];
        }
    }

    std::vector<Int> times_;
    std::vector<Int> loads_;
    std::vector<int> assign_;
};

template <class Int>
OptResult run_enumeration(const Instance& instance, const ScaledTimes& scaled) {
    Enumerator<Int> e(convert<Int>(scaled.scaled), instance.machines());
    e.run();
    OptResult r;
    r.makespan = Rational(to_mpz(e.best), scaled.scale);
    r.nonpreemptive_witness = pack_assignment(instance, e.best_assign);
    r.nodes = e.leaves;
    return r;
}

}  // namespace

OptResult opt_preemptive(const Instance& instance) {
    OptResult r;
    r.makespan = max(instance.max_actual(), instance.total_actual() / Rational(instance.machines()));
    r.preemptive_witness = mcnaughton_schedule(instance);
    return r;
}

DiscretePreemptiveSchedule mcnaughton_schedule(const Instance& instance) {
    const Rational horizon = max(instance.max_actual(), instance.total_actual() / Rational(instance.machines()));
    DiscretePreemptiveSchedule out;
    int machine = 0;
    Rational cursor;
    for (const auto& job : instance.jobs()) {
        Rational left = job.actual;
        while (left.sign() > 0) {
            const Rational room = horizon - cursor;
            if (left <= room) {
                out.segments.push_back(Segment{job.id, machine, cursor, cursor + left});
                cursor += left;
                left = Rational(0);
            } else {
                // The overflow goes to the front of the next machine; it
                // ends before this piece starts since p_j <= horizon.
                out.segments.push_back(Segment{job.id, machine, cursor, horizon});
                left -= room;
                cursor = horizon;
            }
            if (cursor == horizon) {
                ++machine;
                cursor = Rational(0);
            }
        }
    }
    return out;
}

OptResult opt_nonpreemptive(const Instance& instance, std::optional<std::uint64_t> node_budget) {
    const std::uint64_t budget = node_budget.value_or(kDefaultNodeBudget);
    const ScaledTimes scaled = scale_actual_times(instance);
    if (scaled.fits_int64) return run_branch_and_bound<std::int64_t>(instance, scaled, budget);
    return run_branch_and_bound<mpz_class>(instance, scaled, budget);
}

OptResult opt_nonpreemptive_exhaustive(const Instance& instance) {
    if (instance.size() > kExhaustiveMaxJobs) {
        throw InvalidInput("exhaustive oracle: " + std::to_string(instance.size()) + " jobs exceeds the cap of " +
                           std::to_string(kExhaustiveMaxJobs));
    }
    const ScaledTimes scaled = scale_actual_times(instance);
    if (scaled.fits_int64) return run_enumeration<std::int64_t>(instance, scaled);
    return run_enumeration<mpz_class>(instance, scaled);
}

}  // namespace predsched
