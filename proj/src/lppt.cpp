#include "predsched/lppt.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace predsched {

std::vector<int> lppt_order(const Instance& instance) {
    std::vector<int> order(instance.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return instance.job(static_cast<std::size_t>(a)).predicted > instance.job(static_cast<std::size_t>(b)).predicted;
    });
    return order;
}

LpptTrace run_lppt(const Instance& instance) {
    const std::vector<int> order = lppt_order(instance);
    const int m = instance.machines();

    LpptTrace trace;
    trace.schedule.assignments.resize(instance.size());

    struct Completion {
        Rational time;
        int machine;
        bool operator>(const Completion& o) const {
            if (time != o.time) return time > o.time;
            return machine > o.machine;
        }
    };
    std::priority_queue<Completion, std::vector<Completion>, std::greater<>> pending;

    std::size_t next = 0;
    auto dispatch = [&](const Rational& now, int machine) {
        const int job = order[next++];
        trace.dispatches.push_back(DispatchEvent{now, machine, job});
        trace.schedule.assignments[static_cast<std::size_t>(job)] = Assignment{machine, now};
        pending.push(Completion{now + instance.job(static_cast<std::size_t>(job)).actual, machine});
    };

    for (int machine = 0; machine < m && next < order.size(); ++machine) dispatch(Rational(0), machine);

    std::vector<int> idle;
    while (next < order.size()) {
        // Drain every completion at the earliest instant, then hand out jobs
        // to the freed machines lowest index first.
        const Rational now = pending.top().time;
        idle.clear();
        while (!pending.empty() && pending.top().time == now) {
            idle.push_back(pending.top().machine);
            pending.pop();
        }
        std::sort(idle.begin(), idle.end());
        for (int machine : idle) {
            if (next == order.size()) break;
            dispatch(now, machine);
        }
    }
    return trace;
}

}  // namespace predsched
