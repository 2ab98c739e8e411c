#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "predsched/instance.hpp"

namespace testing {

using predsched::Instance;
using predsched::Rational;

inline std::vector<Rational> ints(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

inline Instance inst(int m, std::initializer_list<long> p) { return Instance(m, ints(p), ints(p)); }

inline Instance inst(int m, std::initializer_list<long> p, std::initializer_list<long> q) {
    return Instance(m, ints(p), ints(q));
}

/// Random instance with p and q drawn independently from {1..max_value}/den.
inline Instance random_instance(std::mt19937_64& rng, int m, std::size_t n_max, long max_value = 12, long den = 4) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, n_max)(rng);
    std::uniform_int_distribution<long> value(1, max_value);
    std::vector<Rational> p;
    std::vector<Rational> q;
    for (std::size_t j = 0; j < n; ++j) {
        p.emplace_back(value(rng), den);
        q.emplace_back(value(rng), den);
    }
    return Instance(m, std::move(p), std::move(q));
}

}  // namespace testing
