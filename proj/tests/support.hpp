#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "kerov/cumulant_poly.hpp"
#include "kerov/partition.hpp"

namespace testutil {

using kerov::CumulantPoly;
using kerov::Family;
using kerov::Partition;
using kerov::Rational;

inline Partition part(std::initializer_list<int> parts) {
    return Partition(std::vector<int>(parts));
}

inline CumulantPoly rterm(long num, long den, std::initializer_list<int> key) {
    return CumulantPoly::monomial(Family::Free, part(key), kerov::rat(num, den));
}

inline CumulantPoly rterm(long num, std::initializer_list<int> key) {
    return rterm(num, 1, key);
}

inline CumulantPoly rvar(int i) { return CumulantPoly::indeterminate(Family::Free, i); }
inline CumulantPoly bvar(int i) { return CumulantPoly::indeterminate(Family::Boolean, i); }

inline CumulantPoly random_poly(std::mt19937& rng, Family f, int max_weight, int term_count) {
    CumulantPoly out(f);
    std::uniform_int_distribution<int> weight_dist(0, max_weight);
    std::uniform_int_distribution<long> num_dist(-5, 5);
    std::uniform_int_distribution<long> den_dist(1, 4);
    for (int t = 0; t < term_count; ++t) {
        int w = weight_dist(rng);
        auto keys = kerov::partitions_of(w, 2);
        if (keys.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
        long num = num_dist(rng);
        if (num == 0) num = 1;
        out.add_term(keys[pick(rng)], kerov::rat(num, den_dist(rng)));
    }
    return out;
}

inline CumulantPoly random_homogeneous(std::mt19937& rng, Family f, int weight) {
    CumulantPoly out(f);
    std::uniform_int_distribution<long> num_dist(-9, 9);
    std::uniform_int_distribution<long> den_dist(1, 5);
    for (const Partition& key : kerov::partitions_of(weight, 2))
        out.add_term(key, kerov::rat(num_dist(rng), den_dist(rng)));
    return out;
}

}  // namespace testutil
