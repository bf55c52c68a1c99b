#pragma once

#include <cstdint>

#include "unisplit/naive_bayes.hpp"
#include "unisplit/random.hpp"
#include "unisplit/synth.hpp"

namespace test_fixtures {

/// Three axis-aligned uniform rectangles side by side, separated by gaps of
/// 0.5: the outer two ([0,3] and [7,10] in x) are class 0, the middle one
/// ([3.5,6.5]) class 1, all spanning [0,4] in y. Rows cycle through the
/// rectangles so every class is well represented in any prefix.
inline unisplit::Table rectangles(std::size_t n, std::uint64_t seed) {
    unisplit::Rng rng(seed);
    unisplit::Table t;
    constexpr double lo[3] = {0.0, 3.5, 7.0};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = i % 3;
        t.rows.push_back({rng.uniform(lo[r], lo[r] + 3.0), rng.uniform(0.0, 4.0)});
        t.labels.push_back(r == 1 ? 1 : 0);
    }
    return t;
}

/// Trimodal sample with modes at 0, 10 and 20 (sigma 1.5), 400 points each.
inline std::vector<double> trimodal(std::uint64_t seed) {
    using namespace unisplit;
    return sample_mixture({{Normal{0, 1.5}, 400}, {Normal{10, 1.5}, 400}, {Normal{20, 1.5}, 400}}, seed).values;
}

}  // namespace test_fixtures
