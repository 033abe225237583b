// Seeded random inputs for property tests.

#pragma once

#include <gaugecal/calibration.hpp>
#include <gaugecal/imaging.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace gaugecal::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// 2..6 references with distinct P in [20, 2000] px and R near 0.02 mm/px,
/// mimicking a telecentric setup with a few percent of R drift.
inline std::vector<std::pair<double, double>> random_references(Rng& rng, int min_size = 2, int max_size = 6) {
    const int n = uniform_int(rng, min_size, max_size);
    std::set<double> pixels;
    while (static_cast<int>(pixels.size()) < n) pixels.insert(uniform(rng, 20.0, 2000.0));
    const double r0 = uniform(rng, 0.005, 0.05);
    std::vector<std::pair<double, double>> refs;
    for (double p : pixels) refs.emplace_back(p, p * r0 * uniform(rng, 0.97, 1.03));
    std::shuffle(refs.begin(), refs.end(), rng);
    return refs;
}

/// Query lengths inside, below and above the reference range.
inline double random_query(Rng& rng, const CalibrationTable& table) {
    const double lo = table[0].pixels;
    const double hi = table[table.size() - 1].pixels;
    return uniform(rng, 0.5 * lo, 1.5 * hi);
}

inline BinaryMask random_mask(Rng& rng, int w, int h, double density) {
    BinaryMask m(w, h);
    std::bernoulli_distribution on(density);
    for (auto& v : m.pixels()) v = on(rng) ? 1 : 0;
    return m;
}

inline GrayImage random_gray(Rng& rng, int w, int h) {
    GrayImage img(w, h);
    for (auto& v : img.pixels()) v = static_cast<std::uint8_t>(uniform_int(rng, 0, 255));
    return img;
}

}  // namespace gaugecal::testing
