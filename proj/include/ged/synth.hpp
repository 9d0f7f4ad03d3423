#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "ged/core.hpp"

namespace ged {

/// Synthetic trajectory pairs for benchmarks and tests.
struct SynthParams {
    std::size_t n = 256;
    std::size_t dim = 2;
    double walk_step = 1.0;         // std-dev of each random-walk increment
    double noise = 0.05;            // std-dev of the per-coordinate jitter on Q
    std::size_t outliers = 0;       // points of Q pushed far away
    double outlier_distance = 5.0;  // displacement of an outlier
    std::size_t resample = 0;       // points of Q dropped and replaced elsewhere
};

/// Gaussian random walk of `n` points starting at the origin.
PointSequence random_walk(std::size_t n, std::size_t dim, double step, std::mt19937_64& rng);

struct PlantedPair {
    PointSequence p;
    PointSequence q;
};

/// P is a random walk; Q is a jittered copy of P in which `resample` points
/// are removed and the same number of midpoints inserted at other positions,
/// and `outliers` points are displaced by `outlier_distance` in a random
/// direction. Both sequences have length n.
PlantedPair planted_pair(const SynthParams& params, std::uint64_t seed);

}  // namespace ged
