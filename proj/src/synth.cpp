#include "ged/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ged {

PointSequence random_walk(std::size_t n, std::size_t dim, double step, std::mt19937_64& rng) {
    if (dim == 0)
        throw std::invalid_argument("dimension must be positive");
    std::normal_distribution<double> gauss(0.0, step);
    std::vector<double> coords(n * dim, 0.0);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            coords[i * dim + k] = coords[(i - 1) * dim + k] + gauss(rng);
    return {dim, std::move(coords)};
}

PlantedPair planted_pair(const SynthParams& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = params.n;
    const std::size_t d = params.dim;
    PointSequence p = random_walk(n, d, params.walk_step, rng);

    std::vector<std::vector<double>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        rows[i].assign(p[i].begin(), p[i].end());

    // Drop points, then insert midpoints between neighbours elsewhere.
    const std::size_t resample = std::min(params.resample, n / 2);
    for (std::size_t r = 0; r < resample && rows.size() > 1; ++r) {
        std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pick(rng)));
    }
    while (rows.size() < n) {
        if (rows.size() < 2) {
            rows.push_back(rows.empty() ? std::vector<double>(d, 0.0) : rows.back());
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(1, rows.size() - 1);
        const std::size_t at = pick(rng);
        std::vector<double> mid(d);
        for (std::size_t k = 0; k < d; ++k)
            mid[k] = 0.5 * (rows[at - 1][k] + rows[at][k]);
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(mid));
    }

    std::normal_distribution<double> jitter(0.0, params.noise);
    if (params.noise > 0)
        for (auto& row : rows)
            for (auto& x : row)
                x += jitter(rng);

    std::normal_distribution<double> unit(0.0, 1.0);
    const std::size_t outliers = std::min(params.outliers, n);
    for (std::size_t o = 0; o < outliers; ++o) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        auto& row = rows[pick(rng)];
        std::vector<double> dir(d);
        double norm = 0;
        while (norm < 1e-12) {
            norm = 0;
            for (auto& x : dir) {
                x = unit(rng);
                norm += x * x;
            }
            norm = std::sqrt(norm);
        }
        for (std::size_t k = 0; k < d; ++k)
            row[k] += params.outlier_distance * dir[k] / norm;
    }

    return {std::move(p), PointSequence::from_rows(rows)};
}

}  // namespace ged
