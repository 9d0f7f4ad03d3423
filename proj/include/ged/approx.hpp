#pragma once

#include <cstdint>
#include <optional>

#include "ged/core.hpp"

namespace ged {

struct ApproxParams {
    double c = 2.0;                 // repetitions per guess: ceil(c lg n)
    std::optional<double> alpha;    // required by ged_alpha_approx
    std::uint64_t seed = 0;
    CostModel model;
    unsigned threads = 1;           // workers for the repetitions of one guess
};

/// Work counters summed over every decision call of one run.
struct ApproxStats {
    std::size_t decision_calls = 0;
    std::size_t wave_cells = 0;
    std::size_t manual_steps = 0;
};

/// Randomized O(sqrt n)-approximation. For g = 1, 2, 4, ... up to
/// 2^ceil(lg sqrt n) it maps both sequences to cell-id strings on
/// ceil(c lg n) random grids of side g / sqrt(n) and asks the insert/delete
/// string decision procedure for distance <= ceil(12 sqrt(n) + 2g). The first
/// success, re-costed on the original points, is returned; if none succeeds
/// the empty matching is. Requires |P| = |Q|.
GedResult ged_sqrt_approx(const PointSequence& p, const PointSequence& q, const ApproxParams& params,
                          ApproxStats* stats = nullptr);

/// Randomized O(alpha)-approximation. Same outer structure with
/// g up to 2^ceil(lg(n / alpha)), grids of side g alpha / n, and the snapped
/// constant-factor procedure called with k = (4 sqrt(d) + 6) g.
GedResult ged_alpha_approx(const PointSequence& p, const PointSequence& q, const ApproxParams& params,
                           ApproxStats* stats = nullptr);

/// ceil(c lg n), at least 1.
int repetitions(double c, std::size_t n);

/// Range of alpha for which the tradeoff is meaningful: [sqrt(lg n), sqrt(n / lg n)].
std::pair<double, double> alpha_range(std::size_t n);

}  // namespace ged
