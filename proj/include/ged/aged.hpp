#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ged/core.hpp"
#include "ged/grid.hpp"
#include "ged/wave.hpp"

namespace ged {

/// Frontier of labels: Lp[h, e] is the farthest row on diagonal h with label e.
using LabeledWaveTable = WaveTable;

struct AgedResult {
    GedResult result;     // cost measured on the snapped points
    long long label = 0;  // label reached at (m, n)
    LabeledWaveTable table;
    WaveStats stats;
};

/// Constant-factor approximation of GED between two sequences snapped to the
/// same grid. Waves e = 0..ceil(k) assign integer labels; each slide spends a
/// distance budget of 2 (in gap-penalty units), jumping over runs of
/// identical cells in O(1) with an LCP index over cell codes.
///
/// If GED(Pp, Qp) <= k the returned matching costs at most 3 GED(Pp, Qp) on
/// the snapped points. May also succeed when GED > k; returns std::nullopt
/// when no label up to ceil(k) reaches (m, n).
///
/// Throws std::invalid_argument when the two grids differ or k is negative.
/// When `stats` is given it receives the work counters, also on failure.
std::optional<AgedResult> aged(const SnappedSequence& pp, const SnappedSequence& qp, double k,
                               const CostModel& model = {}, WaveStats* stats = nullptr);

/// Explicit label matrix for testing. label(i, j) < 0 means unlabeled.
class LabelMatrix {
public:
    LabelMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), labels_(rows * cols, -1) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int operator()(std::size_t i, std::size_t j) const { return labels_[i * cols_ + j]; }
    int& operator()(std::size_t i, std::size_t j) { return labels_[i * cols_ + j]; }

    LabeledWaveTable frontier;  // Lp values produced alongside the labels

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<int> labels_;
};

inline constexpr std::size_t kLabelMatrixMaxSize = 512;

/// Applies the four labelling rules literally for waves 0..ceil(k), with
/// explicit slides and backward fills. Debug scale only: throws
/// std::length_error above kLabelMatrixMaxSize points per side.
LabelMatrix label_matrix(const SnappedSequence& pp, const SnappedSequence& qp, double k,
                         const CostModel& model = {});

}  // namespace ged
