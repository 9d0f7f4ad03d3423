#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ged/core.hpp"

namespace ged {

/// Full (m+1) x (n+1) prefix-distance table. D(i,j) is the GED of the first
/// i points of P and the first j points of Q, in units of the gap penalty.
class DpMatrix {
public:
    DpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
};

/// Materializes the normalized DP table (distances divided by the gap penalty).
DpMatrix exact_dp_matrix(const PointSequence& p, const PointSequence& q, const CostModel& model = {});

/// Exact GED with one optimal matching, O(mn) time. Ties during backtracking
/// prefer match, then deleting p_i, then inserting q_j.
GedResult exact_ged(const PointSequence& p, const PointSequence& q, const CostModel& model = {});

/// Exact GED value only, using two rows of memory.
double exact_ged_cost(const PointSequence& p, const PointSequence& q, const CostModel& model = {});

/// Decision variant restricted to diagonals near the main one. `k` is in
/// units of the gap penalty. Returns the exact optimum when GED <= k * gap
/// penalty and std::nullopt (band exceeded) otherwise. Only diagonals
/// h = j - i in [max(-k, n-m-k), min(k, n-m+k)] are touched.
std::optional<GedResult> banded_ged(const PointSequence& p, const PointSequence& q, long long k,
                                    const CostModel& model = {});

}  // namespace ged
