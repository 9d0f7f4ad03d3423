#include "ged/aged.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ged/lcp_index.hpp"

namespace ged {

namespace {

constexpr double kBudget = 2.0;
constexpr double kBudgetTol = 1e-12;

void check_inputs(const SnappedSequence& pp, const SnappedSequence& qp, double k, const CostModel& model) {
    model.validate();
    if (!(pp.grid == qp.grid))
        throw std::invalid_argument("snapped sequences use different grids");
    if (!(std::isfinite(k) && k >= 0))
        throw std::invalid_argument("label bound k must be a finite non-negative number");
    if (!pp.points.empty() && !qp.points.empty() && pp.points.dim() != qp.points.dim())
        throw std::invalid_argument("snapped sequences have different dimensions");
}

}  // namespace

std::optional<AgedResult> aged(const SnappedSequence& pp, const SnappedSequence& qp, double k,
                               const CostModel& model, WaveStats* stats_out) {
    check_inputs(pp, qp, k, model);
    const double inv_ell = 1.0 / model.gap_penalty;
    const auto m = static_cast<long long>(pp.size());
    const auto n = static_cast<long long>(qp.size());
    const std::size_t d = pp.grid.dim();

    const CellCodes codes = dense_cell_codes(pp.cells, qp.cells, d);
    const LcpIndex index(codes.p, codes.q);

    LabeledWaveTable table;
    WaveStats stats;
    auto slide = [&](long long r, long long h) {
        double sum = 0;
        std::size_t manual = 0;
        while (true) {
            // Identical cells snap to the same corner: free run.
            r += static_cast<long long>(index.lcp(static_cast<std::size_t>(r), static_cast<std::size_t>(r + h)));
            ++stats.lcp_jumps;
            if (r + 1 > m || r + 1 + h > n)
                break;
            const double step = distance(pp.points[static_cast<std::size_t>(r)],
                                         qp.points[static_cast<std::size_t>(r + h)]) * inv_ell;
            ++manual;
            if (sum + step > kBudget + kBudgetTol)
                break;
            sum += step;
            ++r;
        }
        stats.manual_steps += manual;
        stats.max_manual_per_slide = std::max(stats.max_manual_per_slide, manual);
        return r;
    };

    const auto max_wave = static_cast<long long>(std::ceil(k));
    const auto found = detail::run_waves(table, stats, m, n, max_wave, slide);
    if (stats_out)
        *stats_out = stats;
    if (!found)
        return std::nullopt;

    AgedResult out;
    out.label = *found;
    out.result.algorithm = "aged";
    out.result.matching = detail::wave_backtrack(table, m, n, *found);
    out.result.cost = matching_cost(pp.points, qp.points, out.result.matching, model);
    out.table = std::move(table);
    out.stats = stats;
    return out;
}

LabelMatrix label_matrix(const SnappedSequence& pp, const SnappedSequence& qp, double k, const CostModel& model) {
    check_inputs(pp, qp, k, model);
    if (pp.size() > kLabelMatrixMaxSize || qp.size() > kLabelMatrixMaxSize)
        throw std::length_error("label_matrix is limited to debug-scale inputs");
    const double inv_ell = 1.0 / model.gap_penalty;
    const auto m = static_cast<long long>(pp.size());
    const auto n = static_cast<long long>(qp.size());

    LabelMatrix la(pp.size() + 1, qp.size() + 1);
    auto& table = la.frontier;
    auto label = [&](long long i, long long h) -> int& {
        return la(static_cast<std::size_t>(i), static_cast<std::size_t>(i + h));
    };
    auto dist = [&](long long i, long long h) {
        return distance(pp.points[static_cast<std::size_t>(i - 1)], qp.points[static_cast<std::size_t>(i + h - 1)]) *
               inv_ell;
    };

    const auto max_wave = static_cast<long long>(std::ceil(k));
    for (long long e = 0; e <= max_wave; ++e) {
        table.begin_wave(e);
        for (long long h = -e; h <= e; h += 2) {
            // Rule 1: the first entry of a diagonal gets the first label it sees.
            if (h == -e && -h <= m)
                label(-h, h) = static_cast<int>(e);
            else if (h == e && h <= n)
                label(0, h) = static_cast<int>(e);

            // Rule 2: start entry.
            auto [r, pred] = detail::wave_start(table, h, e);
            if (r == WaveTable::kBeyond || r > m || r + h > n) {
                table.set(h, e, WaveTable::kBeyond, pred);
                continue;
            }
            const long long start = r;

            // Rule 3: slide with a budget of 2.
            label(r, h) = static_cast<int>(e);
            double sum = 0;
            while (r + 1 <= m && r + 1 + h <= n && sum + dist(r + 1, h) <= kBudget + kBudgetTol) {
                ++r;
                sum += dist(r, h);
                label(r, h) = static_cast<int>(e);
            }
            table.set(h, e, r, pred);

            // Rule 4: fill backwards up the diagonal until a labelled entry.
            for (long long i = start - 1; i >= 0 && i + h >= 0 && label(i, h) < 0; --i)
                label(i, h) = static_cast<int>(e);
        }
    }
    return la;
}

}  // namespace ged
