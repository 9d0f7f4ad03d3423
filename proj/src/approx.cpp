#include "ged/approx.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ged/aged.hpp"
#include "ged/grid.hpp"
#include "ged/sed.hpp"

namespace ged {

int repetitions(double c, std::size_t n) {
    const double lg = std::log2(static_cast<double>(std::max<std::size_t>(n, 1)));
    return std::max(1, static_cast<int>(std::ceil(c * lg)));
}

std::pair<double, double> alpha_range(std::size_t n) {
    const double lg = std::log2(static_cast<double>(std::max<std::size_t>(n, 1)));
    const double hi = lg > 0 ? std::sqrt(static_cast<double>(n) / lg) : INFINITY;
    return {std::sqrt(lg), hi};
}

namespace {

struct AttemptRecord {
    std::optional<Matching> outcome;
    std::size_t cells = 0;
    std::size_t manual = 0;
};

// Runs repetitions 1..reps and returns the lowest one that succeeded. With
// several threads, repetitions past a known success are skipped, and only
// repetitions up to the winner contribute to the counters, so the result and
// the statistics do not depend on scheduling.
template <typename Fn>
std::optional<std::pair<int, Matching>> first_success(int reps, unsigned threads, Fn&& attempt, ApproxStats& stats) {
    std::vector<AttemptRecord> records(static_cast<std::size_t>(reps) + 1);
    auto run_one = [&](int j) {
        auto rec = attempt(j);
        records[static_cast<std::size_t>(j)] = std::move(rec);
    };

    if (threads <= 1) {
        for (int j = 1; j <= reps; ++j) {
            run_one(j);
            if (records[static_cast<std::size_t>(j)].outcome)
                break;
        }
    } else {
        std::atomic<int> next{1};
        std::atomic<int> best{INT_MAX};
        auto worker = [&] {
            while (true) {
                const int j = next.fetch_add(1);
                if (j > reps || j > best.load())
                    return;
                run_one(j);
                if (records[static_cast<std::size_t>(j)].outcome) {
                    int cur = best.load();
                    while (j < cur && !best.compare_exchange_weak(cur, j)) {
                    }
                }
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<unsigned>(threads, static_cast<unsigned>(reps)); ++t)
            pool.emplace_back(worker);
    }

    for (int j = 1; j <= reps; ++j) {
        auto& rec = records[static_cast<std::size_t>(j)];
        ++stats.decision_calls;
        stats.wave_cells += rec.cells;
        stats.manual_steps += rec.manual;
        if (rec.outcome)
            return std::make_pair(j, std::move(*rec.outcome));
    }
    return std::nullopt;
}

void validate_params(const PointSequence& p, const PointSequence& q, const ApproxParams& params) {
    params.model.validate();
    require_compatible(p, q);
    if (p.size() != q.size())
        throw std::invalid_argument("approximation requires sequences of equal length (got " +
                                    std::to_string(p.size()) + " and " + std::to_string(q.size()) + ")");
    if (!(std::isfinite(params.c) && params.c > 0))
        throw std::invalid_argument("amplification constant c must be positive");
}

// Shared outer loop: early exit, geometric guesses, final clamp against the
// empty matching.
template <typename Threshold, typename Decide>
GedResult run_guesses(const PointSequence& p, const PointSequence& q, const ApproxParams& params,
                      const char* name, int max_outer, ApproxStats* stats_out, Threshold&& threshold_of,
                      Decide&& decide) {
    const std::size_t n = p.size();
    const double ell = params.model.gap_penalty;
    const PointSequence pn = p.scaled(1.0 / ell);
    const PointSequence qn = q.scaled(1.0 / ell);

    GedResult out;
    out.algorithm = name;
    out.seed = params.seed;
    ApproxStats local;
    ApproxStats& stats = stats_out ? *stats_out : local;

    double diagonal = 0;
    for (std::size_t i = 0; i < n; ++i)
        diagonal += distance(pn[i], qn[i]);
    if (diagonal <= 1.0) {
        out.matching = Matching::diagonal(n);
        out.cost = matching_cost(p, q, out.matching, params.model);
        return out;
    }

    const int reps = repetitions(params.c, n);
    for (int i = 0; i <= max_outer; ++i) {
        const double g = std::ldexp(1.0, i);
        const double threshold = threshold_of(g);
        auto attempt = [&](int j) { return decide(pn, qn, g, i, j, threshold); };
        auto hit = first_success(reps, params.threads, attempt, stats);
        if (!hit)
            continue;
        out.success = SuccessInfo{g, i, hit->first, threshold};
        out.matching = std::move(hit->second);
        out.cost = matching_cost(p, q, out.matching, params.model);
        const double empty_cost = ell * static_cast<double>(2 * n);
        if (out.cost > empty_cost) {
            out.warnings.push_back("decision matching cost exceeded the empty matching; returning the empty matching");
            out.matching = {};
            out.cost = empty_cost;
        }
        return out;
    }
    out.matching = {};
    out.cost = matching_cost(p, q, out.matching, params.model);
    return out;
}

}  // namespace

GedResult ged_sqrt_approx(const PointSequence& p, const PointSequence& q, const ApproxParams& params,
                          ApproxStats* stats) {
    validate_params(p, q, params);
    const std::size_t n = p.size();
    const double root_n = std::sqrt(static_cast<double>(n));
    const int max_outer = static_cast<int>(std::ceil(std::log2(root_n)));

    return run_guesses(p, q, params, "approx-sqrt", max_outer, stats,
                       [&](double g) { return std::ceil(12.0 * root_n + 2.0 * g); },
                       [&](const PointSequence& pn, const PointSequence& qn, double g, int i, int j,
                           double threshold) {
                           const auto k = static_cast<long long>(threshold);
                           const GridConfig grid = grid_new(g / root_n, pn.dim(),
                                                            stream_seed(params.seed, static_cast<std::uint64_t>(i),
                                                                        static_cast<std::uint64_t>(j)));
                           const auto pc = cells_of(grid, pn);
                           const auto qc = cells_of(grid, qn);
                           const CellCodes codes = dense_cell_codes(pc, qc, pn.dim());
                           AttemptRecord rec;
                           WaveStats ws;
                           if (auto res = sed_decide(codes.p, codes.q, k, &ws))
                               rec.outcome = std::move(res->matching);
                           rec.cells = ws.cells;
                           return rec;
                       });
}

GedResult ged_alpha_approx(const PointSequence& p, const PointSequence& q, const ApproxParams& params,
                           ApproxStats* stats) {
    validate_params(p, q, params);
    if (!params.alpha)
        throw std::invalid_argument("alpha is required");
    const double alpha = *params.alpha;
    if (!(std::isfinite(alpha) && alpha > 0))
        throw std::invalid_argument("alpha must be a finite positive number");

    const std::size_t n = p.size();
    const double dn = static_cast<double>(n);
    const int max_outer = std::max(0, static_cast<int>(std::ceil(std::log2(dn / alpha))));
    const double k_factor = 4.0 * std::sqrt(static_cast<double>(p.dim())) + 6.0;

    GedResult out = run_guesses(
        p, q, params, "approx-alpha", max_outer, stats, [&](double g) { return k_factor * g; },
        [&](const PointSequence& pn, const PointSequence& qn, double g, int i, int j, double k) {
            const GridConfig grid =
                grid_new(g * alpha / dn, pn.dim(),
                         stream_seed(params.seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j)));
            const SnappedSequence pp = snap_sequence(grid, pn);
            const SnappedSequence qp = snap_sequence(grid, qn);
            AttemptRecord rec;
            WaveStats ws;
            if (auto res = aged(pp, qp, k, {}, &ws))
                rec.outcome = std::move(res->result.matching);
            rec.cells = ws.cells;
            rec.manual = ws.manual_steps;
            return rec;
        });

    const auto [lo, hi] = alpha_range(n);
    if (alpha < lo || alpha > hi) {
        std::ostringstream os;
        os << "alpha " << alpha << " is outside [" << lo << ", " << hi << "] for n = " << n;
        if (alpha < lo)
            os << "; the exact quadratic algorithm is at least as fast here";
        out.warnings.insert(out.warnings.begin(), os.str());
    }
    return out;
}

}  // namespace ged
