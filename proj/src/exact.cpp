#include "ged/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace ged {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum Step : std::uint8_t { kNone = 0, kMatch = 1, kDelete = 2, kInsert = 3 };

// Picks the cheapest predecessor with match > delete > insert on ties.
inline std::pair<double, Step> choose(double diag, double up, double left) {
    if (diag <= up && diag <= left)
        return {diag, kMatch};
    if (up <= left)
        return {up, kDelete};
    return {left, kInsert};
}

// Walks predecessor steps from (m, n) back to (0, 0).
template <typename StepAt>
Matching backtrack(std::size_t m, std::size_t n, StepAt step_at) {
    Matching out;
    std::size_t i = m, j = n;
    while (i > 0 || j > 0) {
        const Step s = (i == 0) ? kInsert : (j == 0) ? kDelete : step_at(i, j);
        if (s == kMatch) {
            out.pairs.push_back({i, j});
            --i;
            --j;
        } else if (s == kDelete) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(out.pairs.begin(), out.pairs.end());
    return out;
}

}  // namespace

DpMatrix exact_dp_matrix(const PointSequence& p, const PointSequence& q, const CostModel& model) {
    model.validate();
    if (!p.empty() && !q.empty() && p.dim() != q.dim())
        throw std::invalid_argument("point sequences have different dimensions");
    const double ell = model.gap_penalty;
    const std::size_t m = p.size(), n = q.size();
    DpMatrix d(m + 1, n + 1);
    for (std::size_t i = 0; i <= m; ++i)
        d(i, 0) = static_cast<double>(i);
    for (std::size_t j = 0; j <= n; ++j)
        d(0, j) = static_cast<double>(j);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            d(i, j) = std::min({d(i - 1, j - 1) + distance(p[i - 1], q[j - 1]) / ell, d(i - 1, j) + 1.0,
                                d(i, j - 1) + 1.0});
        }
    }
    return d;
}

GedResult exact_ged(const PointSequence& p, const PointSequence& q, const CostModel& model) {
    model.validate();
    require_compatible(p, q);
    const double ell = model.gap_penalty;
    const std::size_t m = p.size(), n = q.size();

    std::vector<std::uint8_t> steps((m + 1) * (n + 1), kNone);
    std::vector<double> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        prev[j] = ell * static_cast<double>(j);
    for (std::size_t i = 1; i <= m; ++i) {
        cur[0] = ell * static_cast<double>(i);
        std::uint8_t* row = steps.data() + i * (n + 1);
        for (std::size_t j = 1; j <= n; ++j) {
            auto [v, s] = choose(prev[j - 1] + distance(p[i - 1], q[j - 1]), prev[j] + ell, cur[j - 1] + ell);
            cur[j] = v;
            row[j] = s;
        }
        std::swap(prev, cur);
    }

    GedResult out;
    out.algorithm = "exact";
    out.matching = backtrack(m, n, [&](std::size_t i, std::size_t j) {
        return static_cast<Step>(steps[i * (n + 1) + j]);
    });
    out.cost = matching_cost(p, q, out.matching, model);
    return out;
}

double exact_ged_cost(const PointSequence& p, const PointSequence& q, const CostModel& model) {
    model.validate();
    require_compatible(p, q);
    const double ell = model.gap_penalty;
    const std::size_t m = p.size(), n = q.size();
    std::vector<double> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        prev[j] = ell * static_cast<double>(j);
    for (std::size_t i = 1; i <= m; ++i) {
        cur[0] = ell * static_cast<double>(i);
        for (std::size_t j = 1; j <= n; ++j)
            cur[j] = std::min({prev[j - 1] + distance(p[i - 1], q[j - 1]), prev[j] + ell, cur[j - 1] + ell});
        std::swap(prev, cur);
    }
    return prev[n];
}

std::optional<GedResult> banded_ged(const PointSequence& p, const PointSequence& q, long long k,
                                    const CostModel& model) {
    if (k < 1)
        throw std::invalid_argument("band width k must be at least 1");
    model.validate();
    require_compatible(p, q);
    const double ell = model.gap_penalty;
    const long long m = static_cast<long long>(p.size());
    const long long n = static_cast<long long>(q.size());
    const long long delta = n - m;

    if (std::llabs(delta) > k)
        return std::nullopt;
    // Every path through diagonal h pays at least |h| gaps before it and
    // |h - delta| after it.
    const long long lo = std::max(-k, delta - k);
    const long long hi = std::min(k, delta + k);
    const long long width = hi - lo + 1;

    std::vector<std::uint8_t> steps(static_cast<std::size_t>((m + 1) * width), kNone);
    std::vector<double> prev(static_cast<std::size_t>(width), kInf), cur(static_cast<std::size_t>(width), kInf);

    // Band slot b on row i holds column j = i + lo + b.
    for (long long j = std::max(0LL, lo); j <= std::min(hi, n); ++j)
        prev[static_cast<std::size_t>(j - lo)] = ell * static_cast<double>(j);
    for (long long i = 1; i <= m; ++i) {
        std::fill(cur.begin(), cur.end(), kInf);
        std::uint8_t* row = steps.data() + i * width;
        for (long long b = 0; b < width; ++b) {
            const long long j = i + lo + b;
            if (j < 0 || j > n)
                continue;
            const auto slot = static_cast<std::size_t>(b);
            if (j == 0) {
                cur[slot] = ell * static_cast<double>(i);
                row[b] = kDelete;
                continue;
            }
            const double diag = prev[slot] + distance(p[static_cast<std::size_t>(i - 1)], q[static_cast<std::size_t>(j - 1)]);
            const double up = (b + 1 < width) ? prev[slot + 1] + ell : kInf;
            const double left = (b > 0) ? cur[slot - 1] + ell : kInf;
            auto [v, s] = choose(diag, up, left);
            cur[slot] = v;
            row[b] = s;
        }
        std::swap(prev, cur);
    }

    const double total = prev[static_cast<std::size_t>(delta - lo)];
    if (!(total / ell <= static_cast<double>(k)))
        return std::nullopt;

    GedResult out;
    out.algorithm = "banded";
    out.matching = backtrack(static_cast<std::size_t>(m), static_cast<std::size_t>(n),
                             [&](std::size_t i, std::size_t j) {
                                 const long long b = static_cast<long long>(j) - static_cast<long long>(i) - lo;
                                 return static_cast<Step>(steps[static_cast<std::size_t>(static_cast<long long>(i) * width + b)]);
                             });
    out.cost = matching_cost(p, q, out.matching, model);
    return out;
}

}  // namespace ged
