#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ged/core.hpp"

namespace ged {

/// How the start entry of a (diagonal, wave) cell was reached.
enum class WavePred : std::uint8_t {
    boundary,        // first entry of the diagonal; the leading prefix is unmatched
    from_left,       // L[h-1, e-1]: q_{r+h} unmatched
    from_right,      // L[h+1, e-1] + 1: p_r unmatched
};

/// Farthest-row frontier per (diagonal h, wave e) with h = e (mod 2).
///
/// Row e stores diagonals -e, -e+2, ..., e. Reads with |h| = e + 2 return the
/// virtual initial values |h| - 1 (h < 0) or -1 (h >= 0).
class WaveTable {
public:
    static constexpr std::int32_t kBeyond = std::numeric_limits<std::int32_t>::max();

    /// Number of completed waves.
    std::size_t waves() const { return frontier_.size(); }

    bool defined(long long h, long long e) const {
        return e >= 0 && static_cast<std::size_t>(e) < frontier_.size() && std::llabs(h) <= e && ((h + e) & 1) == 0;
    }

    /// L[h, e], including the initial values at e = |h| - 2.
    long long at(long long h, long long e) const {
        if (e + 2 == std::llabs(h))
            return h < 0 ? -h - 1 : -1;
        return frontier_[static_cast<std::size_t>(e)][static_cast<std::size_t>((h + e) / 2)];
    }

    WavePred pred(long long h, long long e) const {
        return pred_[static_cast<std::size_t>(e)][static_cast<std::size_t>((h + e) / 2)];
    }

    /// Row where the slide for (h, e) started.
    long long start(long long h, long long e) const;

    bool beyond(long long h, long long e) const { return at(h, e) == kBeyond; }

    void begin_wave(long long e) {
        frontier_.emplace_back(static_cast<std::size_t>(e + 1), kBeyond);
        pred_.emplace_back(static_cast<std::size_t>(e + 1), WavePred::boundary);
    }
    void set(long long h, long long e, long long row, WavePred p) {
        const auto slot = static_cast<std::size_t>((h + e) / 2);
        frontier_.back()[slot] = row >= kBeyond ? kBeyond : static_cast<std::int32_t>(row);
        pred_.back()[slot] = p;
    }

private:
    std::vector<std::vector<std::int32_t>> frontier_;
    std::vector<std::vector<WavePred>> pred_;
};

struct WaveStats {
    std::size_t cells = 0;          // (h, e) entries processed
    std::size_t lcp_jumps = 0;      // constant-time zero-cost slides
    std::size_t manual_steps = 0;   // explicit per-entry distance evaluations
    std::size_t max_manual_per_slide = 0;
};

namespace detail {

/// Start row for (h, e) from the previous wave, ties going to the right
/// neighbour. Returns the row and which neighbour supplied it.
inline std::pair<long long, WavePred> wave_start(const WaveTable& table, long long h, long long e) {
    const long long left = table.at(h - 1, e - 1);
    const long long right_raw = table.at(h + 1, e - 1);
    const long long right = right_raw == WaveTable::kBeyond ? right_raw : right_raw + 1;
    const bool right_initial = e - 1 < std::llabs(h + 1);
    const bool left_initial = e - 1 < std::llabs(h - 1);
    if (right >= left)
        return {right, right_initial ? WavePred::boundary : WavePred::from_right};
    return {left, left_initial ? WavePred::boundary : WavePred::from_left};
}

/// Runs waves e = 0..max_wave over an m x n table, sliding with `slide(r, h)`
/// from each start entry. Stops at the first wave whose diagonal n - m reaches
/// row m. Returns that wave, or nullopt.
template <typename Slide>
std::optional<long long> run_waves(WaveTable& table, WaveStats& stats, long long m, long long n,
                                   long long max_wave, Slide&& slide) {
    const long long target = n - m;
    for (long long e = 0; e <= max_wave; ++e) {
        table.begin_wave(e);
        for (long long h = -e; h <= e; h += 2) {
            auto [r, pred] = wave_start(table, h, e);
            ++stats.cells;
            if (r == WaveTable::kBeyond || r > m || r + h > n) {
                table.set(h, e, WaveTable::kBeyond, pred);
                continue;
            }
            r = slide(r, h);
            table.set(h, e, r, pred);
            if (h == target && r == m)
                return e;
        }
    }
    return std::nullopt;
}

/// Walks the frontier back from (m, n) at wave `e`; every slide contributes
/// its diagonal entries as matched pairs.
inline Matching wave_backtrack(const WaveTable& table, long long m, long long n, long long e) {
    Matching out;
    long long h = n - m;
    long long row = m;
    while (true) {
        const long long start = table.start(h, e);
        for (long long i = row; i > start; --i)
            out.pairs.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(i + h)});
        const WavePred p = table.pred(h, e);
        if (p == WavePred::boundary)
            break;
        if (p == WavePred::from_right) {
            row = start - 1;
            h += 1;
        } else {
            row = start;
            h -= 1;
        }
        e -= 1;
    }
    std::reverse(out.pairs.begin(), out.pairs.end());
    return out;
}

}  // namespace detail

inline long long WaveTable::start(long long h, long long e) const {
    switch (pred(h, e)) {
    case WavePred::from_left: return at(h - 1, e - 1);
    case WavePred::from_right: return at(h + 1, e - 1) + 1;
    case WavePred::boundary: break;
    }
    return detail::wave_start(*this, h, e).first;
}

}  // namespace ged
