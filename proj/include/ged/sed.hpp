#pragma once

#include <optional>
#include <span>

#include "ged/core.hpp"
#include "ged/lcp_index.hpp"
#include "ged/wave.hpp"

namespace ged {

struct SedResult {
    Matching matching;    // 1-based pairs of equal characters
    long long distance;   // insertions + deletions, |S| + |T| - 2|matching|
    WaveTable table;
    WaveStats stats;
};

/// Insert/delete-only edit distance decision in O(n + k^2) after building
/// the LCP index. Returns an optimal matching when the distance is at most k,
/// std::nullopt otherwise. Substitutions are never used.
/// When `stats` is given it receives the work counters, also on failure.
std::optional<SedResult> sed_decide(std::span<const Code> s, std::span<const Code> t, long long k,
                                    WaveStats* stats = nullptr);

/// Same, reusing a prebuilt index over (s, t).
std::optional<SedResult> sed_decide(const LcpIndex& index, std::span<const Code> s, std::span<const Code> t,
                                    long long k, WaveStats* stats = nullptr);

}  // namespace ged
