#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ged {

using Code = std::uint32_t;

/// Constant-time longest-common-prefix queries between suffixes of two
/// integer strings S and T.
///
/// Built over S . sep . T with a prefix-doubling suffix array (radix sorted,
/// O(N log N)), Kasai's LCP array and a sparse table for range minimum. The
/// separator is larger than every code in S and T, so no common prefix can
/// run across it.
class LcpIndex {
public:
    LcpIndex() = default;
    LcpIndex(std::span<const Code> s, std::span<const Code> t);

    /// Length of the longest common prefix of S[i..] and T[j..] (0-based).
    /// Positions at or past the end give 0.
    std::size_t lcp(std::size_t i, std::size_t j) const;

    std::size_t s_size() const { return s_size_; }
    std::size_t t_size() const { return t_size_; }

    /// Suffix array of the concatenation; exposed for tests.
    const std::vector<std::uint32_t>& suffix_array() const { return sa_; }

private:
    std::size_t range_min(std::size_t lo, std::size_t hi) const;  // inclusive

    std::size_t s_size_ = 0;
    std::size_t t_size_ = 0;
    std::vector<std::uint32_t> sa_;
    std::vector<std::uint32_t> rank_;
    std::vector<std::vector<std::uint32_t>> sparse_;  // sparse_[k][r] = min lcp[r .. r + 2^k)
};

/// Suffix array of `text` by prefix doubling with counting sort.
std::vector<std::uint32_t> build_suffix_array(std::span<const Code> text);

/// Kasai et al.: lcp[r] = LCP(text[sa[r-1]..], text[sa[r]..]), lcp[0] = 0.
std::vector<std::uint32_t> build_lcp_array(std::span<const Code> text, std::span<const std::uint32_t> sa,
                                           std::span<const std::uint32_t> rank);

}  // namespace ged
