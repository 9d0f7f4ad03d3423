#include "ged/lcp_index.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ged {

std::vector<std::uint32_t> build_suffix_array(std::span<const Code> text) {
    const std::size_t n = text.size();
    std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
    if (n == 0)
        return sa;

    std::iota(sa.begin(), sa.end(), 0u);
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) { return text[a] < text[b]; });
    std::uint32_t classes = 1;
    rank[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
        if (text[sa[r]] != text[sa[r - 1]])
            ++classes;
        rank[sa[r]] = classes - 1;
    }

    std::vector<std::uint32_t> count;
    for (std::size_t k = 1; classes < n; k <<= 1) {
        // Order by second key: suffixes shorter than k first, then by rank of i + k.
        std::size_t p = 0;
        for (std::size_t i = n - std::min(k, n); i < n; ++i)
            tmp[p++] = static_cast<std::uint32_t>(i);
        for (std::size_t r = 0; r < n; ++r) {
            if (sa[r] >= k)
                tmp[p++] = static_cast<std::uint32_t>(sa[r] - k);
        }

        // Stable counting sort by first key.
        count.assign(classes + 1, 0);
        for (std::size_t i = 0; i < n; ++i)
            ++count[rank[i] + 1];
        for (std::size_t c = 1; c <= classes; ++c)
            count[c] += count[c - 1];
        for (std::size_t r = 0; r < n; ++r)
            sa[count[rank[tmp[r]]]++] = tmp[r];

        auto second = [&](std::uint32_t i) -> long long { return i + k < n ? rank[i + k] : -1; };
        tmp[sa[0]] = 0;
        classes = 1;
        for (std::size_t r = 1; r < n; ++r) {
            const std::uint32_t a = sa[r - 1], b = sa[r];
            if (rank[a] != rank[b] || second(a) != second(b))
                ++classes;
            tmp[b] = classes - 1;
        }
        rank.swap(tmp);
    }
    return sa;
}

std::vector<std::uint32_t> build_lcp_array(std::span<const Code> text, std::span<const std::uint32_t> sa,
                                           std::span<const std::uint32_t> rank) {
    const std::size_t n = text.size();
    std::vector<std::uint32_t> lcp(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h])
            ++h;
        lcp[rank[i]] = static_cast<std::uint32_t>(h);
        if (h > 0)
            --h;
    }
    return lcp;
}

LcpIndex::LcpIndex(std::span<const Code> s, std::span<const Code> t) : s_size_(s.size()), t_size_(t.size()) {
    Code sep = 0;
    for (Code c : s)
        sep = std::max(sep, c);
    for (Code c : t)
        sep = std::max(sep, c);
    ++sep;

    std::vector<Code> text;
    text.reserve(s.size() + 1 + t.size());
    text.insert(text.end(), s.begin(), s.end());
    text.push_back(sep);
    text.insert(text.end(), t.begin(), t.end());

    sa_ = build_suffix_array(text);
    rank_.resize(text.size());
    for (std::size_t r = 0; r < sa_.size(); ++r)
        rank_[sa_[r]] = static_cast<std::uint32_t>(r);

    sparse_.push_back(build_lcp_array(text, sa_, rank_));
    const std::size_t n = text.size();
    for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
        const auto& prev = sparse_[k - 1];
        const std::size_t half = std::size_t{1} << (k - 1);
        std::vector<std::uint32_t> level(n - (std::size_t{1} << k) + 1);
        for (std::size_t r = 0; r < level.size(); ++r)
            level[r] = std::min(prev[r], prev[r + half]);
        sparse_.push_back(std::move(level));
    }
}

std::size_t LcpIndex::range_min(std::size_t lo, std::size_t hi) const {
    const std::size_t k = std::bit_width(hi - lo + 1) - 1;
    return std::min(sparse_[k][lo], sparse_[k][hi + 1 - (std::size_t{1} << k)]);
}

std::size_t LcpIndex::lcp(std::size_t i, std::size_t j) const {
    if (i >= s_size_ || j >= t_size_)
        return 0;
    std::size_t a = rank_[i];
    std::size_t b = rank_[s_size_ + 1 + j];
    if (a > b)
        std::swap(a, b);
    return range_min(a + 1, b);
}

}  // namespace ged
