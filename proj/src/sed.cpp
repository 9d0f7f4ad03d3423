#include "ged/sed.hpp"

#include <stdexcept>

namespace ged {

std::optional<SedResult> sed_decide(std::span<const Code> s, std::span<const Code> t, long long k,
                                    WaveStats* stats) {
    const LcpIndex index(s, t);
    return sed_decide(index, s, t, k, stats);
}

std::optional<SedResult> sed_decide(const LcpIndex& index, std::span<const Code> s, std::span<const Code> t,
                                    long long k, WaveStats* stats_out) {
    if (k < 0)
        throw std::invalid_argument("edit distance bound must be non-negative");
    if (index.s_size() != s.size() || index.t_size() != t.size())
        throw std::invalid_argument("LCP index was built for different strings");

    const auto m = static_cast<long long>(s.size());
    const auto n = static_cast<long long>(t.size());
    WaveTable table;
    WaveStats stats;
    const auto found = detail::run_waves(table, stats, m, n, k, [&](long long r, long long h) {
        const auto run = static_cast<long long>(index.lcp(static_cast<std::size_t>(r), static_cast<std::size_t>(r + h)));
        ++stats.lcp_jumps;
        return r + run;
    });
    if (stats_out)
        *stats_out = stats;
    if (!found)
        return std::nullopt;

    SedResult out{detail::wave_backtrack(table, m, n, *found), *found, std::move(table), stats};
    return out;
}

}  // namespace ged
