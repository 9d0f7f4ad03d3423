#include "report.hpp"

#include <charconv>
#include <ostream>

namespace ged::cli {

std::string format_number(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

MatchReport make_report(const PointSequence& p, const PointSequence& q, const GedResult& result,
                        const CostModel& model) {
    MatchReport r;
    r.algorithm = result.algorithm;
    r.seed = result.seed;
    r.m = p.size();
    r.n = q.size();
    r.d = p.empty() ? q.dim() : p.dim();
    r.gap_penalty = model.gap_penalty;
    r.cost = matching_cost(p, q, result.matching, model);
    for (const auto& [i, j] : result.matching.canonical().pairs)
        r.pairs.push_back({i, j, distance(p[i - 1], q[j - 1])});
    r.gaps_p = gap_indices(result.matching, p.size(), true);
    r.gaps_q = gap_indices(result.matching, q.size(), false);
    r.success = result.success;
    r.warnings = result.warnings;
    return r;
}

MatchReport band_exceeded_report(const PointSequence& p, const PointSequence& q, long long k,
                                 const CostModel& model) {
    MatchReport r;
    r.algorithm = "banded";
    r.m = p.size();
    r.n = q.size();
    r.d = p.empty() ? q.dim() : p.dim();
    r.gap_penalty = model.gap_penalty;
    r.band_exceeded = true;
    r.k = k;
    return r;
}

double report_cost(const MatchReport& report) {
    double total = 0;
    for (const auto& pair : report.pairs)
        total += pair.dist;
    return total + report.gap_penalty * static_cast<double>(report.gaps_p.size() + report.gaps_q.size());
}

nlohmann::ordered_json to_json(const MatchReport& report) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["algorithm"] = report.algorithm;
    j["seed"] = report.seed ? ordered_json(*report.seed) : ordered_json(nullptr);
    j["m"] = report.m;
    j["n"] = report.n;
    j["d"] = report.d;
    j["gap_penalty"] = report.gap_penalty;
    j["cost"] = report.cost ? ordered_json(*report.cost) : ordered_json(nullptr);
    if (report.k)
        j["k"] = *report.k;
    if (report.band_exceeded)
        j["band_exceeded"] = *report.band_exceeded;
    if (report.success) {
        j["guess"] = report.success->guess;
        j["iteration"] = {{"outer", report.success->outer}, {"inner", report.success->inner}};
        j["threshold"] = report.success->threshold;
    }
    ordered_json pairs = ordered_json::array();
    for (const auto& p : report.pairs)
        pairs.push_back(ordered_json::array({p.i, p.j, p.dist}));
    j["pairs"] = std::move(pairs);
    j["gaps_p"] = report.gaps_p;
    j["gaps_q"] = report.gaps_q;
    j["warnings"] = report.warnings;
    if (report.wall_time_ms)
        j["wall_time_ms"] = *report.wall_time_ms;
    return j;
}

void write_json(std::ostream& out, const MatchReport& report) {
    out << to_json(report).dump(2) << '\n';
}

void write_tsv(std::ostream& out, const MatchReport& report) {
    auto meta = [&](const char* key, const std::string& value) { out << "meta\t" << key << '\t' << value << '\n'; };
    meta("algorithm", report.algorithm);
    meta("seed", report.seed ? std::to_string(*report.seed) : "");
    meta("m", std::to_string(report.m));
    meta("n", std::to_string(report.n));
    meta("d", std::to_string(report.d));
    meta("gap_penalty", format_number(report.gap_penalty));
    meta("cost", report.cost ? format_number(*report.cost) : "");
    if (report.k)
        meta("k", std::to_string(*report.k));
    if (report.band_exceeded)
        meta("band_exceeded", *report.band_exceeded ? "true" : "false");
    if (report.success) {
        meta("guess", format_number(report.success->guess));
        meta("outer", std::to_string(report.success->outer));
        meta("inner", std::to_string(report.success->inner));
        meta("threshold", format_number(report.success->threshold));
    }
    for (const auto& w : report.warnings)
        meta("warning", w);
    if (report.wall_time_ms)
        meta("wall_time_ms", format_number(*report.wall_time_ms));
    for (const auto& p : report.pairs)
        out << "pair\t" << p.i << '\t' << p.j << '\t' << format_number(p.dist) << '\n';
    for (const auto i : report.gaps_p)
        out << "gap_p\t" << i << '\n';
    for (const auto j : report.gaps_q)
        out << "gap_q\t" << j << '\n';
}

}  // namespace ged::cli
