#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ged/core.hpp"

namespace ged::cli {

struct ReportPair {
    std::size_t i = 0;
    std::size_t j = 0;
    double dist = 0;
};

/// Structured result of one command run on one pair of trajectories.
struct MatchReport {
    std::string algorithm;
    std::optional<std::uint64_t> seed;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t d = 0;
    double gap_penalty = 1.0;
    std::optional<double> cost;  // absent when the band was exceeded
    std::vector<ReportPair> pairs;
    std::vector<std::size_t> gaps_p;
    std::vector<std::size_t> gaps_q;
    std::optional<SuccessInfo> success;
    std::optional<bool> band_exceeded;
    std::optional<long long> k;
    std::vector<std::string> warnings;
    std::optional<double> wall_time_ms;
};

/// Builds a report from a result. The cost is recomputed from the matching
/// on the original points rather than copied from `result`.
MatchReport make_report(const PointSequence& p, const PointSequence& q, const GedResult& result,
                        const CostModel& model);

/// Report for a banded run whose band was exceeded.
MatchReport band_exceeded_report(const PointSequence& p, const PointSequence& q, long long k,
                                 const CostModel& model);

nlohmann::ordered_json to_json(const MatchReport& report);

/// Recomputes the cost of a report from its pairs and gap lists.
double report_cost(const MatchReport& report);

void write_json(std::ostream& out, const MatchReport& report);

/// Tab-separated rows: `meta key value`, `pair i j dist`, `gap_p i`, `gap_q j`.
void write_tsv(std::ostream& out, const MatchReport& report);

/// Shortest decimal form that parses back to the same double.
std::string format_number(double value);

}  // namespace ged::cli
