#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ged {

using PointView = std::span<const double>;

/// Ordered sequence of points in R^d, stored row-major in one buffer.
/// All coordinates are finite; the dimension is shared by every point.
class PointSequence {
public:
    PointSequence() = default;

    /// Takes ownership of a flat row-major buffer of size n * dim.
    PointSequence(std::size_t dim, std::vector<double> coords);

    static PointSequence from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    std::size_t dim() const { return dim_; }
    bool empty() const { return coords_.empty(); }

    /// 0-based point access.
    PointView operator[](std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }

    std::span<const double> data() const { return coords_; }

    /// Prefix of the first `count` points.
    PointSequence prefix(std::size_t count) const;

    /// Copy with every coordinate multiplied by `factor`.
    PointSequence scaled(double factor) const;

    friend bool operator==(const PointSequence&, const PointSequence&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

double distance(PointView a, PointView b);

/// One matched pair, 1-based on both sides.
struct IndexPair {
    std::size_t i = 0;
    std::size_t j = 0;

    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

struct Matching {
    std::vector<IndexPair> pairs;

    std::size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }

    /// Pairs sorted by (i, j).
    Matching canonical() const;

    /// Matching with the roles of P and Q swapped.
    Matching transposed() const;

    /// {(1,1), ..., (n,n)}.
    static Matching diagonal(std::size_t n);

    friend bool operator==(const Matching&, const Matching&) = default;
};

/// 1-based indices of points of a sequence of length `len` left unmatched
/// on the given side (first = P, second = Q).
std::vector<std::size_t> gap_indices(const Matching& m, std::size_t len, bool first_side);

struct CostModel {
    double gap_penalty = 1.0;

    /// Throws std::invalid_argument unless gap_penalty is finite and positive.
    void validate() const;
};

enum class ViolationKind {
    out_of_bounds,
    duplicate_first,
    duplicate_second,
    not_monotone,
    dimension_mismatch,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    // Offending pairs as given, 1-based; for single-pair violations both equal.
    IndexPair first;
    IndexPair second;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

/// Never throws. Pairs are checked after canonical sorting, so storage order
/// does not matter.
ValidationReport validate_matching(const PointSequence& p, const PointSequence& q, const Matching& m);

class InvalidMatching : public std::invalid_argument {
public:
    explicit InvalidMatching(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Sum of matched distances plus gap_penalty per unmatched point.
/// Throws InvalidMatching if `m` is not a monotone matching of p and q.
double matching_cost(const PointSequence& p, const PointSequence& q, const Matching& m,
                     const CostModel& model = {});

/// Where an approximation's decision procedure first succeeded.
struct SuccessInfo {
    double guess = 0;       // g
    int outer = 0;          // i, g = 2^i
    int inner = 0;          // j, 1-based repetition
    double threshold = 0;  // bound handed to the decision procedure
};

struct GedResult {
    double cost = 0;
    Matching matching;
    std::string algorithm;
    std::optional<std::uint64_t> seed;
    std::optional<SuccessInfo> success;
    std::vector<std::string> warnings;
};

/// Throws std::invalid_argument if either sequence is empty or the
/// dimensions differ.
void require_compatible(const PointSequence& p, const PointSequence& q);

}  // namespace ged
