#include "ged/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ged {

PointSequence::PointSequence(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
    if (dim_ == 0 && !coords_.empty())
        throw std::invalid_argument("point dimension must be at least 1");
    if (dim_ != 0 && coords_.size() % dim_ != 0)
        throw std::invalid_argument("coordinate buffer is not a multiple of the dimension");
    for (double c : coords_) {
        if (!std::isfinite(c))
            throw std::invalid_argument("point coordinates must be finite");
    }
}

PointSequence PointSequence::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty())
        return {};
    const std::size_t dim = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * dim);
    for (const auto& row : rows) {
        if (row.size() != dim)
            throw std::invalid_argument("all points must share one dimension");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return {dim, std::move(flat)};
}

PointSequence PointSequence::prefix(std::size_t count) const {
    count = std::min(count, size());
    return {dim_, std::vector<double>(coords_.begin(), coords_.begin() + count * dim_)};
}

PointSequence PointSequence::scaled(double factor) const {
    std::vector<double> out(coords_);
    for (double& c : out)
        c *= factor;
    return {dim_, std::move(out)};
}

double distance(PointView a, PointView b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

Matching Matching::canonical() const {
    Matching out{pairs};
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

Matching Matching::transposed() const {
    Matching out;
    out.pairs.reserve(pairs.size());
    for (auto [i, j] : pairs)
        out.pairs.push_back({j, i});
    return out;
}

Matching Matching::diagonal(std::size_t n) {
    Matching out;
    out.pairs.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        out.pairs.push_back({i, i});
    return out;
}

std::vector<std::size_t> gap_indices(const Matching& m, std::size_t len, bool first_side) {
    std::vector<char> used(len + 1, 0);
    for (auto [i, j] : m.pairs) {
        const std::size_t idx = first_side ? i : j;
        if (idx >= 1 && idx <= len)
            used[idx] = 1;
    }
    std::vector<std::size_t> gaps;
    for (std::size_t k = 1; k <= len; ++k) {
        if (!used[k])
            gaps.push_back(k);
    }
    return gaps;
}

void CostModel::validate() const {
    if (!(std::isfinite(gap_penalty) && gap_penalty > 0))
        throw std::invalid_argument("gap penalty must be a finite positive number");
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::out_of_bounds: return "index out of bounds";
    case ViolationKind::duplicate_first: return "duplicate first index";
    case ViolationKind::duplicate_second: return "duplicate second index";
    case ViolationKind::not_monotone: return "monotonicity";
    case ViolationKind::dimension_mismatch: return "dimension mismatch";
    }
    return "unknown";
}

std::string ValidationReport::describe() const {
    if (ok())
        return "ok";
    std::ostringstream os;
    os << "invalid matching:";
    for (const auto& v : violations) {
        os << ' ' << to_string(v.kind) << " at (" << v.first.i << ',' << v.first.j << ')';
        if (v.second != v.first)
            os << "/(" << v.second.i << ',' << v.second.j << ')';
        os << ';';
    }
    return os.str();
}

ValidationReport validate_matching(const PointSequence& p, const PointSequence& q, const Matching& m) {
    ValidationReport report;
    if (!p.empty() && !q.empty() && p.dim() != q.dim())
        report.violations.push_back({ViolationKind::dimension_mismatch, {}, {}});

    std::vector<IndexPair> in_bounds;
    in_bounds.reserve(m.pairs.size());
    for (const auto& pr : m.pairs) {
        if (pr.i < 1 || pr.i > p.size() || pr.j < 1 || pr.j > q.size())
            report.violations.push_back({ViolationKind::out_of_bounds, pr, pr});
        else
            in_bounds.push_back(pr);
    }

    std::sort(in_bounds.begin(), in_bounds.end());
    for (std::size_t k = 1; k < in_bounds.size(); ++k) {
        const auto& a = in_bounds[k - 1];
        const auto& b = in_bounds[k];
        if (a.i == b.i)
            report.violations.push_back({ViolationKind::duplicate_first, a, b});
        else if (b.j < a.j)
            report.violations.push_back({ViolationKind::not_monotone, a, b});
    }

    auto by_second = in_bounds;
    std::sort(by_second.begin(), by_second.end(),
              [](const IndexPair& a, const IndexPair& b) { return a.j != b.j ? a.j < b.j : a.i < b.i; });
    for (std::size_t k = 1; k < by_second.size(); ++k) {
        if (by_second[k - 1].j == by_second[k].j)
            report.violations.push_back({ViolationKind::duplicate_second, by_second[k - 1], by_second[k]});
    }
    return report;
}

InvalidMatching::InvalidMatching(ValidationReport report)
    : std::invalid_argument(report.describe()), report_(std::move(report)) {}

double matching_cost(const PointSequence& p, const PointSequence& q, const Matching& m,
                     const CostModel& model) {
    model.validate();
    auto report = validate_matching(p, q, m);
    if (!report.ok())
        throw InvalidMatching(std::move(report));
    // Summed in canonical order so the result does not depend on storage order.
    double matched = 0;
    for (auto [i, j] : m.canonical().pairs)
        matched += distance(p[i - 1], q[j - 1]);
    const double gaps = static_cast<double>(p.size() + q.size() - 2 * m.size());
    return matched + model.gap_penalty * gaps;
}

void require_compatible(const PointSequence& p, const PointSequence& q) {
    if (p.empty() || q.empty())
        throw std::invalid_argument("point sequences must be non-empty");
    if (p.dim() != q.dim())
        throw std::invalid_argument("point sequences have different dimensions (" +
                                    std::to_string(p.dim()) + " vs " + std::to_string(q.dim()) + ")");
}

}  // namespace ged
