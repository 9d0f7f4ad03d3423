#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ged/core.hpp"
#include "oracles.hpp"

using namespace ged;

namespace {

PointSequence pts(std::initializer_list<std::vector<double>> rows) {
    return PointSequence::from_rows(rows);
}

bool has_violation(const ValidationReport& r, ViolationKind kind) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("matching_cost on small examples") {
    const auto p = pts({{0, 0}});
    const auto q = pts({{3, 4}});
    CHECK(matching_cost(p, q, Matching{{{1, 1}}}) == doctest::Approx(5.0));
    CHECK(matching_cost(p, q, Matching{}) == doctest::Approx(2.0));

    const auto same = pts({{1, 1}, {2, 2}});
    CHECK(matching_cost(same, same, Matching{{{1, 1}, {2, 2}}}) == 0.0);
}

TEST_CASE("matching_cost uses the gap penalty per unmatched point") {
    const auto p = pts({{0, 0}, {1, 0}, {2, 0}});
    const auto q = pts({{0, 0}, {5, 0}});
    const CostModel model{2.5};
    CHECK(matching_cost(p, q, Matching{}, model) == doctest::Approx(2.5 * 5));
    CHECK(matching_cost(p, q, Matching{{{1, 1}}}, model) == doctest::Approx(2.5 * 3));
}

TEST_CASE("validate_matching reports each broken invariant") {
    const auto p = pts({{0, 0}, {1, 1}});
    const auto q = pts({{0, 0}, {1, 1}});

    const auto crossing = validate_matching(p, q, Matching{{{1, 2}, {2, 1}}});
    CHECK_FALSE(crossing.ok());
    CHECK(has_violation(crossing, ViolationKind::not_monotone));
    CHECK(crossing.describe().find("monotonicity") != std::string::npos);

    const auto dup = validate_matching(p, q, Matching{{{1, 1}, {1, 2}}});
    CHECK(has_violation(dup, ViolationKind::duplicate_first));
    CHECK(dup.describe().find("duplicate first index") != std::string::npos);

    const auto dup_second = validate_matching(p, q, Matching{{{1, 2}, {2, 2}}});
    CHECK(has_violation(dup_second, ViolationKind::duplicate_second));

    const auto oob = validate_matching(p, q, Matching{{{0, 1}, {2, 3}}});
    CHECK(has_violation(oob, ViolationKind::out_of_bounds));

    CHECK(validate_matching(p, q, Matching{}).ok());
    CHECK(validate_matching(p, q, Matching{{{2, 2}, {1, 1}}}).ok());
}

TEST_CASE("validate_matching names the offending pairs") {
    const auto p = pts({{0, 0}, {1, 1}, {2, 2}});
    const auto r = validate_matching(p, p, Matching{{{1, 3}, {2, 1}}});
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ViolationKind::not_monotone);
    CHECK(r.violations[0].first == IndexPair{1, 3});
    CHECK(r.violations[0].second == IndexPair{2, 1});
}

TEST_CASE("validate_matching flags dimension mismatch without throwing") {
    const auto p = pts({{0, 0}});
    const auto q = pts({{0, 0, 0}});
    ValidationReport r;
    CHECK_NOTHROW(r = validate_matching(p, q, Matching{{{1, 1}}}));
    CHECK(has_violation(r, ViolationKind::dimension_mismatch));
}

TEST_CASE("matching_cost rejects invalid matchings with a structured error") {
    const auto p = pts({{0, 0}, {1, 1}});
    try {
        matching_cost(p, p, Matching{{{1, 2}, {2, 1}}});
        FAIL("expected InvalidMatching");
    } catch (const InvalidMatching& e) {
        CHECK(has_violation(e.report(), ViolationKind::not_monotone));
    }
}

TEST_CASE("point sequences reject non-finite coordinates") {
    CHECK_THROWS_AS(PointSequence(2, {0.0, NAN}), std::invalid_argument);
    CHECK_THROWS_AS(PointSequence(2, {0.0, INFINITY}), std::invalid_argument);
    CHECK_THROWS_AS(PointSequence(2, {0.0, 1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(pts({{0, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("cost model requires a positive finite gap penalty") {
    CHECK_THROWS_AS(CostModel{0.0}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(CostModel{-1.0}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(CostModel{NAN}.validate(), std::invalid_argument);
    CHECK_NOTHROW(CostModel{0.25}.validate());
}

TEST_CASE("gap indices are the complement of matched indices") {
    const Matching m{{{2, 1}, {4, 3}}};
    CHECK(gap_indices(m, 4, true) == std::vector<std::size_t>{1, 3});
    CHECK(gap_indices(m, 3, false) == std::vector<std::size_t>{2});
}

TEST_CASE("matching_cost properties on random matchings") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 12;
        const std::size_t n = 1 + rng() % 12;
        const auto p = oracle::random_points(m, 2, 5.0, rng);
        const auto q = oracle::random_points(n, 2, 5.0, rng);
        const double ell = 0.5 + static_cast<double>(rng() % 4);
        const CostModel model{ell};

        // Random monotone matching: pick pairs along a random staircase.
        Matching mt;
        std::size_t i = 0, j = 0;
        while (i < m && j < n) {
            switch (rng() % 3) {
            case 0: mt.pairs.push_back({++i, ++j}); break;
            case 1: ++i; break;
            default: ++j; break;
            }
        }
        REQUIRE(validate_matching(p, q, mt).ok());
        const double cost = matching_cost(p, q, mt, model);

        double expect = ell * static_cast<double>(m + n - 2 * mt.size());
        for (const auto& pr : mt.pairs)
            expect += distance(p[pr.i - 1], q[pr.j - 1]);
        CHECK(cost == doctest::Approx(expect).epsilon(1e-12));

        CHECK(matching_cost(p, q, Matching{}, model) == ell * static_cast<double>(m + n));

        Matching shuffled = mt;
        std::shuffle(shuffled.pairs.begin(), shuffled.pairs.end(), rng);
        CHECK(matching_cost(p, q, shuffled, model) == cost);

        if (!mt.empty()) {
            const std::size_t drop = rng() % mt.size();
            Matching fewer = mt;
            const auto pr = fewer.pairs[drop];
            fewer.pairs.erase(fewer.pairs.begin() + static_cast<std::ptrdiff_t>(drop));
            const double delta = matching_cost(p, q, fewer, model) - cost;
            CHECK(delta == doctest::Approx(2 * ell - distance(p[pr.i - 1], q[pr.j - 1])).epsilon(1e-9));
        }

        CHECK(matching_cost(q, p, mt.transposed(), model) == doctest::Approx(cost).epsilon(1e-12));
    }
}
