#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "ged/aged.hpp"
#include "ged/exact.hpp"
#include "oracles.hpp"

using namespace ged;

namespace {

GridConfig unit_grid() {
    GridConfig g;
    g.delta = 1.0;
    g.offset = {0.0, 0.0};
    return g;
}

struct Instance {
    SnappedSequence p;
    SnappedSequence q;
    double exact = 0;
};

// Random walk-like pair snapped on a random grid of side `delta`.
Instance random_instance(std::size_t n, double delta, std::mt19937_64& rng) {
    std::normal_distribution<double> step(0.0, 0.6);
    std::uniform_int_distribution<int> action(0, 9);
    std::vector<std::vector<double>> a, b;
    std::vector<double> cur{0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        cur[0] += step(rng);
        cur[1] += step(rng);
        a.push_back(cur);
        const int act = action(rng);
        if (act == 0)
            continue;  // dropped from Q
        std::vector<double> noisy{cur[0] + step(rng) / 4, cur[1] + step(rng) / 4};
        b.push_back(noisy);
        if (act == 1)
            b.push_back({cur[0] + step(rng), cur[1] + step(rng)});
    }
    if (b.empty())
        b.push_back({0, 0});
    const auto grid = grid_new(delta, 2, rng);
    Instance out{snap_sequence(grid, PointSequence::from_rows(a)), snap_sequence(grid, PointSequence::from_rows(b)), 0};
    out.exact = exact_ged_cost(out.p.points, out.q.points);
    return out;
}

}  // namespace

TEST_CASE("aged on identical snapped sequences") {
    const auto g = unit_grid();
    const auto seq = snap_sequence(g, PointSequence::from_rows({{0, 0}, {1, 0}, {1, 1}, {3, 2}}));
    for (const double k : {0.0, 0.5, 3.0}) {
        const auto r = aged(seq, seq, k);
        REQUIRE(r);
        CHECK(r->result.cost == 0.0);
        CHECK(r->result.matching == Matching::diagonal(4));
        CHECK(r->label == 0);
    }
}

TEST_CASE("aged small example stays within the factor-3 window") {
    const auto g = unit_grid();
    const auto p = snap_sequence(g, PointSequence::from_rows({{0, 0}, {1, 0}}));
    const auto q = snap_sequence(g, PointSequence::from_rows({{0, 0}, {2, 0}}));
    REQUIRE(exact_ged_cost(p.points, q.points) == doctest::Approx(1.0));
    const auto r = aged(p, q, 4);
    REQUIRE(r);
    CHECK(r->result.cost >= 1.0 - 1e-9);
    CHECK(r->result.cost <= 3.0 + 1e-9);
    CHECK(validate_matching(p.points, q.points, r->result.matching).ok());
}

TEST_CASE("aged rejects mismatched grids and bad bounds") {
    const auto g = unit_grid();
    auto h = unit_grid();
    h.offset = {0.5, 0.0};
    const auto seq = PointSequence::from_rows({{0, 0}});
    CHECK_THROWS_AS(aged(snap_sequence(g, seq), snap_sequence(h, seq), 1), std::invalid_argument);
    CHECK_THROWS_AS(aged(snap_sequence(g, seq), snap_sequence(g, seq), -1), std::invalid_argument);
    CHECK_THROWS_AS(aged(snap_sequence(g, seq), snap_sequence(g, seq), NAN), std::invalid_argument);
}

TEST_CASE("aged sandwich against the exact snapped distance") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 150; ++trial) {
        const double delta = std::array{0.25, 1.0, 4.0}[trial % 3];
        const auto inst = random_instance(2 + rng() % 60, delta, rng);
        const double k = std::ceil(inst.exact) + static_cast<double>(trial % 4);
        WaveStats stats;
        const auto r = aged(inst.p, inst.q, k, {}, &stats);
        REQUIRE(r);
        const auto& res = r->result;
        REQUIRE(validate_matching(inst.p.points, inst.q.points, res.matching).ok());
        CHECK(res.cost == doctest::Approx(matching_cost(inst.p.points, inst.q.points, res.matching)).epsilon(1e-9));
        CHECK(res.cost >= inst.exact - 1e-9);
        CHECK(res.cost <= 3 * inst.exact + 1e-9);
        CHECK(static_cast<double>(r->label) <= inst.exact + 1e-9);
        CHECK(stats.max_manual_per_slide <= static_cast<std::size_t>(std::ceil(2 / delta)) + 1);
    }
}

TEST_CASE("aged honours the gap penalty by scaling") {
    std::mt19937_64 rng(405);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = random_instance(2 + rng() % 30, 1.0, rng);
        const double ell = 2.0;
        const double exact = exact_ged_cost(inst.p.points, inst.q.points, CostModel{ell});
        const auto r = aged(inst.p, inst.q, std::ceil(exact / ell) + 1, CostModel{ell});
        REQUIRE(r);
        CHECK(r->result.cost >= exact - 1e-9);
        CHECK(r->result.cost <= 3 * exact + 1e-9);
    }
}

TEST_CASE("aged fails only when the label bound is too small") {
    std::mt19937_64 rng(406);
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = random_instance(2 + rng() % 40, 1.0, rng);
        const double k = static_cast<double>(rng() % 8);
        const auto r = aged(inst.p, inst.q, k);
        if (!r)
            CHECK(inst.exact > k);
    }
}

TEST_CASE("label matrix boundary labels") {
    const auto g = unit_grid();
    const auto p = snap_sequence(g, PointSequence::from_rows({{0, 0}, {5, 0}, {9, 9}, {2, 2}, {7, 1}}));
    const auto q = snap_sequence(g, PointSequence::from_rows({{3, 3}, {5, 5}, {0, 8}, {1, 1}}));
    const auto la = label_matrix(p, q, 3);
    CHECK(la(0, 0) == 0);
    for (std::size_t i = 0; i <= 3; ++i)
        CHECK(la(i, 0) == static_cast<int>(i));
    for (std::size_t j = 0; j <= 3; ++j)
        CHECK(la(0, j) == static_cast<int>(j));
    std::mt19937_64 rng(1);
    const auto big = snap_sequence(g, oracle::random_points(600, 2, 1.0, rng));
    CHECK_THROWS_AS(label_matrix(big, q, 1), std::length_error);
}

TEST_CASE("label matrix invariants against the exact table") {
    std::mt19937_64 rng(407);
    for (int trial = 0; trial < 100; ++trial) {
        const double delta = std::array{0.25, 1.0, 4.0}[trial % 3];
        const auto inst = random_instance(1 + rng() % 64, delta, rng);
        const double k = std::ceil(inst.exact) + static_cast<double>(trial % 3);
        const auto la = label_matrix(inst.p, inst.q, k);
        const auto dp = exact_dp_matrix(inst.p.points, inst.q.points);
        const std::size_t m = inst.p.size();
        const std::size_t n = inst.q.size();
        for (std::size_t i = 0; i <= m; ++i)
            for (std::size_t j = 0; j <= n; ++j) {
                const int here = la(i, j);
                if (here < 0)
                    continue;
                CHECK(static_cast<double>(here) <= dp(i, j) + 1e-9);
                if (i + 1 <= m && j + 1 <= n && la(i + 1, j + 1) >= 0) {
                    const int diff = la(i + 1, j + 1) - here;
                    CHECK((diff == 0 || diff == 2));
                }
                if (i >= 1 && la(i - 1, j) >= 0)
                    CHECK(std::abs(here - la(i - 1, j)) == 1);
                if (j >= 1 && la(i, j - 1) >= 0)
                    CHECK(std::abs(here - la(i, j - 1)) == 1);
            }

        // The fast path's frontier agrees with the materialized labels.
        const auto fast = aged(inst.p, inst.q, k);
        REQUIRE(fast);
        const auto& table = fast->table;
        const long long last = static_cast<long long>(table.waves()) - 1;
        const long long target = static_cast<long long>(n) - static_cast<long long>(m);
        for (long long e = 0; e <= last; ++e)
            for (long long h = -e; h <= e; h += 2) {
                if (e == last && h > target)
                    break;
                CHECK(table.at(h, e) == la.frontier.at(h, e));
                if (table.beyond(h, e))
                    continue;
                long long max_row = -1;
                for (long long i = 0; i <= static_cast<long long>(m); ++i)
                    if (i + h >= 0 && i + h <= static_cast<long long>(n) &&
                        la(static_cast<std::size_t>(i), static_cast<std::size_t>(i + h)) == e)
                        max_row = i;
                CHECK(max_row == table.at(h, e));
            }
    }
}

TEST_CASE("snapped exact table diagonal steps lie in [0, 2]") {
    std::mt19937_64 rng(408);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = random_instance(1 + rng() % 40, 0.5, rng);
        const auto dp = exact_dp_matrix(inst.p.points, inst.q.points);
        for (std::size_t i = 1; i < dp.rows(); ++i)
            for (std::size_t j = 1; j < dp.cols(); ++j) {
                const double step = dp(i, j) - dp(i - 1, j - 1);
                CHECK(step >= -1e-12);
                CHECK(step <= 2 + 1e-12);
            }
    }
}
