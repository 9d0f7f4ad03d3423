#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ged/core.hpp"

namespace ged {

/// Axis-aligned grid of side `delta` shifted by `offset`, each component in
/// [0, delta).
struct GridConfig {
    double delta = 1.0;
    std::vector<double> offset;
    std::uint64_t seed = 0;

    std::size_t dim() const { return offset.size(); }
    friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

using CellId = std::vector<std::int64_t>;

/// Draws a fresh offset uniformly from [0, delta)^dim. Deterministic in
/// (delta, dim, seed). Throws std::invalid_argument if delta <= 0.
GridConfig grid_new(double delta, std::size_t dim, std::uint64_t seed);

/// Same, drawing the offset from a caller-owned generator.
GridConfig grid_new(double delta, std::size_t dim, std::mt19937_64& rng);

/// Componentwise floor((p_i - b_i) / delta).
CellId cell_of(const GridConfig& grid, PointView p);

/// Cells of a whole sequence, flattened row-major (size() * dim entries).
std::vector<std::int64_t> cells_of(const GridConfig& grid, const PointSequence& seq);

/// A sequence with every point moved to the lower-left corner of its cell.
struct SnappedSequence {
    PointSequence points;
    std::vector<std::int64_t> cells;  // index-aligned with the source, row-major
    GridConfig grid;

    std::size_t size() const { return points.size(); }
};

SnappedSequence snap_sequence(const GridConfig& grid, const PointSequence& seq);

/// Dense integer codes for the cells of P followed by Q, assigned in order of
/// first appearance. Equal codes iff equal cells.
struct CellCodes {
    std::vector<std::uint32_t> p;
    std::vector<std::uint32_t> q;
    std::uint32_t alphabet = 0;
};

CellCodes dense_cell_codes(std::span<const std::int64_t> p_cells, std::span<const std::int64_t> q_cells,
                           std::size_t dim);

/// 64-bit mixer used to derive independent per-iteration streams.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for repetition (outer, inner) of a randomized loop.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t outer, std::uint64_t inner);

}  // namespace ged
