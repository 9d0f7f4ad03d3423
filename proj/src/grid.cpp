#include "ged/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace ged {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t outer, std::uint64_t inner) {
    return master ^ splitmix64((outer << 32) ^ inner);
}

namespace {

// floor((x - b) / delta), absorbing rounding error of a few ulps just below a
// cell boundary so that snapped corners map back to their own cell.
inline std::int64_t lattice(double x, double b, double delta) {
    const double t = (x - b) / delta;
    return static_cast<std::int64_t>(std::floor(t + 1e-9 * std::max(1.0, std::abs(t))));
}

}  // namespace

GridConfig grid_new(double delta, std::size_t dim, std::mt19937_64& rng) {
    if (!(std::isfinite(delta) && delta > 0))
        throw std::invalid_argument("grid cell side must be a finite positive number");
    GridConfig g;
    g.delta = delta;
    g.offset.resize(dim);
    for (auto& b : g.offset) {
        // 53 random mantissa bits, uniform on [0, 1).
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        b = u * delta;
        if (b >= delta)
            b = std::nextafter(delta, 0.0);
    }
    return g;
}

GridConfig grid_new(double delta, std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GridConfig g = grid_new(delta, dim, rng);
    g.seed = seed;
    return g;
}

CellId cell_of(const GridConfig& grid, PointView p) {
    if (p.size() != grid.dim())
        throw std::invalid_argument("point and grid dimensions differ");
    CellId cell(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        cell[k] = lattice(p[k], grid.offset[k], grid.delta);
    return cell;
}

std::vector<std::int64_t> cells_of(const GridConfig& grid, const PointSequence& seq) {
    if (!seq.empty() && seq.dim() != grid.dim())
        throw std::invalid_argument("sequence and grid dimensions differ");
    const std::size_t d = grid.dim();
    std::vector<std::int64_t> out(seq.size() * d);
    const auto coords = seq.data();
    for (std::size_t t = 0; t < out.size(); ++t) {
        const std::size_t k = t % d;
        out[t] = lattice(coords[t], grid.offset[k], grid.delta);
    }
    return out;
}

SnappedSequence snap_sequence(const GridConfig& grid, const PointSequence& seq) {
    SnappedSequence out;
    out.grid = grid;
    out.cells = cells_of(grid, seq);
    const std::size_t d = grid.dim();
    std::vector<double> corners(out.cells.size());
    for (std::size_t t = 0; t < corners.size(); ++t)
        corners[t] = grid.offset[t % d] + grid.delta * static_cast<double>(out.cells[t]);
    out.points = PointSequence(d, std::move(corners));
    return out;
}

namespace {

struct ArrayHash {
    std::size_t operator()(const std::array<std::int64_t, 4>& a) const {
        std::uint64_t h = 0;
        for (auto v : a)
            h = splitmix64(h ^ static_cast<std::uint64_t>(v));
        return static_cast<std::size_t>(h);
    }
};

struct VectorHash {
    std::size_t operator()(const std::vector<std::int64_t>& a) const {
        std::uint64_t h = 0;
        for (auto v : a)
            h = splitmix64(h ^ static_cast<std::uint64_t>(v));
        return static_cast<std::size_t>(h);
    }
};

template <typename Key, typename Hash, typename MakeKey>
CellCodes encode(std::span<const std::int64_t> p_cells, std::span<const std::int64_t> q_cells, std::size_t dim,
                 MakeKey make_key) {
    std::unordered_map<Key, std::uint32_t, Hash> codes;
    codes.reserve((p_cells.size() + q_cells.size()) / dim + 1);
    CellCodes out;
    auto run = [&](std::span<const std::int64_t> cells, std::vector<std::uint32_t>& dst) {
        const std::size_t count = cells.size() / dim;
        dst.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            auto [it, inserted] = codes.try_emplace(make_key(cells.subspan(i * dim, dim)), out.alphabet);
            if (inserted)
                ++out.alphabet;
            dst[i] = it->second;
        }
    };
    run(p_cells, out.p);
    run(q_cells, out.q);
    return out;
}

}  // namespace

CellCodes dense_cell_codes(std::span<const std::int64_t> p_cells, std::span<const std::int64_t> q_cells,
                           std::size_t dim) {
    if (dim == 0)
        throw std::invalid_argument("cell dimension must be at least 1");
    if (dim <= 4) {
        return encode<std::array<std::int64_t, 4>, ArrayHash>(p_cells, q_cells, dim, [](auto c) {
            std::array<std::int64_t, 4> key{};
            std::copy(c.begin(), c.end(), key.begin());
            return key;
        });
    }
    return encode<std::vector<std::int64_t>, VectorHash>(
        p_cells, q_cells, dim, [](auto c) { return std::vector<std::int64_t>(c.begin(), c.end()); });
}

}  // namespace ged
