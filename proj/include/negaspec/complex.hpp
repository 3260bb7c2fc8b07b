#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "negaspec/gf2.hpp"

namespace negaspec {

enum class Bc { periodic, open };

// A k-cell of a hypercubic lattice: a base coordinate plus the set of axes
// the cell extends along (bitmask, popcount == k).
struct Cell {
    std::array<int, 4> coord{};
    unsigned axes = 0;
};

// Immutable d-dimensional hypercubic cell complex (d = 2, 3, 4) with
// per-axis periodic/open boundary conditions. Open axes drop the cells
// that would wrap. Cells are indexed lexicographically by coordinates,
// then by axis tuple, so ids are reproducible.
class CellComplex {
  public:
    CellComplex(int d, std::vector<int> extents, std::vector<Bc> bcs);

    int dim() const { return d_; }
    const std::vector<int> &extents() const { return extents_; }
    const std::vector<Bc> &bcs() const { return bcs_; }

    std::size_t cell_count(int k) const { return cells_[k].size(); }
    const Cell &cell(int k, std::size_t id) const { return cells_[k][id]; }

    // id of the k-cell at (coord, axes); coordinates are wrapped on
    // periodic axes. Returns -1 if the cell does not exist.
    int cell_index(int k, std::array<int, 4> coord, unsigned axes) const;

    const std::vector<int> &boundary(int k, std::size_t id) const { return bnd_[k][id]; }
    const std::vector<int> &coboundary(int k, std::size_t id) const { return cobnd_[k][id]; }

  private:
    int d_;
    std::vector<int> extents_;
    std::vector<Bc> bcs_;
    std::vector<std::vector<Cell>> cells_;                       // [k]
    std::vector<std::unordered_map<std::uint64_t, int>> index_;  // [k]
    std::vector<std::vector<std::vector<int>>> bnd_;             // [k][id] -> (k-1)-ids
    std::vector<std::vector<std::vector<int>>> cobnd_;           // [k][id] -> (k+1)-ids

    std::uint64_t key(const std::array<int, 4> &coord, unsigned axes) const;
};

CellComplex build_complex(int d, const std::vector<int> &extents, const std::vector<Bc> &bcs);

// Rows: k-cells, columns: (k-1)-cells; entry 1 iff incident.
gf2::BitMat incidence_matrix(const CellComplex &cx, int k);

} // namespace negaspec
