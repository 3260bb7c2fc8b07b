#include "negaspec/complex.hpp"

#include <stdexcept>

namespace negaspec {

namespace {

// All k-subsets of {0..d-1} in lexicographic tuple order, as bitmasks.
std::vector<unsigned> axis_subsets(int d, int k) {
    std::vector<unsigned> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) { out.push_back(0); return out; }
    if (k > d) return out;
    while (true) {
        unsigned m = 0;
        for (int i : idx) m |= 1u << i;
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == d - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace

std::uint64_t CellComplex::key(const std::array<int, 4> &coord, unsigned axes) const {
    std::uint64_t k = axes;
    for (int a = 0; a < d_; ++a) k = (k << 12) | std::uint64_t(coord[a] & 0xfff);
    return k;
}

CellComplex::CellComplex(int d, std::vector<int> extents, std::vector<Bc> bcs)
    : d_(d), extents_(std::move(extents)), bcs_(std::move(bcs)) {
    if (d < 2 || d > 4) throw std::invalid_argument("dimension must be 2, 3, or 4");
    if (static_cast<int>(extents_.size()) != d || static_cast<int>(bcs_.size()) != d)
        throw std::invalid_argument("extents/bcs size must equal dimension");
    for (int e : extents_)
        if (e < 2) throw std::invalid_argument("each extent must be >= 2");

    cells_.resize(d + 1);
    index_.resize(d + 1);
    bnd_.resize(d + 1);
    cobnd_.resize(d + 1);

    for (int k = 0; k <= d; ++k) {
        auto subsets = axis_subsets(d, k);
        std::array<int, 4> c{};
        // lexicographic coordinate sweep, axis 0 slowest
        bool done = false;
        while (!done) {
            for (unsigned axes : subsets) {
                bool valid = true;
                for (int a = 0; a < d; ++a)
                    if ((axes >> a & 1) && bcs_[a] == Bc::open && c[a] == extents_[a] - 1)
                        valid = false;
                if (!valid) continue;
                int id = static_cast<int>(cells_[k].size());
                cells_[k].push_back(Cell{c, axes});
                index_[k].emplace(key(c, axes), id);
            }
            int a = d - 1;
            while (a >= 0) {
                if (++c[a] < extents_[a]) break;
                c[a] = 0;
                --a;
            }
            done = (a < 0);
        }
    }

    // boundary lists
    for (int k = 1; k <= d; ++k) {
        bnd_[k].resize(cells_[k].size());
        for (std::size_t id = 0; id < cells_[k].size(); ++id) {
            const Cell &cell = cells_[k][id];
            for (int a = 0; a < d; ++a) {
                if (!(cell.axes >> a & 1)) continue;
                unsigned sub = cell.axes & ~(1u << a);
                int lo = cell_index(k - 1, cell.coord, sub);
                auto shifted = cell.coord;
                shifted[a] += 1;
                int hi = cell_index(k - 1, shifted, sub);
                bnd_[k][id].push_back(lo);
                bnd_[k][id].push_back(hi);
            }
        }
    }
    // coboundary = transpose of boundary
    for (int k = 0; k < d; ++k) {
        cobnd_[k].resize(cells_[k].size());
        for (std::size_t id = 0; id < cells_[k + 1].size(); ++id)
            for (int b : bnd_[k + 1][id]) cobnd_[k][b].push_back(static_cast<int>(id));
    }
    bnd_[0].resize(cells_[0].size());
    cobnd_[d].resize(cells_[d].size());
}

int CellComplex::cell_index(int k, std::array<int, 4> coord, unsigned axes) const {
    for (int a = 0; a < d_; ++a) {
        if (bcs_[a] == Bc::periodic) {
            coord[a] = ((coord[a] % extents_[a]) + extents_[a]) % extents_[a];
        } else if (coord[a] < 0 || coord[a] >= extents_[a]) {
            return -1;
        }
    }
    auto it = index_[k].find(key(coord, axes));
    return it == index_[k].end() ? -1 : it->second;
}

CellComplex build_complex(int d, const std::vector<int> &extents, const std::vector<Bc> &bcs) {
    return CellComplex(d, extents, bcs);
}

gf2::BitMat incidence_matrix(const CellComplex &cx, int k) {
    if (k < 1 || k > cx.dim()) throw std::invalid_argument("k out of range");
    gf2::BitMat m(cx.cell_count(k), cx.cell_count(k - 1));
    for (std::size_t r = 0; r < cx.cell_count(k); ++r)
        for (int c : cx.boundary(k, r)) m.row(r).flip(c); // mod-2: repeated cells cancel
    return m;
}

} // namespace negaspec
