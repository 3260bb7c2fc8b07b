#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <vector>

#include "negaspec/stabilizer.hpp"

namespace negaspec::test {

// cylinder layout: periodic in d-1 directions of extent `length`, open cut
// axis with 3 layers, cut between layers 1 and 2
inline BoundaryLayout cylinder_layout(int d, int length) {
    std::vector<int> extents(d, length);
    std::vector<Bc> bcs(d, Bc::periodic);
    extents[d - 1] = 3;
    bcs[d - 1] = Bc::open;
    auto cx = std::make_shared<CellComplex>(build_complex(d, extents, bcs));
    auto code = std::make_shared<StabilizerCode>(build_toric_code(cx));
    return boundary_layout(code, Cut{d - 1, 1});
}

// Cyclic order of the 2d boundary: bond k joins site k-1 and site k.
// Recovered by walking the adjacency M (each A-row couples two B-sites).
struct CycleOrder {
    std::vector<int> bonds;  // R_A indices in cycle order
    std::vector<int> sites;  // R_B indices; sites[k] follows bonds[k]
};

inline CycleOrder boundary_cycle(const BoundaryLayout &lo) {
    const std::size_t na = lo.r_a.size(), nb = lo.r_b.size();
    std::vector<std::array<int, 2>> ends(na);
    std::vector<std::vector<int>> at(nb);
    for (std::size_t i = 0; i < na; ++i) {
        int s0 = -1, s1 = -1;
        for (std::size_t j = 0; j < nb; ++j)
            if (lo.m.get(i, j)) (s0 < 0 ? s0 : s1) = static_cast<int>(j);
        if (s1 < 0) throw std::logic_error("boundary_cycle: row degree != 2");
        ends[i] = {s0, s1};
        at[s0].push_back(static_cast<int>(i));
        at[s1].push_back(static_cast<int>(i));
    }
    CycleOrder c;
    std::vector<bool> used(na, false);
    int cur = 0;
    for (std::size_t k = 0; k < na; ++k) {
        int next = -1;
        for (int b : at[cur])
            if (!used[b]) { next = b; break; }
        if (next < 0) throw std::logic_error("boundary_cycle: walk stuck");
        used[next] = true;
        cur = ends[next][0] == cur ? ends[next][1] : ends[next][0];
        c.bonds.push_back(next);
        c.sites.push_back(cur);
    }
    if (cur != 0) throw std::logic_error("boundary_cycle: did not close");
    return c;
}

} // namespace negaspec::test
