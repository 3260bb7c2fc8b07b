#include <doctest.h>

#include "negaspec/complex.hpp"

using namespace negaspec;

TEST_CASE("2x2 torus cell counts and Euler characteristic") {
    auto cx = build_complex(2, {2, 2}, {Bc::periodic, Bc::periodic});
    CHECK(cx.cell_count(0) == 4);
    CHECK(cx.cell_count(1) == 8);
    CHECK(cx.cell_count(2) == 4);
    CHECK(4 - 8 + 4 == 0); // chi(torus) = 0
}

TEST_CASE("3d torus cell counts") {
    for (int l : {2, 3}) {
        auto cx = build_complex(3, {l, l, l}, {Bc::periodic, Bc::periodic, Bc::periodic});
        std::size_t n = static_cast<std::size_t>(l) * l * l;
        CHECK(cx.cell_count(0) == n);
        CHECK(cx.cell_count(1) == 3 * n);
        CHECK(cx.cell_count(2) == 3 * n);
        CHECK(cx.cell_count(3) == n);
        long chi = static_cast<long>(cx.cell_count(0)) - cx.cell_count(1) + cx.cell_count(2) -
                   cx.cell_count(3);
        CHECK(chi == 0);
    }
}

TEST_CASE("4d torus cell counts") {
    auto cx = build_complex(4, {2, 2, 2, 2},
                            {Bc::periodic, Bc::periodic, Bc::periodic, Bc::periodic});
    std::size_t n = 16;
    CHECK(cx.cell_count(0) == n);
    CHECK(cx.cell_count(1) == 4 * n);
    CHECK(cx.cell_count(2) == 6 * n);
    CHECK(cx.cell_count(3) == 4 * n);
    CHECK(cx.cell_count(4) == n);
    long chi = static_cast<long>(n) - 4 * n + 6 * n - 4 * n + n;
    CHECK(chi == 0);
}

TEST_CASE("open axis drops wrapping cells") {
    // 2x3 cylinder, y open: 6 vertices, 3 x-edges per row (periodic) and
    // 2x2 y-edges, 4 plaquettes
    auto cx = build_complex(2, {2, 3}, {Bc::periodic, Bc::open});
    CHECK(cx.cell_count(0) == 6);
    CHECK(cx.cell_count(1) == 10); // 6 x-edges + 4 y-edges
    CHECK(cx.cell_count(2) == 4);
}

TEST_CASE("boundary of boundary vanishes") {
    auto check_dd = [](const CellComplex &cx) {
        for (int k = 2; k <= cx.dim(); ++k)
            for (std::size_t id = 0; id < cx.cell_count(k); ++id) {
                // XOR of boundaries of the boundary must be empty
                gf2::BitVec acc(cx.cell_count(k - 2));
                for (int f : cx.boundary(k, id))
                    for (int e : cx.boundary(k - 1, f)) acc.flip(e);
                CHECK(!acc.any());
            }
    };
    check_dd(build_complex(2, {3, 3}, {Bc::periodic, Bc::periodic}));
    check_dd(build_complex(3, {2, 2, 3}, {Bc::periodic, Bc::periodic, Bc::open}));
    check_dd(build_complex(4, {2, 2, 2, 3},
                           {Bc::periodic, Bc::periodic, Bc::periodic, Bc::open}));
}

TEST_CASE("coboundary is the transpose of boundary") {
    auto cx = build_complex(3, {2, 3, 2}, {Bc::periodic, Bc::periodic, Bc::periodic});
    for (int k = 1; k <= 3; ++k) {
        auto inc = incidence_matrix(cx, k);
        CHECK(inc.rows() == cx.cell_count(k));
        CHECK(inc.cols() == cx.cell_count(k - 1));
        for (std::size_t lo = 0; lo < cx.cell_count(k - 1); ++lo)
            for (int hi : cx.coboundary(k - 1, lo)) CHECK(inc.get(hi, lo));
    }
}

TEST_CASE("incidence matrix row weights") {
    // each plaquette boundary has four edges
    auto cx = build_complex(2, {2, 2}, {Bc::periodic, Bc::periodic});
    auto inc = incidence_matrix(cx, 2);
    for (std::size_t r = 0; r < inc.rows(); ++r) CHECK(inc.row(r).popcount() == 4);
}

TEST_CASE("face-boundary rank on the L x L torus is L^2 - 1") {
    for (int l : {2, 3}) {
        auto cx = build_complex(2, {l, l}, {Bc::periodic, Bc::periodic});
        CHECK(gf2::rank(incidence_matrix(cx, 2)) == static_cast<std::size_t>(l) * l - 1);
    }
}

TEST_CASE("cell_index wraps on periodic axes") {
    auto cx = build_complex(2, {3, 3}, {Bc::periodic, Bc::periodic});
    int a = cx.cell_index(0, {0, 0, 0, 0}, 0);
    int b = cx.cell_index(0, {3, 3, 0, 0}, 0);
    CHECK(a >= 0);
    CHECK(a == b);
    // no such cell on an open axis beyond the extent
    auto cy = build_complex(2, {3, 3}, {Bc::periodic, Bc::open});
    CHECK(cy.cell_index(1, {0, 2, 0, 0}, 2u) == -1); // y-edge would wrap
}

TEST_CASE("invalid arguments rejected") {
    CHECK_THROWS(build_complex(5, {2, 2, 2, 2, 2},
                               {Bc::periodic, Bc::periodic, Bc::periodic, Bc::periodic,
                                Bc::periodic}));
    auto cx = build_complex(2, {2, 2}, {Bc::periodic, Bc::periodic});
    CHECK_THROWS(incidence_matrix(cx, 0));
    CHECK_THROWS(incidence_matrix(cx, 3));
}
