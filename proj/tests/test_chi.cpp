#include <doctest.h>

#include <array>
#include <vector>

#include "negaspec/chi.hpp"
#include "negaspec/oracle.hpp"
#include "negaspec/rng.hpp"
#include "helpers.hpp"

using namespace negaspec;
using negaspec::test::boundary_cycle;
using negaspec::test::cylinder_layout;

namespace {

gf2::BitVec span(const std::vector<gf2::BitVec> &basis, std::uint64_t coeffs, std::size_t n) {
    gf2::BitVec v(n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if ((coeffs >> k) & 1) v.xor_with(basis[k]);
    return v;
}

} // namespace

TEST_CASE("identity configuration gives +1") {
    for (int d : {2, 3}) {
        auto lo = cylinder_layout(d, d == 2 ? 4 : 2);
        ChiSolver solver(lo);
        CHECK(solver.chi(BoundaryConfig::all_plus(lo)) == 1);
    }
}

TEST_CASE("braided and unbraided L = 4 diagrams") {
    auto lo = cylinder_layout(2, 4);
    ChiSolver solver(lo);
    auto cyc = boundary_cycle(lo);

    // braided: A-flips at cycle bonds 0 and 2, B-flips at the sites in
    // between them on alternating arcs, so the two domain-wall pairs
    // interleave around the cycle
    BoundaryConfig braided = BoundaryConfig::all_plus(lo);
    braided.x.set(cyc.bonds[0], true);
    braided.x.set(cyc.bonds[2], true);
    braided.y.set(cyc.sites[0], true);
    braided.y.set(cyc.sites[2], true);
    CHECK(solver.chi(braided) == -1);
    CHECK(chi_bruteforce(lo, braided) == -1);

    // unbraided: same A-flips, both B-flips on one arc
    BoundaryConfig unbraided = BoundaryConfig::all_plus(lo);
    unbraided.x.set(cyc.bonds[0], true);
    unbraided.x.set(cyc.bonds[2], true);
    unbraided.y.set(cyc.sites[2], true);
    unbraided.y.set(cyc.sites[3], true);
    CHECK(solver.chi(unbraided) == 1);
    CHECK(chi_bruteforce(lo, unbraided) == 1);
}

TEST_CASE("odd-parity A sector is inadmissible") {
    auto lo = cylinder_layout(2, 4);
    ChiSolver solver(lo);
    CounterRng rng(11, 0);
    for (int trial = 0; trial < 20; ++trial) {
        BoundaryConfig cfg = BoundaryConfig::all_plus(lo);
        // odd number of A-flips violates prod A_i = 1 on the cycle
        cfg.x.set(trial % 4, true);
        for (std::size_t j = 0; j < lo.r_b.size(); ++j)
            if (rng.next_u64() & 1) cfg.y.set(j, true);
        CHECK(solver.chi(cfg) == 0);
        CHECK(chi_bruteforce(lo, cfg) == 0);
    }
}

TEST_CASE("admissible sector sizes") {
    for (int l : {3, 4, 5, 6}) {
        auto lo = cylinder_layout(2, l);
        ChiSolver solver(lo);
        CHECK(solver.admissible_basis().rank == static_cast<std::size_t>(l) - 1);
    }
}

TEST_CASE("exhaustive agreement with the character-sum oracle") {
    auto check_layout = [](const BoundaryLayout &lo) {
        ChiSolver solver(lo);
        const auto &basis = solver.admissible_basis();
        const std::size_t r = basis.rank;
        REQUIRE(2 * r <= 16);
        for (std::uint64_t cx = 0; cx < (std::uint64_t(1) << r); ++cx) {
            auto x = span(basis.x_basis, cx, lo.r_a.size());
            for (std::uint64_t cy = 0; cy < (std::uint64_t(1) << r); ++cy) {
                BoundaryConfig cfg{x, span(basis.y_basis, cy, lo.r_b.size())};
                int got = solver.chi(cfg);
                CHECK(got != 0);
                CHECK(got == chi_bruteforce(lo, cfg));
            }
        }
    };
    for (int l = 2; l <= 5; ++l) check_layout(cylinder_layout(2, l));
    check_layout(cylinder_layout(3, 2));
}

TEST_CASE("random non-admissible configs agree with the oracle") {
    auto lo = cylinder_layout(2, 5);
    ChiSolver solver(lo);
    CounterRng rng(11, 1);
    for (int trial = 0; trial < 200; ++trial) {
        BoundaryConfig cfg = BoundaryConfig::all_plus(lo);
        for (std::size_t i = 0; i < lo.r_a.size(); ++i)
            if (rng.next_u64() & 1) cfg.x.set(i, true);
        for (std::size_t j = 0; j < lo.r_b.size(); ++j)
            if (rng.next_u64() & 1) cfg.y.set(j, true);
        CHECK(solver.chi(cfg) == chi_bruteforce(lo, cfg));
    }
}

TEST_CASE("multiplicativity in each sector") {
    auto lo = cylinder_layout(2, 5);
    ChiSolver solver(lo);
    const auto &basis = solver.admissible_basis();
    CounterRng rng(11, 2);
    const std::size_t r = basis.rank;
    for (int trial = 0; trial < 50; ++trial) {
        std::uint64_t ca = rng.below(1 << r), cb = rng.below(1 << r), cb2 = rng.below(1 << r);
        auto x = span(basis.x_basis, ca, lo.r_a.size());
        auto y1 = span(basis.y_basis, cb, lo.r_b.size());
        auto y2 = span(basis.y_basis, cb2, lo.r_b.size());
        auto y12 = y1;
        y12.xor_with(y2);
        int c1 = solver.chi({x, y1}), c2 = solver.chi({x, y2}), c12 = solver.chi({x, y12});
        CHECK(c12 == c1 * c2);
    }
}

TEST_CASE("sign table reproduces chi on basis pairs") {
    auto lo = cylinder_layout(2, 4);
    ChiSolver solver(lo);
    const auto &basis = solver.admissible_basis();
    const auto &q = solver.sign_table();
    for (std::size_t j = 0; j < basis.rank; ++j)
        for (std::size_t k = 0; k < basis.rank; ++k) {
            BoundaryConfig cfg{basis.x_basis[j], basis.y_basis[k]};
            CHECK(solver.chi(cfg) == (q[j].get(k) ? -1 : 1));
        }
}
