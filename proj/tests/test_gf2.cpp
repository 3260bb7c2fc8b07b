#include <doctest.h>

#include "negaspec/gf2.hpp"
#include "negaspec/rng.hpp"

using namespace negaspec;
using namespace negaspec::gf2;

namespace {

BitMat random_mat(std::size_t rows, std::size_t cols, CounterRng &rng) {
    BitMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.next_u64() & 1) m.set(r, c, true);
    return m;
}

BitVec random_vec(std::size_t n, CounterRng &rng) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.next_u64() & 1) v.set(i, true);
    return v;
}

} // namespace

TEST_CASE("BitVec basics") {
    BitVec v(70);
    CHECK(v.size() == 70);
    CHECK(!v.any());
    v.set(0, true);
    v.set(69, true);
    CHECK(v.get(0));
    CHECK(v.get(69));
    CHECK(!v.get(35));
    CHECK(v.popcount() == 2);
    v.flip(69);
    CHECK(!v.get(69));
    CHECK(v.popcount() == 1);

    BitVec w(70);
    w.set(0, true);
    w.set(1, true);
    CHECK(v.dot(w));      // shared bit 0
    CHECK(v.and_with(w).popcount() == 1);
    v.xor_with(w);
    CHECK(!v.get(0));
    CHECK(v.get(1));
}

TEST_CASE("rank of known matrices") {
    // identity
    BitMat id(5, 5);
    for (std::size_t i = 0; i < 5; ++i) id.set(i, i, true);
    CHECK(rank(id) == 5);

    // cyclic difference matrix of a length-L cycle has rank L-1
    for (std::size_t l = 2; l <= 8; ++l) {
        BitMat c(l, l);
        for (std::size_t i = 0; i < l; ++i) {
            c.set(i, i, true);
            c.set(i, (i + 1) % l, true);
        }
        CHECK(rank(c) == l - 1);
    }

    // all-zero
    CHECK(rank(BitMat(3, 7)) == 0);
}

TEST_CASE("solve round-trip and consistency") {
    CounterRng rng(2024, 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 3 + rng.below(10), cols = 3 + rng.below(10);
        BitMat m = random_mat(rows, cols, rng);

        // y in the image: M x0 for random x0 must be solvable and reproduced
        BitVec x0 = random_vec(cols, rng);
        BitVec y = m.mul(x0);
        auto sol = solve(m, y);
        REQUIRE(sol.has_value());
        CHECK(m.mul(*sol) == y);
    }
}

TEST_CASE("solve detects inconsistency") {
    // x1 + x2 = 0 and x1 + x2 = 1 simultaneously
    BitMat m(2, 2);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 0, true);
    m.set(1, 1, true);
    BitVec y(2);
    y.set(1, true);
    CHECK(!solve(m, y).has_value());
}

TEST_CASE("kernel basis spans the kernel") {
    CounterRng rng(2024, 2);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 2 + rng.below(8), cols = 2 + rng.below(12);
        BitMat m = random_mat(rows, cols, rng);
        auto ker = kernel_basis(m);
        CHECK(ker.size() == cols - rank(m)); // rank-nullity
        for (const auto &k : ker) CHECK(!m.mul(k).any());
        // random combinations stay in the kernel
        if (!ker.empty()) {
            BitVec comb(cols);
            for (const auto &k : ker)
                if (rng.next_u64() & 1) comb.xor_with(k);
            CHECK(!m.mul(comb).any());
        }
    }
}

TEST_CASE("column space basis") {
    CounterRng rng(2024, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 2 + rng.below(8), cols = 2 + rng.below(8);
        BitMat m = random_mat(rows, cols, rng);
        auto cs = column_space(m);
        std::size_t r = rank(m);
        CHECK(cs.basis.size() == r);
        CHECK(cs.pivot_columns.size() == r);
        // basis vectors are independent: stacking them has full rank
        BitMat stack(r, rows);
        for (std::size_t i = 0; i < r; ++i) stack.row(i) = cs.basis[i];
        CHECK(rank(stack) == r);
        // each basis vector is the pivot column itself
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t rr = 0; rr < rows; ++rr)
                CHECK(cs.basis[i].get(rr) == m.get(rr, cs.pivot_columns[i]));
    }
}

TEST_CASE("independent rows") {
    CounterRng rng(2024, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 2 + rng.below(10), cols = 2 + rng.below(10);
        BitMat m = random_mat(rows, cols, rng);
        auto idx = independent_rows(m);
        CHECK(idx.size() == rank(m));
        BitMat sub(idx.size(), cols);
        for (std::size_t i = 0; i < idx.size(); ++i) sub.row(i) = m.row(idx[i]);
        CHECK(rank(sub) == idx.size());
    }
}

TEST_CASE("transpose involution") {
    CounterRng rng(2024, 5);
    BitMat m = random_mat(9, 13, rng);
    BitMat t = m.transposed();
    CHECK(t.rows() == 13);
    CHECK(t.cols() == 9);
    BitMat tt = t.transposed();
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 13; ++c) CHECK(tt.get(r, c) == m.get(r, c));
    CHECK(rank(m) == rank(t));
}
