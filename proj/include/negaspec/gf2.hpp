#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

// Bit-packed GF(2) vectors and matrices. Rows are stored as 64-bit words;
// all elimination routines use a fixed pivot order (lowest column index
// first) so solutions and bases are reproducible run-to-run.
namespace negaspec::gf2 {

class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const BitVec &o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    // parity of <this, o>
    bool dot(const BitVec &o) const {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return __builtin_parityll(acc);
    }
    BitVec and_with(const BitVec &o) const {
        BitVec r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }
    bool operator==(const BitVec &o) const { return n_ == o.n_ && w_ == o.w_; }

    const std::vector<std::uint64_t> &words() const { return w_; }
    std::string to_hex() const;

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMat {
  public:
    BitMat() = default;
    BitMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
    BitVec &row(std::size_t r) { return data_[r]; }
    const BitVec &row(std::size_t r) const { return data_[r]; }

    BitMat transposed() const;
    // y = M x (rows * x)
    BitVec mul(const BitVec &x) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> data_;
};

std::size_t rank(BitMat m);

// Solve M a = y; returns a deterministic particular solution, or nullopt.
std::optional<BitVec> solve(const BitMat &m, const BitVec &y);

// Basis of {x : M x = 0}.
std::vector<BitVec> kernel_basis(const BitMat &m);

// Deterministic basis of the column space, plus the column indices used.
struct ColumnSpace {
    std::vector<BitVec> basis;
    std::vector<std::size_t> pivot_columns;
};
ColumnSpace column_space(const BitMat &m);

// Indices of a maximal independent row set (lowest indices first).
std::vector<std::size_t> independent_rows(const BitMat &m);

} // namespace negaspec::gf2
