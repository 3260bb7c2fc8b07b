#include "negaspec/gf2.hpp"

#include <algorithm>
#include <cstdio>

namespace negaspec::gf2 {

std::string BitVec::to_hex() const {
    if (n_ == 0) return "0";
    std::string s;
    char buf[17];
    bool leading = true;
    for (std::size_t k = w_.size(); k-- > 0;) {
        if (leading && w_[k] == 0 && k > 0) continue;
        std::snprintf(buf, sizeof buf, leading ? "%llx" : "%016llx",
                      static_cast<unsigned long long>(w_[k]));
        leading = false;
        s += buf;
    }
    return s;
}

BitMat BitMat::transposed() const {
    BitMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BitVec BitMat::mul(const BitVec &x) const {
    BitVec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].dot(x)) y.set(r, true);
    return y;
}

namespace {

// Row echelon form in place; returns (pivot column per reduced row).
// Pivot search order: columns left to right, rows top-down.
std::vector<std::size_t> eliminate(std::vector<BitVec> &rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t q = 0; q < rows.size(); ++q)
            if (q != r && rows[q].get(c)) rows[q].xor_with(rows[r]);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(BitMat m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return eliminate(rows, m.cols()).size();
}

std::optional<BitVec> solve(const BitMat &m, const BitVec &y) {
    // Augment with y as an extra column.
    std::size_t n = m.cols();
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVec aug(n + 1);
        for (std::size_t c = 0; c < n; ++c) aug.set(c, m.get(r, c));
        aug.set(n, y.get(r));
        rows.push_back(std::move(aug));
    }
    auto pivots = eliminate(rows, n); // eliminate over the first n columns only
    BitVec x(n);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (rows[i].get(n)) x.set(pivots[i], true);
    // Inconsistent if a zero row has nonzero rhs.
    for (std::size_t i = pivots.size(); i < rows.size(); ++i)
        if (rows[i].get(n)) return std::nullopt;
    return x;
}

std::vector<BitVec> kernel_basis(const BitMat &m) {
    std::size_t n = m.cols();
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    auto pivots = eliminate(rows, n);

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        BitVec v(n);
        v.set(fc, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].get(fc)) v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

ColumnSpace column_space(const BitMat &m) {
    // Pivot columns of the echelon form are an independent column set.
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    auto pivots = eliminate(rows, m.cols());

    ColumnSpace cs;
    cs.pivot_columns = std::vector<std::size_t>(pivots.begin(), pivots.end());
    for (auto c : cs.pivot_columns) {
        BitVec col(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m.get(r, c)) col.set(r, true);
        cs.basis.push_back(std::move(col));
    }
    return cs;
}

std::vector<std::size_t> independent_rows(const BitMat &m) {
    auto cs = column_space(m.transposed());
    return cs.pivot_columns;
}

} // namespace negaspec::gf2
