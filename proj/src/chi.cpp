#include "negaspec/chi.hpp"

#include <stdexcept>

namespace negaspec {

ChiSolver::ChiSolver(const BoundaryLayout &layout) : m_(layout.m), mt_(layout.m.transposed()) {
    ker_mt_ = gf2::kernel_basis(mt_);

    auto cs = gf2::column_space(m_);
    basis_.x_basis = cs.basis;
    basis_.rank = cs.basis.size();

    basis_.y_solution_rows = gf2::independent_rows(m_);
    for (auto r : basis_.y_solution_rows) basis_.y_basis.push_back(m_.row(r));

    // Q[j][k] = x_basis[j] bit at row a_k
    q_rows_.assign(basis_.rank, gf2::BitVec(basis_.rank));
    for (std::size_t j = 0; j < basis_.rank; ++j)
        for (std::size_t k = 0; k < basis_.rank; ++k)
            if (basis_.x_basis[j].get(basis_.y_solution_rows[k])) q_rows_[j].set(k, true);
}

int ChiSolver::chi(const BoundaryConfig &cfg) const {
    if (cfg.x.size() != m_.rows() || cfg.y.size() != m_.cols())
        throw std::invalid_argument("chi: config size mismatch");
    // x must be orthogonal to ker(M^T), i.e. lie in the column space of M.
    for (const auto &k : ker_mt_)
        if (cfg.x.dot(k)) return 0;
    auto a = gf2::solve(mt_, cfg.y);
    if (!a) return 0;
    return cfg.x.dot(*a) ? -1 : 1;
}

ChiSolver make_chi_solver(const BoundaryLayout &layout) { return ChiSolver(layout); }

} // namespace negaspec
