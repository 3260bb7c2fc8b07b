#pragma once

#include <vector>

#include "negaspec/stabilizer.hpp"

namespace negaspec {

// A candidate boundary configuration: sign assignments over R_A and R_B,
// stored as bit vectors x = (1-A)/2, y = (1-B)/2.
struct BoundaryConfig {
    gf2::BitVec x; // over R_A
    gf2::BitVec y; // over R_B

    static BoundaryConfig all_plus(const BoundaryLayout &lo) {
        return {gf2::BitVec(lo.r_a.size()), gf2::BitVec(lo.r_b.size())};
    }
    int a_sign(std::size_t i) const { return x.get(i) ? -1 : 1; }
    int b_sign(std::size_t j) const { return y.get(j) ? -1 : 1; }
};

// GF(2) parametrization of the admissible (nonzero-chi) configurations.
// x ranges over the column space of M; y over the row space. The y basis
// vectors are independent rows of M, so unit vectors on those row indices
// are particular solutions of M^T a = y_k.
struct AdmissibleBasis {
    std::vector<gf2::BitVec> x_basis;          // span = admissible A-sector
    std::vector<gf2::BitVec> y_basis;          // span = admissible B-sector
    std::vector<std::size_t> y_solution_rows;  // a_k = e_{row}, M^T a_k = y_k
    std::size_t rank = 0;
};

// Evaluates the cluster-state strange-correlator sign chi(A,B) by GF(2)
// solve + sign. Kernel/row-space data is computed once per layout.
class ChiSolver {
  public:
    explicit ChiSolver(const BoundaryLayout &layout);

    // +1 / -1 for admissible configurations, 0 otherwise.
    int chi(const BoundaryConfig &cfg) const;

    const AdmissibleBasis &admissible_basis() const { return basis_; }

    // q[j][k] = <x_basis[j], a_k>; the chi sign of the config with
    // coefficient vectors (cx, cy) is (-1)^{cx^T Q cy}.
    const std::vector<gf2::BitVec> &sign_table() const { return q_rows_; }

  private:
    gf2::BitMat m_, mt_;
    std::vector<gf2::BitVec> ker_mt_; // kernel of M^T (A-sector constraints)
    AdmissibleBasis basis_;
    std::vector<gf2::BitVec> q_rows_; // rank x rank
};

ChiSolver make_chi_solver(const BoundaryLayout &layout);

} // namespace negaspec
