#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "negaspec/chi.hpp"
#include "negaspec/stabilizer.hpp"

namespace negaspec {

// Dense density-matrix oracle. The states here are CSS stabilizer states
// under Pauli channels, so everything stays real symmetric.
struct DenseState {
    int n_qubits = 0;
    Eigen::MatrixXd rho;
};

// Normalized projector product prod_g (1 + g)/2 over all stabilizer generators.
DenseState ground_space_density(const StabilizerCode &code);

// Apply single-qubit Pauli channels to the listed qubits.
DenseState apply_channel(const DenseState &state, const NoiseModel &noise,
                         const std::vector<int> &qubits);

struct DenseNegativity {
    double e_n = 0.0;
    std::vector<double> spectrum; // descending eigenvalues of rho^Gamma
};

// Partial transpose over the qubits selected by mask_a, then exact symmetric
// eigensolve.
DenseNegativity negativity_dense(const DenseState &state, const gf2::BitVec &mask_a);

// Direct 2^{|R_A|+|R_B|} character sum for chi.
int chi_bruteforce(const BoundaryLayout &layout, const BoundaryConfig &cfg);

// psi recomputed from the actual Pauli product restricted to region A.
int psi_bruteforce(const BoundaryLayout &layout, const gf2::BitVec &a, const gf2::BitVec &b);

// Frozen fixture: the smallest 2d cylinder (extents 2x3, x periodic, y open,
// 10 qubits, cut between y-layers 1 and 2; boundary cut length L = 2).
struct Fixture {
    std::shared_ptr<const StabilizerCode> code;
    BoundaryLayout layout;
    gf2::BitVec cut_qubits; // qubits carrying the boundary noise
};
Fixture smallest_cylinder_fixture();

} // namespace negaspec
