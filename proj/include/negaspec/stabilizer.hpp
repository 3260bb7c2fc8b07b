#pragma once

#include <memory>
#include <vector>

#include "negaspec/complex.hpp"
#include "negaspec/pauli.hpp"

namespace negaspec {

// Toric code on a cell complex. Qubits live on q-cells (q = 1 for d = 2,3;
// q = 2 for d = 4). A-type generators are Z-products on the coboundary of
// each (q-1)-cell; B-type generators are X-products on the boundary of each
// (q+1)-cell.
struct StabilizerCode {
    std::shared_ptr<const CellComplex> complex;
    int qubit_cell_dim = 1;
    std::size_t n_qubits = 0;
    std::vector<PauliString> a_gens; // Z-type, indexed by (q-1)-cells
    std::vector<PauliString> b_gens; // X-type, indexed by (q+1)-cells
};

StabilizerCode build_toric_code(std::shared_ptr<const CellComplex> cx);

// Flat codimension-1 cut between layers `offset` and `offset+1` along the
// (open) cut axis. Non-contractible: it winds all periodic axes.
struct Cut {
    int axis = 0;
    int offset = 0;
};

struct BoundaryLayout {
    std::shared_ptr<const StabilizerCode> code;
    Cut cut;
    std::vector<int> r_a;  // indices of boundary A-generators
    std::vector<int> r_b;  // indices of boundary B-generators
    gf2::BitMat m;         // |R_A| x |R_B|; parity of Y-count of A_i B_j in region A
    gf2::BitVec region_a;  // qubit bipartition masks
    gf2::BitVec region_b;
    gf2::BitVec set_m;     // Pauli-Z-decohered qubits
    gf2::BitVec set_k;     // Pauli-X-decohered qubits
};

BoundaryLayout boundary_layout(std::shared_ptr<const StabilizerCode> code, Cut cut);

// (-1)^{a^T M b}: the partial-transpose sign of the boundary stabilizer
// string selected by (a, b).
int psi_sign(const BoundaryLayout &layout, const gf2::BitVec &a, const gf2::BitVec &b);

enum class NoiseKind { Z, X, XZ };

// Number of decohered-qubit Paulis in the stabilizer product selected by
// `config` (over R_B for kind Z, over R_A for kind X).
std::size_t noise_weight(const BoundaryLayout &layout, NoiseKind kind, const gf2::BitVec &config);

// beta = -1/2 log(1 - 2p); p = 1/2 maps to +infinity.
double noise_to_beta(double p);
double beta_to_noise(double beta);

struct NoiseModel {
    NoiseKind kind = NoiseKind::Z;
    double p_z = 0.0;
    double p_x = 0.0;

    double beta_z() const { return noise_to_beta(p_z); }
    double beta_x() const { return noise_to_beta(p_x); }
    // K_x = -1/2 log(tanh beta_x); diverges as p_x -> 0.
    double k_x() const;
};

} // namespace negaspec
