#include "negaspec/stabilizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace negaspec {

StabilizerCode build_toric_code(std::shared_ptr<const CellComplex> cx) {
    const int d = cx->dim();
    StabilizerCode code;
    code.complex = cx;
    code.qubit_cell_dim = (d == 4) ? 2 : 1;
    const int q = code.qubit_cell_dim;
    code.n_qubits = cx->cell_count(q);

    code.a_gens.reserve(cx->cell_count(q - 1));
    for (std::size_t i = 0; i < cx->cell_count(q - 1); ++i) {
        PauliString p = PauliString::identity(code.n_qubits);
        for (int qb : cx->coboundary(q - 1, i)) p.z.set(qb, true);
        code.a_gens.push_back(std::move(p));
    }
    code.b_gens.reserve(cx->cell_count(q + 1));
    for (std::size_t j = 0; j < cx->cell_count(q + 1); ++j) {
        PauliString p = PauliString::identity(code.n_qubits);
        for (int qb : cx->boundary(q + 1, j)) p.x.flip(qb);
        code.b_gens.push_back(std::move(p));
    }
    return code;
}

BoundaryLayout boundary_layout(std::shared_ptr<const StabilizerCode> code, Cut cut) {
    const CellComplex &cx = *code->complex;
    const int d = cx.dim();
    if (cut.axis < 0 || cut.axis >= d) throw std::invalid_argument("cut axis out of range");
    if (cx.bcs()[cut.axis] != Bc::open)
        throw std::invalid_argument("cut must lie along the open axis (non-contractible flat cut)");
    for (int a = 0; a < d; ++a)
        if (a != cut.axis && cx.bcs()[a] != Bc::periodic)
            throw std::invalid_argument("all non-cut axes must be periodic");
    if (cut.offset < 0 || cut.offset >= cx.extents()[cut.axis] - 1)
        throw std::invalid_argument("cut offset out of range");

    BoundaryLayout lo;
    lo.code = code;
    lo.cut = cut;

    const int q = code->qubit_cell_dim;
    const std::size_t n = code->n_qubits;

    // Bipartition. A qubit cell crossing the cut (spanning the cut axis at
    // the cut offset) goes to region B.
    lo.region_a = gf2::BitVec(n);
    lo.region_b = gf2::BitVec(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Cell &c = cx.cell(q, i);
        bool spans = (c.axes >> cut.axis) & 1;
        int w = c.coord[cut.axis];
        bool in_a = spans ? (w < cut.offset) : (w <= cut.offset);
        (in_a ? lo.region_a : lo.region_b).set(i, true);
    }

    // Boundary stabilizers: support intersects both regions.
    auto straddles = [&](const PauliString &p) {
        gf2::BitVec supp = p.x;
        supp.xor_with(p.z);
        supp.xor_with(p.x.and_with(p.z)); // union of x and z supports
        return supp.and_with(lo.region_a).any() && supp.and_with(lo.region_b).any();
    };
    for (std::size_t i = 0; i < code->a_gens.size(); ++i)
        if (straddles(code->a_gens[i])) lo.r_a.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < code->b_gens.size(); ++j)
        if (straddles(code->b_gens[j])) lo.r_b.push_back(static_cast<int>(j));
    if (lo.r_a.empty() || lo.r_b.empty())
        throw std::invalid_argument("cut intersects no stabilizer");

    // M from Y-counts of A_i B_j restricted to region A. A-generators are
    // pure Z and B-generators pure X, so Ys sit exactly on the overlap.
    lo.m = gf2::BitMat(lo.r_a.size(), lo.r_b.size());
    for (std::size_t i = 0; i < lo.r_a.size(); ++i) {
        const PauliString &ai = code->a_gens[lo.r_a[i]];
        for (std::size_t j = 0; j < lo.r_b.size(); ++j) {
            const PauliString &bj = code->b_gens[lo.r_b[j]];
            std::size_t ny = (ai * bj).restricted(lo.region_a).y_count();
            lo.m.set(i, j, ny & 1);
        }
    }

    // Decohered qubit sets. set_m: qubits whose Pauli-Z excites >= 2
    // B-stabilizers, all of them boundary ones (and dually for set_k).
    std::vector<char> in_rb(code->b_gens.size(), 0), in_ra(code->a_gens.size(), 0);
    for (int j : lo.r_b) in_rb[j] = 1;
    for (int i : lo.r_a) in_ra[i] = 1;
    lo.set_m = gf2::BitVec(n);
    lo.set_k = gf2::BitVec(n);
    for (std::size_t qb = 0; qb < n; ++qb) {
        int nb = 0, nb_bd = 0;
        for (std::size_t j = 0; j < code->b_gens.size(); ++j)
            if (code->b_gens[j].x.get(qb)) { ++nb; nb_bd += in_rb[j]; }
        if (nb >= 2 && nb == nb_bd) lo.set_m.set(qb, true);
        int na = 0, na_bd = 0;
        for (std::size_t i = 0; i < code->a_gens.size(); ++i)
            if (code->a_gens[i].z.get(qb)) { ++na; na_bd += in_ra[i]; }
        if (na >= 2 && na == na_bd) lo.set_k.set(qb, true);
    }
    return lo;
}

int psi_sign(const BoundaryLayout &layout, const gf2::BitVec &a, const gf2::BitVec &b) {
    if (a.size() != layout.m.rows() || b.size() != layout.m.cols())
        throw std::invalid_argument("psi_sign: config size mismatch");
    return a.dot(layout.m.mul(b)) ? -1 : 1;
}

std::size_t noise_weight(const BoundaryLayout &layout, NoiseKind kind, const gf2::BitVec &config) {
    const StabilizerCode &code = *layout.code;
    if (kind == NoiseKind::Z) {
        if (config.size() != layout.r_b.size())
            throw std::invalid_argument("noise_weight: config size mismatch");
        gf2::BitVec xmask(code.n_qubits);
        for (std::size_t j = 0; j < layout.r_b.size(); ++j)
            if (config.get(j)) xmask.xor_with(code.b_gens[layout.r_b[j]].x);
        return xmask.and_with(layout.set_m).popcount();
    }
    if (kind == NoiseKind::X) {
        if (config.size() != layout.r_a.size())
            throw std::invalid_argument("noise_weight: config size mismatch");
        gf2::BitVec zmask(code.n_qubits);
        for (std::size_t i = 0; i < layout.r_a.size(); ++i)
            if (config.get(i)) zmask.xor_with(code.a_gens[layout.r_a[i]].z);
        return zmask.and_with(layout.set_k).popcount();
    }
    throw std::invalid_argument("noise_weight: kind must be Z or X");
}

double noise_to_beta(double p) {
    if (!(p >= 0.0) || p > 0.5)
        throw std::invalid_argument("noise rate must lie in [0, 1/2]");
    if (p == 0.5) return std::numeric_limits<double>::infinity();
    return -0.5 * std::log1p(-2.0 * p);
}

double beta_to_noise(double beta) {
    if (std::isinf(beta)) return 0.5;
    return 0.5 * (1.0 - std::exp(-2.0 * beta));
}

double NoiseModel::k_x() const {
    double bx = beta_x();
    if (bx == 0.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(bx)) return 0.0;
    return -0.5 * std::log(std::tanh(bx));
}

} // namespace negaspec
