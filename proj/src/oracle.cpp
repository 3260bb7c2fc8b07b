#include "negaspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace negaspec {

namespace {

// (S * M)[r, c] = (-1)^{z . (r^x)} M[r^x, c] for a CSS Pauli S = X(x) Z(z)
void left_apply_pauli(Eigen::MatrixXd &m, std::uint64_t xmask, std::uint64_t zmask,
                      Eigen::MatrixXd &scratch) {
    const int dim = static_cast<int>(m.rows());
    for (int r = 0; r < dim; ++r) {
        int src = static_cast<int>(r ^ xmask);
        double sign = __builtin_parityll(zmask & static_cast<std::uint64_t>(src)) ? -1.0 : 1.0;
        scratch.row(r) = sign * m.row(src);
    }
    m.swap(scratch);
}

std::uint64_t low_mask(const gf2::BitVec &v) {
    return v.words().empty() ? 0 : v.words()[0];
}

} // namespace

DenseState ground_space_density(const StabilizerCode &code) {
    if (code.n_qubits > 12) throw std::invalid_argument("ground_space_density: > 12 qubits");
    const int dim = 1 << code.n_qubits;
    DenseState st;
    st.n_qubits = static_cast<int>(code.n_qubits);
    st.rho = Eigen::MatrixXd::Identity(dim, dim);
    Eigen::MatrixXd scratch(dim, dim), tmp(dim, dim);
    auto project = [&](const PauliString &g) {
        if (g.y_count() != 0) throw std::invalid_argument("ground_space_density: CSS only");
        tmp = st.rho;
        left_apply_pauli(tmp, low_mask(g.x), low_mask(g.z), scratch);
        st.rho = 0.5 * (st.rho + tmp);
    };
    for (const auto &g : code.a_gens) project(g);
    for (const auto &g : code.b_gens) project(g);
    st.rho /= st.rho.trace();
    return st;
}

DenseState apply_channel(const DenseState &state, const NoiseModel &noise,
                         const std::vector<int> &qubits) {
    DenseState out = state;
    const int dim = static_cast<int>(out.rho.rows());
    auto apply_z = [&](int q, double p) {
        if (p == 0.0) return;
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                if (((r >> q) ^ (c >> q)) & 1) out.rho(r, c) *= 1.0 - 2.0 * p;
    };
    auto apply_x = [&](int q, double p) {
        if (p == 0.0) return;
        Eigen::MatrixXd flipped(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                flipped(r, c) = out.rho(r ^ (1 << q), c ^ (1 << q));
        out.rho = (1.0 - p) * out.rho + p * flipped;
    };
    for (int q : qubits) {
        if (noise.kind == NoiseKind::Z || noise.kind == NoiseKind::XZ) apply_z(q, noise.p_z);
        if (noise.kind == NoiseKind::X || noise.kind == NoiseKind::XZ) apply_x(q, noise.p_x);
    }
    return out;
}

DenseNegativity negativity_dense(const DenseState &state, const gf2::BitVec &mask_a) {
    const int dim = static_cast<int>(state.rho.rows());
    const std::uint64_t a = low_mask(mask_a);
    Eigen::MatrixXd pt(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            int rp = static_cast<int>((r & ~a) | (c & a));
            int cp = static_cast<int>((c & ~a) | (r & a));
            pt(r, c) = state.rho(rp, cp);
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pt);
    DenseNegativity out;
    out.spectrum.assign(es.eigenvalues().data(), es.eigenvalues().data() + dim);
    std::sort(out.spectrum.rbegin(), out.spectrum.rend());
    double abs_sum = 0.0;
    for (double v : out.spectrum) abs_sum += std::fabs(v);
    out.e_n = std::log(abs_sum);
    return out;
}

int chi_bruteforce(const BoundaryLayout &layout, const BoundaryConfig &cfg) {
    const std::size_t na = layout.r_a.size(), nb = layout.r_b.size();
    if (na + nb > 20) throw std::invalid_argument("chi_bruteforce: config space exceeds 2^20");
    std::vector<std::uint64_t> rows(na);
    for (std::size_t i = 0; i < na; ++i) rows[i] = low_mask(layout.m.row(i));
    const std::uint64_t x = low_mask(cfg.x), y = low_mask(cfg.y);

    long long num = 0, den = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t(1) << nb); ++b) {
        std::uint64_t mb = 0;
        for (std::size_t i = 0; i < na; ++i)
            if (__builtin_parityll(rows[i] & b)) mb |= std::uint64_t(1) << i;
        if (mb == 0) ++den;
        if (mb == x) num += __builtin_parityll(y & b) ? -1 : 1;
    }
    if (num == 0) return 0;
    if (num != den && num != -den)
        throw std::logic_error("chi_bruteforce: character sum is not a pure sign");
    return num > 0 ? 1 : -1;
}

int psi_bruteforce(const BoundaryLayout &layout, const gf2::BitVec &a, const gf2::BitVec &b) {
    PauliString p = PauliString::identity(layout.code->n_qubits);
    for (std::size_t i = 0; i < layout.r_a.size(); ++i)
        if (a.get(i)) p = p * layout.code->a_gens[layout.r_a[i]];
    for (std::size_t j = 0; j < layout.r_b.size(); ++j)
        if (b.get(j)) p = p * layout.code->b_gens[layout.r_b[j]];
    return p.restricted(layout.region_a).y_count() % 2 ? -1 : 1;
}

Fixture smallest_cylinder_fixture() {
    auto cx = std::make_shared<CellComplex>(
        build_complex(2, {2, 3}, {Bc::periodic, Bc::open}));
    auto code = std::make_shared<StabilizerCode>(build_toric_code(cx));
    Fixture f{code, boundary_layout(code, Cut{1, 1}), gf2::BitVec(code->n_qubits)};
    for (std::size_t q = 0; q < code->n_qubits; ++q)
        if (f.layout.set_m.get(q) || f.layout.set_k.get(q)) f.cut_qubits.set(q, true);
    return f;
}

} // namespace negaspec
