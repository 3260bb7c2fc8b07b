#include "negaspec/trotter.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "negaspec/complex.hpp"

namespace negaspec {

namespace {

struct Torus2 {
    std::shared_ptr<const CellComplex> cx;
    int n_edges = 0;
    std::vector<unsigned> plaq_masks;   // edge bitmasks of plaquette boundaries
    std::vector<unsigned> vertex_masks; // edge bitmasks of vertex stars
};

Torus2 build_torus(int length) {
    if (length != 2) throw std::invalid_argument("trotter: only L = 2 is dense-tractable");
    Torus2 t;
    t.cx = std::make_shared<CellComplex>(
        build_complex(2, {length, length}, {Bc::periodic, Bc::periodic}));
    t.n_edges = static_cast<int>(t.cx->cell_count(1));
    for (std::size_t p = 0; p < t.cx->cell_count(2); ++p) {
        unsigned m = 0;
        for (int e : t.cx->boundary(2, p)) m ^= 1u << e;
        t.plaq_masks.push_back(m);
    }
    for (std::size_t v = 0; v < t.cx->cell_count(0); ++v) {
        unsigned m = 0;
        for (int e : t.cx->coboundary(0, v)) m ^= 1u << e;
        t.vertex_masks.push_back(m);
    }
    return t;
}

// sum_p prod_{e in p} Z_e evaluated on basis state s (bit set = spin down)
double plaq_energy(const Torus2 &t, unsigned s) {
    double e = 0.0;
    for (unsigned m : t.plaq_masks) e += __builtin_parity(s & m) ? -1.0 : 1.0;
    return e;
}

Eigen::MatrixXd gauss_projector(const Torus2 &t) {
    const int dim = 1 << t.n_edges;
    const std::size_t nv = t.vertex_masks.size();
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
    const double w = 1.0 / (1 << nv);
    for (unsigned sub = 0; sub < (1u << nv); ++sub) {
        unsigned xmask = 0;
        for (std::size_t v = 0; v < nv; ++v)
            if ((sub >> v) & 1) xmask ^= t.vertex_masks[v];
        for (int c = 0; c < dim; ++c) g(c ^ xmask, c) += w;
    }
    return g;
}

} // namespace

TrotterResult trotter_check(double gamma, double beta_tilde, int m_steps, int length) {
    if (m_steps < 1 || m_steps > 8) throw std::invalid_argument("trotter: M in [1, 8]");
    if (gamma <= 0.0) throw std::invalid_argument("trotter: Gamma must be > 0 here");
    auto t = build_torus(length);
    const int dim = 1 << t.n_edges;

    // quantum side: H = sum_p prod Z + Gamma sum_e X
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int s = 0; s < dim; ++s) h(s, s) = plaq_energy(t, static_cast<unsigned>(s));
    for (int e = 0; e < t.n_edges; ++e)
        for (int s = 0; s < dim; ++s) h(s ^ (1 << e), s) += gamma;

    Eigen::MatrixXd g = gauss_projector(t);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    Eigen::MatrixXd gv = es.eigenvectors().transpose() * g * es.eigenvectors();
    double quantum = 0.0;
    for (int k = 0; k < dim; ++k)
        quantum += std::exp(beta_tilde * es.eigenvalues()(k)) * gv(k, k);

    // classical side: one Trotter slice as a transfer matrix over edge spins
    const double a = beta_tilde * gamma / m_steps;
    const double k_time = -0.5 * std::log(std::tanh(a));
    const double cfac = std::sqrt(std::cosh(a) * std::sinh(a));
    const std::size_t nv = t.vertex_masks.size();

    // per-edge vertex pair: edge e joins cell coord and coord+axis
    std::vector<std::array<int, 2>> edge_verts(t.n_edges);
    for (int e = 0; e < t.n_edges; ++e) {
        const Cell &c = t.cx->cell(1, e);
        int axis = __builtin_ctz(c.axes);
        auto c2 = c.coord;
        c2[axis] += 1;
        edge_verts[e] = {t.cx->cell_index(0, c.coord, 0), t.cx->cell_index(0, c2, 0)};
    }

    Eigen::MatrixXd tr_mat(dim, dim);
    const double slice_norm = std::pow(cfac, t.n_edges) / (1 << nv);
    for (int s = 0; s < dim; ++s) {
        double wz = std::exp(beta_tilde / m_steps * plaq_energy(t, static_cast<unsigned>(s)));
        for (int sp = 0; sp < dim; ++sp) {
            double acc = 0.0;
            for (unsigned lam = 0; lam < (1u << nv); ++lam) {
                double ex = 0.0;
                for (int e = 0; e < t.n_edges; ++e) {
                    double se = (s >> e) & 1 ? -1.0 : 1.0;
                    double spe = (sp >> e) & 1 ? -1.0 : 1.0;
                    double ll = ((lam >> edge_verts[e][0]) ^ (lam >> edge_verts[e][1])) & 1
                                    ? -1.0
                                    : 1.0;
                    ex += k_time * se * spe * ll;
                }
                acc += std::exp(ex);
            }
            tr_mat(s, sp) = wz * slice_norm * acc;
        }
    }

    Eigen::MatrixXd power = tr_mat;
    for (int k = 1; k < m_steps; ++k) power = power * tr_mat;
    double classical = power.trace();

    TrotterResult r;
    r.quantum = quantum;
    r.classical = classical;
    // symmetric relative difference; the two values can differ by orders of
    // magnitude at small M
    r.gap = std::fabs(classical - quantum) / std::max(std::fabs(classical), std::fabs(quantum));
    r.k_space = beta_tilde / m_steps;
    r.k_time = k_time;
    return r;
}

int gauss_sector_ground_count(int length) {
    auto t = build_torus(length);
    const int dim = 1 << t.n_edges;
    Eigen::MatrixXd g = gauss_projector(t);
    const double e_max = static_cast<double>(t.plaq_masks.size());
    Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(dim, dim);
    for (int s = 0; s < dim; ++s)
        if (plaq_energy(t, static_cast<unsigned>(s)) == e_max) proj(s, s) = 1.0;
    Eigen::MatrixXd k = proj * g * proj;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
    int count = 0;
    for (int i = 0; i < dim; ++i)
        if (es.eigenvalues()(i) > 0.5) ++count;
    return count;
}

} // namespace negaspec
