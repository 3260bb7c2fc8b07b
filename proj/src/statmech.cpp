#include "negaspec/statmech.hpp"

#include <cmath>
#include <stdexcept>

#include "negaspec/complex.hpp"

namespace negaspec {

namespace {

// log(2 cosh x), overflow-safe
double l2cosh(double x) {
    x = std::fabs(x);
    return x + std::log1p(std::exp(-2.0 * x));
}

// log(2 sinh x) for x > 0
double l2sinh(double x) { return x + std::log1p(-std::exp(-2.0 * x)); }

} // namespace

StatMechModel ising_chain(int length, double beta) {
    if (length < 2) throw std::invalid_argument("length must be >= 2");
    StatMechModel m{length, {}, beta};
    for (int i = 0; i < length; ++i) m.terms.push_back({{i, (i + 1) % length}, 1.0});
    return m;
}

StatMechModel ising_square(int length, double beta) {
    if (length < 2) throw std::invalid_argument("length must be >= 2");
    StatMechModel m{length * length, {}, beta};
    auto id = [length](int x, int y) {
        return ((x % length + length) % length) * length + (y % length + length) % length;
    };
    for (int x = 0; x < length; ++x)
        for (int y = 0; y < length; ++y) {
            m.terms.push_back({{id(x, y), id(x + 1, y)}, 1.0});
            m.terms.push_back({{id(x, y), id(x, y + 1)}, 1.0});
        }
    return m;
}

StatMechModel gauge_square(int length, double beta) {
    auto cx = build_complex(2, {length, length}, {Bc::periodic, Bc::periodic});
    StatMechModel m{static_cast<int>(cx.cell_count(1)), {}, beta};
    for (std::size_t v = 0; v < cx.cell_count(0); ++v)
        m.terms.push_back({cx.coboundary(0, v), 1.0});
    return m;
}

StatMechModel gauge_cubic(int length, double beta) {
    auto cx = build_complex(3, {length, length, length},
                            {Bc::periodic, Bc::periodic, Bc::periodic});
    StatMechModel m{static_cast<int>(cx.cell_count(1)), {}, beta};
    for (std::size_t f = 0; f < cx.cell_count(2); ++f)
        m.terms.push_back({cx.boundary(2, f), 1.0});
    return m;
}

StatMechModel model_from_layout(const BoundaryLayout &layout, NoiseKind kind, double beta) {
    StatMechModel m;
    m.beta = beta;
    if (kind == NoiseKind::Z) {
        // spins tau on R_B, one term per i in R_A: prod_{j adjacent} tau_j
        m.n_spins = static_cast<int>(layout.r_b.size());
        for (std::size_t i = 0; i < layout.r_a.size(); ++i) {
            SpinTerm t;
            for (std::size_t j = 0; j < layout.r_b.size(); ++j)
                if (layout.m.get(i, j)) t.spins.push_back(static_cast<int>(j));
            m.terms.push_back(std::move(t));
        }
    } else if (kind == NoiseKind::X) {
        m.n_spins = static_cast<int>(layout.r_a.size());
        for (std::size_t j = 0; j < layout.r_b.size(); ++j) {
            SpinTerm t;
            for (std::size_t i = 0; i < layout.r_a.size(); ++i)
                if (layout.m.get(i, j)) t.spins.push_back(static_cast<int>(i));
            m.terms.push_back(std::move(t));
        }
    } else {
        throw std::invalid_argument("model_from_layout: kind must be Z or X");
    }
    return m;
}

PartitionResult logZ_enumerate(const StatMechModel &m) {
    if (m.n_spins > 24) throw std::invalid_argument("logZ_enumerate: spin count exceeds 24");
    const int n = m.n_spins;
    const std::size_t nt = m.terms.size();

    std::vector<std::vector<int>> terms_of_spin(n);
    for (std::size_t t = 0; t < nt; ++t)
        for (int s : m.terms[t].spins) terms_of_spin[s].push_back(static_cast<int>(t));

    double e_max = 0.0;
    for (const auto &t : m.terms) e_max += std::fabs(t.coeff);
    e_max *= m.beta;

    std::vector<double> prod(nt);
    double energy = 0.0;
    for (std::size_t t = 0; t < nt; ++t) {
        prod[t] = m.terms[t].coeff; // all spins up
        energy += m.beta * prod[t];
    }
    double sum = 0.0, comp = 0.0;
    auto add = [&](double v) { // Kahan
        double y = v - comp;
        double t2 = sum + y;
        comp = (t2 - sum) - y;
        sum = t2;
    };
    add(std::exp(energy - e_max));

    const std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        int s = __builtin_ctzll(i); // Gray code flip position
        for (int t : terms_of_spin[s]) {
            energy -= 2.0 * m.beta * prod[t];
            prod[t] = -prod[t];
        }
        add(std::exp(energy - e_max));
    }

    PartitionResult r;
    r.method = Method::enumeration;
    r.log_z = e_max + std::log(sum);
    r.log_sector_count = restricted_log_sector_count(m);
    r.log_z_restricted = restricted_logZ(m);
    return r;
}

PartitionResult logZ_ising1d(double beta, int length) {
    if (length < 2) throw std::invalid_argument("length must be >= 2");
    if (beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    PartitionResult r;
    r.method = Method::transfer;
    if (std::isinf(beta)) {
        r.log_z = std::numeric_limits<double>::infinity();
    } else {
        double t = std::tanh(beta);
        r.log_z = length * l2cosh(beta) + std::log1p(std::pow(t, length));
    }
    r.log_sector_count = std::log(2.0);
    r.log_z_restricted = std::log(2.0) + beta * length;
    r.f = l2cosh(beta); // log(2 cosh beta) per site
    return r;
}

double ising2d_free_energy_density(double beta) {
    if (beta == 0.0) return std::log(2.0);
    const double s = std::sinh(2.0 * beta);
    const double c2 = std::cosh(2.0 * beta);
    // inner angular average done in closed form:
    // (1/2pi) int log(C - s cos t) dt = log[(C + sqrt(C^2 - s^2)) / 2]
    auto g = [&](double th) {
        double C = c2 * c2 - s * std::cos(th);
        double disc = C * C - s * s;
        if (disc < 0.0) disc = 0.0;
        return std::log(0.5 * (C + std::sqrt(disc)));
    };
    // periodic trapezoid with doubling; integrand symmetric about pi
    double prev = 0.0, integral = 0.0;
    for (int npts = 64; npts <= (1 << 21); npts *= 2) {
        double h = 2.0 * M_PI / npts;
        double acc = 0.0;
        for (int i = 0; i < npts; ++i) acc += g(i * h);
        integral = acc * h;
        if (npts > 64 && std::fabs(integral - prev) < 1e-12 * std::max(1.0, std::fabs(integral)))
            break;
        prev = integral;
    }
    return std::log(2.0) + integral / (4.0 * M_PI);
}

PartitionResult logZ_ising2d(double beta, int length) {
    if (length < 2) throw std::invalid_argument("length must be >= 2");
    if (beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    const int L = length;
    PartitionResult r;
    r.method = Method::kaufman;
    r.log_sector_count = std::log(2.0);
    r.log_z_restricted = std::log(2.0) + 2.0 * beta * L * L;

    if (beta == 0.0) {
        r.log_z = L * L * std::log(2.0);
        r.f = std::log(2.0);
        return r;
    }

    const double K = beta;
    const double s2 = std::sinh(2.0 * K);
    const double c2 = std::cosh(2.0 * K);
    const double base = c2 * c2 / s2;

    // gamma_r: cosh(gamma_r) = cosh2K coth2K - cos(pi r / L); gamma_0 is
    // taken with its sign, gamma_0 = 2K + log(tanh K).
    auto gamma = [&](int rr) {
        if (rr == 0) return 2.0 * K + std::log(std::tanh(K));
        double ch = base - std::cos(M_PI * rr / L);
        if (ch < 1.0) ch = 1.0;
        return std::acosh(ch);
    };

    double lp1 = 0.0, lp2 = 0.0, lp3 = 0.0, lp4 = 0.0;
    int sign4 = 1;
    bool p4_zero = false;
    for (int rr = 0; rr < L; ++rr) {
        double go = gamma(2 * rr + 1);
        lp1 += l2cosh(0.5 * L * go);
        lp2 += l2sinh(0.5 * L * go);
        double ge = gamma(2 * rr);
        lp3 += l2cosh(0.5 * L * ge);
        if (ge == 0.0) {
            p4_zero = true;
        } else {
            if (ge < 0.0) { sign4 = -sign4; ge = -ge; }
            lp4 += l2sinh(0.5 * L * ge);
        }
    }

    // signed log-sum-exp of the four spin-structure terms
    double mx = std::max(std::max(lp1, lp2), lp3);
    if (!p4_zero) mx = std::max(mx, lp4);
    double acc = std::exp(lp1 - mx) + std::exp(lp2 - mx) + std::exp(lp3 - mx);
    if (!p4_zero) acc += sign4 * std::exp(lp4 - mx);
    r.log_z = -std::log(2.0) + 0.5 * L * L * std::log(2.0 * s2) + mx + std::log(acc);
    r.f = ising2d_free_energy_density(beta);
    return r;
}

PartitionResult logZ_gauge2d(double beta, int length) {
    if (length < 2) throw std::invalid_argument("length must be >= 2");
    if (beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    const int L = length;
    PartitionResult r;
    r.method = Method::closed_form;
    // Vertex-star products range over the even-parity sector with uniform
    // preimage multiplicity 2^{L^2+1}.
    r.log_z = L * L * std::log(2.0) + L * L * l2cosh(beta) +
              std::log1p(std::pow(std::tanh(beta), L * L));
    r.log_sector_count = (L * L + 1) * std::log(2.0);
    r.log_z_restricted = r.log_sector_count + beta * L * L;
    return r;
}

double restricted_log_sector_count(const StatMechModel &m) {
    gf2::BitMat t(m.terms.size(), m.n_spins);
    for (std::size_t i = 0; i < m.terms.size(); ++i)
        for (int s : m.terms[i].spins) t.row(i).flip(s);
    return (m.n_spins - static_cast<double>(gf2::rank(t))) * std::log(2.0);
}

double restricted_logZ(const StatMechModel &m) {
    double coeff_sum = 0.0;
    for (const auto &t : m.terms) coeff_sum += t.coeff;
    return restricted_log_sector_count(m) + m.beta * coeff_sum;
}

double duality_transform(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("duality_transform: beta must be > 0");
    return -0.5 * std::log(std::tanh(beta));
}

} // namespace negaspec
