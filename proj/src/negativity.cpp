#include "negaspec/negativity.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace negaspec {

namespace {

void check_p(double p) {
    if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("p must lie in [0, 1/2]");
}

const char *kind_name(NoiseKind k) {
    switch (k) {
        case NoiseKind::Z: return "z";
        case NoiseKind::X: return "x";
        default: return "xz";
    }
}

} // namespace

NegativityReport negativity_2d_z(double p, int length) {
    check_p(p);
    if (length < 2) throw std::invalid_argument("length must be >= 2");
    NegativityReport r;
    r.d = 2;
    r.boundary_l = length;
    r.kind = NoiseKind::Z;
    r.p = p;
    r.beta = noise_to_beta(p);
    // p-parametrized forms avoid floating infinities at p = 1/2:
    // e^{-2 beta} = 1 - 2p, tanh beta = p/(1-p)
    r.alpha = std::log(2.0 - 2.0 * p);
    r.e_topo = std::log(2.0) - std::log1p(std::pow(p / (1.0 - p), length));
    r.e_n = r.alpha * length - r.e_topo;
    r.method = "closed-form";
    return r;
}

NegativityReport negativity_3d_z(double p, int length) {
    check_p(p);
    if (length < 2) throw std::invalid_argument("length must be >= 2");
    NegativityReport r;
    r.d = 3;
    r.boundary_l = length;
    r.kind = NoiseKind::Z;
    r.p = p;
    r.beta = noise_to_beta(p);
    r.alpha = std::log(2.0 - 2.0 * p);
    r.e_topo = std::log(2.0) -
               std::log1p(std::pow(p / (1.0 - p), static_cast<double>(length) * length));
    r.e_n = r.alpha * length * length - r.e_topo;
    r.method = "closed-form";
    return r;
}

NegativityReport negativity_3d_x(double p, int length) {
    check_p(p);
    if (length < 2 || length > 64)
        throw std::invalid_argument("negativity_3d_x: length in [2, 64]");
    if (p >= 0.5)
        throw std::invalid_argument("negativity_3d_x: p = 1/2 lies outside the exact path");
    NegativityReport r;
    r.d = 3;
    r.boundary_l = length;
    r.kind = NoiseKind::X;
    r.p = p;
    r.beta = noise_to_beta(p);
    auto z = logZ_ising2d(r.beta, length);
    double n2 = static_cast<double>(length) * length;
    r.alpha = *z.f - 2.0 * r.beta;
    r.e_n = z.log_z - z.log_z_restricted;
    r.e_topo = r.alpha * n2 - r.e_n;
    r.method = "statmech-exact";
    return r;
}

NegativityReport negativity_3d_x_thermo(double p) {
    check_p(p);
    NegativityReport r;
    r.d = 3;
    r.boundary_l = 0; // thermodynamic limit
    r.kind = NoiseKind::X;
    r.p = p;
    r.beta = noise_to_beta(p);
    r.alpha = (p < 0.5 ? ising2d_free_energy_density(r.beta) - 2.0 * r.beta
                       : -std::log(2.0)); // beta -> inf limit of f - 2 beta
    r.e_topo = r.beta < kIsing2dBetaC ? std::log(2.0) : 0.0;
    r.e_n = 0.0; // extensive part diverges; only E_topo is meaningful here
    r.method = "closed-form";
    return r;
}

NegativityReport negativity_4d_z(double p, int length, const McSchedule &sched,
                                 std::optional<double> beta_c) {
    check_p(p);
    if (length < 2) throw std::invalid_argument("length must be >= 2");
    if (p >= 0.5)
        throw std::invalid_argument("negativity_4d_z: p = 1/2 needs beta = inf, not MC-reachable");
    NegativityReport r;
    r.d = 4;
    r.boundary_l = length;
    r.kind = NoiseKind::Z;
    r.p = p;
    r.beta = noise_to_beta(p);
    r.seed = sched.seed;
    if (p == 0.0) {
        // exact by rank counting: logZ = 3L^3 log2, logZtilde = (L^3+2) log2
        double n3 = static_cast<double>(length) * length * length;
        r.e_n = (2.0 * n3 - 2.0) * std::log(2.0);
        r.alpha = 2.0 * std::log(2.0);
        r.e_topo = 2.0 * std::log(2.0);
        r.method = "closed-form";
        return r;
    }
    auto z = logZ_gauge3d_mc(r.beta, length, sched);
    if (!z.converged) throw std::runtime_error("negativity_4d_z: MC chains did not converge");
    r.e_n = z.log_z - z.log_z_restricted;
    r.stat_error = z.stat_error;
    double n3 = static_cast<double>(length) * length * length;
    r.alpha = r.e_n / n3; // finite-size effective density
    r.e_topo = beta_c ? (r.beta < *beta_c ? 2.0 * std::log(2.0) : 0.0) : 0.0;
    r.method = "statmech-mc";
    return r;
}

double p_from_beta(double beta_c) { return (1.0 - std::exp(-2.0 * beta_c)) / 2.0; }

double half_height_crossing_3d_x(int length) {
    // E_topo(p, L) falls from log2 at p = 0 toward 0 at p -> 1/2
    const double target = 0.5 * std::log(2.0);
    double lo = 0.0, hi = 0.5 - 1e-9;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (negativity_3d_x(mid, length).e_topo > target) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

ScanResult scan(NoiseKind kind, int d, const std::vector<int> &lengths,
                const std::vector<double> &p_grid, const McSchedule *sched) {
    ScanResult out;
    for (int length : lengths)
        for (double p : p_grid) {
            if (d == 2 && kind == NoiseKind::Z) out.reports.push_back(negativity_2d_z(p, length));
            else if (d == 3 && kind == NoiseKind::Z)
                out.reports.push_back(negativity_3d_z(p, length));
            else if (d == 3 && kind == NoiseKind::X)
                out.reports.push_back(negativity_3d_x(std::min(p, 0.5 - 1e-12), length));
            else if (d == 4 && kind == NoiseKind::Z) {
                if (!sched) throw std::invalid_argument("scan: 4d needs an MC schedule");
                out.reports.push_back(negativity_4d_z(p, length, *sched));
            } else {
                throw std::invalid_argument("scan: unsupported (d, noise) combination");
            }
        }

    if (d == 2 && kind == NoiseKind::Z) {
        out.p_c_half_height = 0.5; // E_topo stays log2 for every p < 1/2
    } else if (d == 3 && kind == NoiseKind::Z) {
        out.p_c_half_height = 0.5;
    } else if (d == 3 && kind == NoiseKind::X) {
        int lmax = 0;
        for (int length : lengths) lmax = std::max(lmax, length);
        out.p_c_half_height = half_height_crossing_3d_x(lmax);
        out.p_c_from_beta_c = p_from_beta(kIsing2dBetaC);
    } else if (d == 4 && sched) {
        auto ising = locate_beta_c(ModelFamily::ising3d, {4, 6, 8}, CriticalMethod::binder, *sched);
        out.p_c_from_beta_c = p_from_beta(duality_transform(ising.beta_c));
    }
    return out;
}

std::string reports_csv(const std::vector<NegativityReport> &reports) {
    std::string out = "d,L,noise,p,beta,E_N,alpha,E_topo,method,stat_error,seed\n";
    char buf[256];
    for (const auto &r : reports) {
        std::snprintf(buf, sizeof buf, "%d,%d,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%s,%.17g,%llu\n",
                      r.d, r.boundary_l, kind_name(r.kind), r.p, r.beta, r.e_n, r.alpha, r.e_topo,
                      r.method.c_str(), r.stat_error,
                      static_cast<unsigned long long>(r.seed));
        out += buf;
    }
    return out;
}

} // namespace negaspec
