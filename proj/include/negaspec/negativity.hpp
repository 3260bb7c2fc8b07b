#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negaspec/mc.hpp"
#include "negaspec/stabilizer.hpp"

namespace negaspec {

struct NegativityReport {
    int d = 0;
    int boundary_l = 0;
    NoiseKind kind = NoiseKind::Z;
    double p = 0.0;
    double beta = 0.0;
    double e_n = 0.0;
    double alpha = 0.0;
    double e_topo = 0.0;
    std::string method; // closed-form | statmech-exact | statmech-mc | spectrum-enumeration | oracle
    double stat_error = 0.0;
    std::uint64_t seed = 0;
};

// 2d toric code, Z noise on the cut: E_N = alpha L - E_topo with
// alpha = log(1 + e^{-2 beta}) = log(2 - 2p) and
// E_topo = log2 - log(1 + tanh^L beta); tanh beta = p/(1-p).
NegativityReport negativity_2d_z(double p, int length);

// 3d, Z noise: 2d gauge-theory mapping, L^2 scaling of the area term.
NegativityReport negativity_3d_z(double p, int length);

// 3d, X noise: exact finite-torus 2d Ising (L <= 64). E_topo is measured
// against the thermodynamic area density: E_topo = L^2 f(beta) + log2 - logZ_L.
NegativityReport negativity_3d_x(double p, int length);

// 3d, X noise, thermodynamic limit: step function assigned by phase.
NegativityReport negativity_3d_x_thermo(double p);

// 4d, Z noise: 3d gauge theory; MC path for L >= 3, exact enumeration viable
// only at L = 2 (handled by callers via logZ_enumerate). E_topo is assigned
// by phase when a located beta_c is supplied.
NegativityReport negativity_4d_z(double p, int length, const McSchedule &sched,
                                 std::optional<double> beta_c = std::nullopt);

struct ScanResult {
    std::vector<NegativityReport> reports;
    std::optional<double> p_c_half_height; // largest-L half-height crossing of E_topo
    std::optional<double> p_c_from_beta_c; // (1 - e^{-2 beta_c})/2 when beta_c is known
};

ScanResult scan(NoiseKind kind, int d, const std::vector<int> &lengths,
                const std::vector<double> &p_grid, const McSchedule *sched = nullptr);

// Half-height crossing p where E_topo(p, L) = E_topo(0, L)/2, by bisection.
double half_height_crossing_3d_x(int length);

double p_from_beta(double beta_c); // (1 - e^{-2 beta})/2

std::string reports_csv(const std::vector<NegativityReport> &reports);

} // namespace negaspec
