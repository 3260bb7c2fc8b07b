#pragma once

#include <cstdint>
#include <vector>

#include "negaspec/statmech.hpp"

namespace negaspec {

struct McSchedule {
    int n_beta = 64;            // trapezoidal grid points for thermodynamic integration
    int sweeps = 4000;          // measurement sweeps per chain
    int thermalization = 1000;  // discarded sweeps
    int chains = 2;
    std::uint64_t seed = 12345;
};

struct McSample {
    double mean = 0.0;
    double error = 0.0;     // blocked jackknife
    bool converged = true;  // chain means within 5 sigma of each other
};

// Sample mean of the energy sum E = sum_t c_t prod(s) at the model's beta,
// Metropolis single-spin-flip. `stream` separates RNG streams per chain/grid point.
McSample mc_mean_energy(const StatMechModel &m, const McSchedule &sched, std::uint64_t stream);

// Same sampler also recording the Binder cumulant U = 1 - <m^4>/(3<m^2>^2).
McSample mc_binder(const StatMechModel &m, const McSchedule &sched, std::uint64_t stream);

// logZ(beta) = n_spins log2 + int_0^beta <E>_{beta'} dbeta' over a trapezoidal
// grid. `build` produces the model at a given beta.
PartitionResult logZ_mc(StatMechModel (*build)(int, double), int length, double beta,
                        const McSchedule &sched);

PartitionResult logZ_gauge3d_mc(double beta, int length, const McSchedule &sched);

enum class ModelFamily { ising2d, ising3d, gauge3d };
enum class CriticalMethod { specific_heat, binder };

struct CriticalEstimate {
    double beta_c = 0.0;
    double error = 0.0;
    std::vector<double> per_size; // peak/crossing locations feeding the estimate
    Method method = Method::monte_carlo;
    std::uint64_t seed = 0;
};

// 2d Ising: exact specific-heat peak (no MC). 3d Ising: Binder crossings.
// 3d gauge: specific-heat (energy variance) peak.
CriticalEstimate locate_beta_c(ModelFamily family, const std::vector<int> &sizes,
                               CriticalMethod method, const McSchedule &sched);

StatMechModel ising_cubic(int length, double beta); // periodic L^3 Ising

} // namespace negaspec
