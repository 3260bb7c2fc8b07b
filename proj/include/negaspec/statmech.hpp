#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negaspec/gf2.hpp"
#include "negaspec/stabilizer.hpp"

namespace negaspec {

// Ising-spin energy function: E(s)/beta = sum_t coeff_t * prod_{i in t} s_i,
// Boltzmann weight exp(beta * sum_t ...). Coefficients default to 1; the
// quantum-classical mapping uses anisotropic couplings.
struct SpinTerm {
    std::vector<int> spins;
    double coeff = 1.0;
};

struct StatMechModel {
    int n_spins = 0;
    std::vector<SpinTerm> terms;
    double beta = 0.0;
};

enum class Method { enumeration, transfer, closed_form, kaufman, monte_carlo };

struct PartitionResult {
    double log_z = 0.0;
    double log_z_restricted = 0.0; // all terms clamped to their ground value
    double log_sector_count = 0.0; // log of the ground-state degeneracy
    Method method = Method::enumeration;
    double stat_error = 0.0;
    std::optional<double> f;      // bulk free-energy density (thermodynamic limit)
    std::optional<double> log_g;  // subleading constant, when assigned
    std::uint64_t seed = 0;
    bool converged = true; // false when MC chains disagree beyond 5 sigma
};

// ---- model builders ----
StatMechModel ising_chain(int length, double beta);          // periodic 1d Ising
StatMechModel ising_square(int length, double beta);         // periodic L x L Ising
StatMechModel gauge_square(int length, double beta);         // spins on edges, vertex-star terms
StatMechModel gauge_cubic(int length, double beta);          // spins on edges, face terms
// Model read off a boundary layout: spins on R_B (kind Z) or R_A (kind X),
// one term per row/column of the adjacency matrix M.
StatMechModel model_from_layout(const BoundaryLayout &layout, NoiseKind kind, double beta);

// ---- exact evaluations ----
// Brute force over 2^n configurations (n <= 24), log-sum-exp arithmetic.
PartitionResult logZ_enumerate(const StatMechModel &m);

// 1d Ising ring: logZ = log[(2 cosh b)^L + (2 sinh b)^L].
PartitionResult logZ_ising1d(double beta, int length);

// Finite L x L periodic-torus 2d Ising via the exact product formula,
// plus the thermodynamic free-energy density via the Onsager integral.
PartitionResult logZ_ising2d(double beta, int length);
double ising2d_free_energy_density(double beta); // f such that logZ -> L^2 f + log g

// 2d Z2 gauge theory on the torus: exact by change of variables.
PartitionResult logZ_gauge2d(double beta, int length);

// logZtilde = (n_spins - rank) log 2 + beta * sum_t coeff_t.
double restricted_logZ(const StatMechModel &m);
double restricted_log_sector_count(const StatMechModel &m);

// Kramers-Wannier-type map tanh(beta*) = exp(-2 beta).
double duality_transform(double beta);

inline constexpr double kIsing2dBetaC = 0.44068679350977147; // log(1+sqrt(2))/2

} // namespace negaspec
