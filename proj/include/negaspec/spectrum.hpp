#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negaspec/chi.hpp"
#include "negaspec/stabilizer.hpp"

namespace negaspec {

struct SpectrumEntry {
    double lambda = 0.0;
    std::uint64_t multiplicity = 0;
    std::optional<BoundaryConfig> config; // one generating configuration
};

struct NegativitySpectrum {
    int d = 0;
    int boundary_l = 0;
    NoiseKind kind = NoiseKind::Z;
    double p_z = 0.0;
    double p_x = 0.0;
    double log_z = 0.0; // normalization constant
    std::vector<SpectrumEntry> entries; // sorted by descending lambda

    double trace_sum() const;
    double abs_sum() const;
    double log_abs_sum() const; // E_N
};

// Exact spectrum of rho^Gamma under boundary Z-noise: lambda(A,B) =
// chi(A,B) e^{beta_z sum_i A_i} / Z over admissible configs. p = 1/2 is the
// analytic limit (single eigenvalue 2^{-rank}, multiplicity 2^{rank}).
NegativitySpectrum spectrum_z(const BoundaryLayout &layout, const NoiseModel &noise);

// Same with the A/B roles exchanged: lambda(A,B) = chi e^{beta_x sum_j B_j}/Z.
NegativitySpectrum spectrum_x(const BoundaryLayout &layout, const NoiseModel &noise);

// Combined XZ noise, d = 2 only. Each eigenvalue carries an inner sum over
// auxiliary tau spins on the boundary cycle, evaluated by a 2x2 transfer
// matrix product. Requires p_z < 1/2 unless p_x = 0 (which dispatches to
// the pure-Z path).
NegativitySpectrum spectrum_xz_2d(const BoundaryLayout &layout, const NoiseModel &noise);

// CSV: one row per entry (lambda, multiplicity, config-bits-hex);
// JSON header: d, L, p_x, p_z, Z.
std::string spectrum_csv(const NegativitySpectrum &s);
std::string spectrum_json_header(const NegativitySpectrum &s);

} // namespace negaspec
