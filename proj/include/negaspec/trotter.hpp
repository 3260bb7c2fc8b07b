#pragma once

namespace negaspec {

// Quantum-classical mapping check for the 2d toric code at L = 2 (8 edge
// qubits, dense dimension 256). The quantum side is tr[e^{bt H} G] with
// H = sum_p prod Z + Gamma sum_e X and Gauss projector G; the classical
// side is the M-slice Trotterized anisotropic Z2 gauge sum with couplings
// K_space = bt/M and K_time = -1/2 log tanh(bt Gamma / M).
struct TrotterResult {
    double quantum = 0.0;   // tr[e^{bt H} G]
    double classical = 0.0; // exact value of the M-slice classical sum
    double gap = 0.0;       // |classical - quantum| / max(|classical|, |quantum|)
    double k_space = 0.0;
    double k_time = 0.0;
};

TrotterResult trotter_check(double gamma, double beta_tilde, int m_steps, int length);

// Ground-state count of the Gauss-law sector at Gamma = 0 by dense
// diagonalization of the projected flat-sector overlap.
int gauss_sector_ground_count(int length);

} // namespace negaspec
