#pragma once

#include <cstdint>

#include "negaspec/gf2.hpp"

namespace negaspec {

// Pauli string P = i^phase * X(xmask) * Z(zmask), phase in 0..3.
struct PauliString {
    gf2::BitVec x, z;
    std::uint8_t phase = 0;

    static PauliString identity(std::size_t n) { return {gf2::BitVec(n), gf2::BitVec(n), 0}; }

    std::size_t num_qubits() const { return x.size(); }
    std::size_t y_count() const { return x.and_with(z).popcount(); }

    bool commutes_with(const PauliString &o) const {
        return !(x.dot(o.z) ^ z.dot(o.x));
    }

    // (i^p1 X1 Z1)(i^p2 X2 Z2) = i^{p1+p2} (-1)^{z1.x2} X1X2 Z1Z2
    PauliString operator*(const PauliString &o) const {
        PauliString r = *this;
        r.phase = static_cast<std::uint8_t>((phase + o.phase + (z.dot(o.x) ? 2 : 0)) & 3);
        r.x.xor_with(o.x);
        r.z.xor_with(o.z);
        return r;
    }

    // Support restriction to a qubit mask (phase kept as-is).
    PauliString restricted(const gf2::BitVec &mask) const {
        return {x.and_with(mask), z.and_with(mask), phase};
    }
};

} // namespace negaspec
