#pragma once

#include "negaspec/statmech.hpp"

namespace negaspec {

struct StringOrderResult {
    double beta = 0.0;
    int length = 0;
    int i = 0, j = 0;
    double s_a = 1.0;
    double s_b = 0.0;
    Method method = Method::transfer;
};

// <S_A> of the decohered boundary cluster state: identically 1 (the
// perturbation commutes with S_A).
StringOrderResult string_order_sa(double beta, int length, int i, int j);

// <S_B> = ratio of 1d Ising partition functions at inverse temperature
// 2 beta, with the bonds (i-1,i) and (j-1,j) removed in the numerator.
// Equals 1/[cosh^2(2 beta) (1 + tanh^L 2 beta)]; note the (tanh 2b)^L
// exponent comes from the ratio itself, which the enumeration oracle
// confirms against the alternative (1 + tanh 2b)^L grouping.
StringOrderResult string_order_sb(double beta, int length, int i, int j);

enum class OverlapKind { z_2d, z_3d, x_3d };

// <psi~|psi~> maps onto a classical partition function at inverse
// temperature 2 beta: 1d Ising (2d-Z), 2d gauge (3d-Z), 2d Ising (3d-X).
PartitionResult overlap_logZ(OverlapKind kind, double beta, int length);

} // namespace negaspec
