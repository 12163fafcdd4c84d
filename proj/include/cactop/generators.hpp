#pragma once

#include "cactop/cactus.hpp"

namespace cactop {

FramedCactus zeta(int k);                // Lambda(k:)
FramedCactus epsilon(int k);             // Lambda(k:k), the unit
FramedCactus tau(int k);                 // fLambda(k:k), k >= 1
FramedCactus beta(int k, int i, int l);  // Lambda(k+l-1: k,l), 1 <= i <= k
FramedCactus delta_face(int k, int i);   // Lambda(k: k-1), 0 <= i <= k
FramedCactus sigma_degeneracy(int k, int i);  // Lambda(k: k+1), 0 <= i <= k
FramedCactus alpha(int k, int l);        // Lambda(k+l: k,l)
FramedCactus j_cactus(int k);            // Lambda(0: k)

// x o_i tau^n, with tau^0 the unit.
FramedCactus twist(const FramedCactus& x, int i, int n);

// Replaces the tail a of x by the base vertex of y (minus its base tail).
// Lobes of y follow those of x; the framing is recomputed canonically for
// the new lobes and inherited for the old ones.
FramedCactus graft(const FramedCactus& x, int tail, const FramedCactus& y);

}  // namespace cactop
