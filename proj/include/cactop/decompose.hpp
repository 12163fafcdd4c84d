#pragma once

#include "cactop/term.hpp"

namespace cactop {

// Normal form of a framed cactus as a term:
//   ((W^sigma o_{r+1} Z[m_1]) ... o_{r+1} Z[m_d]) o_1 T[l_1]^{e_1} ... o_r T[l_r]^{e_r}
// where W is a right-combed B-word B o1 (B o1 (...)) with non-increasing
// attachment indices, the Z nodes remove the d(x) vertices that are neither
// (valence 4, two lobes) nor (valence 3, one lobe), and the T powers restore
// the framing. Trivial permutations and T exponents are omitted.
TermPtr decompose(const FramedCactus& x);

// Pieces of the decomposition, exposed for tests.
struct Decomposition {
  FramedCactus unframed;      // x with canonical framing
  std::vector<int> exponents;  // T exponent per lobe
  FramedCactus blown_up;       // d == 0; lobes r+1.. come from bad vertices
  std::vector<int> zeta_sizes;
  TermPtr word;                // W^sigma
  std::vector<int> attachment; // i_1 >= i_2 >= ...
};
Decomposition decompose_steps(const FramedCactus& x);

}  // namespace cactop
