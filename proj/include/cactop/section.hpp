#pragma once

#include "cactop/chain.hpp"

namespace cactop {

// x with w[j] extra tails on the edge of the j-th non-tail flag of c_0
// (c_0 order from the base tail). Requires k(x) = 0.
FramedCactus put_tails(const FramedCactus& x, const std::vector<int>& w);

// Sign exponent sigma(x, w) mod 2 of the section.
int section_sign_exponent(const FramedCactus& x, const std::vector<int>& w);

// Components k <= K of the section P of the quotient onto k = 0.
CactusChain section_P(const FramedCactus& x, int K);
CactusChain section_P(const CactusChain& x, int K);

// Composition on the k = 0 quotient: Q(x o_i P y).
CactusChain compose_k0(const CactusChain& x, int i, const CactusChain& y);

}  // namespace cactop
