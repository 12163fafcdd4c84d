#pragma once

#include <random>

#include "cactop/chain.hpp"
#include "cactop/term.hpp"

namespace cactop {

using Rng = std::mt19937_64;

// Random normal-form term with r lobes, output k and every lobe size at most
// max_lobe. Every framed cactus of such a profile has positive probability.
TermPtr random_term(Rng& rng, int r, int k, int max_lobe, bool framed);
FramedCactus random_cactus(Rng& rng, int r, int k, int max_lobe, bool framed);

// Random chain of `terms` cacti with small integer coefficients; k is drawn
// from [0, max_k] per term.
CactusChain random_chain(Rng& rng, int r, int max_k, int max_lobe, int terms, bool framed);

}  // namespace cactop
