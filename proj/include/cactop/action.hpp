#pragma once

#include <vector>

#include "cactop/chain.hpp"
#include "cactop/hochschild.hpp"
#include "cactop/term.hpp"

namespace cactop {

// Action of the cactus operad on End(A): B[k,i,l] acts by o_i, Z[k] by the
// iterated product, T by the cyclic structure (required only when a T occurs)
// and permutations by reordering the inputs with the Koszul sign.
// Throws std::invalid_argument on colour or arity mismatch.
MultiMap act_term(const EndOperad& e, const CyclicStructure* tau, const Term& t, const std::vector<MultiMap>& inputs);
MultiMap act_cactus(const EndOperad& e, const CyclicStructure* tau, const FramedCactus& x,
                    const std::vector<MultiMap>& inputs);

// Action of a homogeneous chain on Hochschild cochains, output arities <= K:
//   (x.(y^1..y^r))_k = sum (-1)^s x_{k:l}.(y^1_{l_1}, ..., y^r_{l_r}),
//   s = (k+1)|x| + sum_i (k + l_i + ... + l_r)|y^i|.
Cochain act_chain(const EndOperad& e, const CyclicStructure* tau, const CactusChain& x, const std::vector<Cochain>& ys,
                  int K);

// Arity <= K truncation of a cochain.
Cochain truncate(const Cochain& c, int K);

// Both sides of every defining relation with parameters <= bound act equally on
// random maps; evaluating a term agrees with acting by its cactus.
SuiteResult relation_invariance_suite(const FiniteDGA& a, Rng& rng, int bound, int trials);

// alpha, beta and rho act by the product, bracket and BV operator (rho only
// for Frobenius algebras), and the action commutes with the differentials.
SuiteResult element_action_suite(const FiniteDGA& a, Rng& rng, int K, int trials);

}  // namespace cactop
