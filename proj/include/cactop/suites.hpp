#pragma once

#include <vector>

#include "cactop/hochschild.hpp"
#include "cactop/random.hpp"

namespace cactop {

// Verification suites shared by the command line tool and the acceptance
// binary. Every suite reports its check count and up to a few serialized
// counterexamples.

// Defining relations with every parameter <= bound hold as isomorphisms.
SuiteResult suite_relations(int bound);

// Associativity (sequential and parallel), units and equivariance of the
// cactus operad on random samples with k and lobe sizes <= max_size.
SuiteResult suite_operad_axioms(Rng& rng, int samples, int max_size);

// evaluate o decompose = id and decompose injective on every framed cactus
// with E <= max_edges edges and k <= max(max_k, max_edges - E) (tails are not
// edges, so k needs its own bound).
SuiteResult suite_presentation(int max_edges, int max_k);

// d^2 = 0 on random chains with r <= 3, the Leibniz rule, and the alpha,
// beta, rho identities componentwise for k <= K.
SuiteResult suite_dg_identities(Rng& rng, int samples, int K);

// Q o P = id, P a chain map for k <= K, and the section of the generators.
SuiteResult suite_section(Rng& rng, int samples, int K);

// Total homology of the nondegenerate complexes: r! unframed for r <= 3,
// 2^r r! framed for r <= 2, and framed r = 3 when requested.
SuiteResult suite_homology(bool framed_r3);

// Ger and BV relations certified by boundary witnesses.
SuiteResult suite_bv();

// Hochschild identity suite on the given algebras.
std::vector<SuiteResult> suite_hochschild(const std::vector<FiniteDGA>& algebras, Rng& rng, int samples);

// Relation invariance of the End(A) action and the action of alpha, beta, rho.
std::vector<SuiteResult> suite_action(const std::vector<FiniteDGA>& algebras, Rng& rng, int bound, int trials);

}  // namespace cactop
