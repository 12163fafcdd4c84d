#pragma once

#include <string>

#include "cactop/chain.hpp"
#include "cactop/nondeg.hpp"
#include "cactop/ribbon_graph.hpp"
#include "json.hpp"

namespace cactop {

using Json = nlohmann::ordered_json;

// JSON forms. Readers throw std::invalid_argument (or CactusError for
// cacti that violate the axioms).
Json graph_to_json(const RibbonGraph& g);
RibbonGraph graph_from_json(const Json& j);
Json cactus_to_json(const FramedCactus& x);
FramedCactus cactus_from_json(const Json& j);
Json chain_to_json(const CactusChain& x);
CactusChain chain_from_json(const Json& j);

// Graphviz rendering: vertices as dots, tails as open leaves (the base tail
// is drawn bold), edges labelled by their lobe, framing flags in red.
std::string cactus_to_dot(const FramedCactus& x, const std::string& name = "cactus");

// Betti table as CSV (degree,betti rows and a total row) and homology
// representatives as JSON.
std::string betti_csv(const NondegComplex& c);
Json homology_json(const NondegComplex& c);

}  // namespace cactop
