#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cactop/chain.hpp"
#include "cactop/linalg.hpp"

namespace cactop {

// Drops degenerate basis cacti (those with a free vertex).
CactusChain project_nondeg(const CactusChain& x);

// Differential of the nondegenerate quotient: the projection of
// (-1)^(|x|+1) sum_j x o_j delta.
CactusChain nondeg_differential(const CactusChain& x);

// Operad composition of the nondegenerate quotient: project Q(x o_i P y).
CactusChain compose_nondeg(const CactusChain& x, int i, const CactusChain& y);

// Nondegenerate cacti with k = 0 and r lobes (canonically framed ones only
// unless framed), graded by l_1 + ... + l_r, with the quotient differential.
class NondegComplex {
 public:
  NondegComplex(int r, bool framed);

  int r() const { return r_; }
  bool framed() const { return framed_; }
  const ChainComplexQ& complex() const { return complex_; }
  const std::vector<FramedCactus>& basis(int degree) const;
  int basis_size() const;

  QVec to_vector(const CactusChain& x, int degree) const;  // throws if x leaves the basis
  CactusChain from_vector(const QVec& v, int degree) const;

  std::map<int, int> betti() const { return complex_.betti(); }
  int total_betti() const { return complex_.total_betti(); }
  std::vector<CactusChain> representatives(int degree) const;
  // Witness w with d w = z for a cycle z, if z is a boundary.
  std::optional<CactusChain> boundary_witness(const CactusChain& z) const;
  bool is_cycle(const CactusChain& z) const;

 private:
  int r_;
  bool framed_;
  std::map<int, std::vector<FramedCactus>> basis_;
  std::map<CactusKey, std::pair<int, int>> index_;  // key -> (degree, position)
  ChainComplexQ complex_;
};

// Largest edge count of a nondegenerate cactus with r lobes.
int nondeg_edge_bound(int r, bool framed);

// Alternating count of basis elements.
int euler_characteristic(const ChainComplexQ& c);

}  // namespace cactop

namespace cactop {

// Chain representatives of the generators u, a, b, Delta.
CactusChain ger_u();
CactusChain ger_a();
CactusChain ger_b();
CactusChain bv_delta();

struct RelationCheck {
  std::string name;
  int r = 0;
  bool framed = false;
  CactusChain defect;
  bool cycle = false;
  std::optional<CactusChain> witness;  // d witness = defect
  bool ok() const { return cycle && witness.has_value(); }
};

// Generators are cycles, and every Ger / BV relation holds up to an explicit boundary.
std::vector<RelationCheck> verify_bv_relations(bool include_bv = true);

}  // namespace cactop
