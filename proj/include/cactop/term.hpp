#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cactop/cactus.hpp"

namespace cactop {

// Terms of the free colored operad on B, Z, T (plus units E).
//   B[k,i,l] : (k, l) -> k+l-1      Z[k] : () -> k
//   T[k]     : (k) -> k, k >= 1      E[k] : (k) -> k
// T[k]^n is the n-fold o1 power of T[k].
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Gen, Comp, Sym };
  Kind kind = Kind::Gen;
  char gen = 'E';
  std::vector<int> params;
  int power = 1;
  TermPtr lhs, rhs;  // Comp: lhs o_slot rhs; Sym: lhs^sigma
  int slot = 0;
  Perm sigma;

  friend bool operator==(const Term& a, const Term& b);
};

TermPtr gen_B(int k, int i, int l);
TermPtr gen_Z(int k);
TermPtr gen_T(int k, int power = 1);
TermPtr gen_E(int k);
TermPtr comp(TermPtr lhs, int slot, TermPtr rhs);
TermPtr sym(TermPtr t, Perm sigma);

struct Colors {
  int out = 0;
  std::vector<int> in;
};
// Checks the term is well formed; throws std::invalid_argument otherwise.
Colors colors(const Term& t);

TermPtr parse_term(const std::string& s);
std::string print_term(const Term& t);

FramedCactus evaluate(const Term& t);

// Defining relations of the presentation, every parameter at most `bound`.
struct RelationInstance {
  std::string family;
  TermPtr lhs, rhs;
};
std::vector<RelationInstance> relation_instances(int bound);

// Framed (or canonically framed) cacti of the profile obtained by evaluating
// all terms of normal-form shape; deduplicated. Intended for small profiles.
std::vector<FramedCactus> enumerate_by_terms(const Profile& p, bool framed);

}  // namespace cactop
