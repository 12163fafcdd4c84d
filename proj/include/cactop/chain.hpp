#pragma once

#include <map>
#include <string>

#include "cactop/cactus.hpp"
#include "cactop/rational.hpp"

namespace cactop {

// Finite linear combination of framed cacti with a common lobe count.
// Basis elements are isomorphism classes; the degree of x in (k: l_1..l_r)
// is l_1 + ... + l_r - k.
class CactusChain {
 public:
  struct Entry {
    FramedCactus cactus;
    Rational coeff;
  };

  CactusChain() = default;
  explicit CactusChain(int r) : r_(r) {}
  static CactusChain single(const FramedCactus& x, const Rational& c = 1);

  int r() const { return r_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<CactusKey, Entry>& terms() const { return terms_; }

  void add(const FramedCactus& x, const Rational& c);
  void add(const CactusChain& y, const Rational& c = 1);
  Rational coeff(const FramedCactus& x) const;

  CactusChain operator-() const;
  friend CactusChain operator+(CactusChain a, const CactusChain& b);
  friend CactusChain operator-(CactusChain a, const CactusChain& b);
  friend CactusChain operator*(const Rational& c, CactusChain a);
  friend bool operator==(const CactusChain& a, const CactusChain& b);

  // Keeps the components with k in [lo, hi].
  CactusChain filter_k(int lo, int hi) const;
  // Keeps the components of one degree.
  CactusChain filter_degree(int d) const;
  bool homogeneous() const;
  int degree() const;  // throws unless homogeneous and nonempty
  bool unframed() const;  // every basis element carries its canonical framing

  std::string str() const;

 private:
  int r_ = -1;  // -1 until the first term fixes it
  std::map<CactusKey, Entry> terms_;
};

// Bilinear extension of compose with the sign (-1)^(|y| (l_{i+1} + ... + l_r)),
// where l are the lobe sizes of x after slot i.
CactusChain compose(const CactusChain& x, int i, const CactusChain& y);
// Bilinear extension of sym_action with the Koszul sign of the lobe permutation.
CactusChain sym_action(const CactusChain& x, const Perm& sigma);
int sym_sign(const Profile& p, const Perm& sigma);  // +1 or -1 for x of profile p

// delta_k = sum_i (-1)^i delta_{k,i} in Lambda(k: k-1); delta_tilde(lo, hi) sums k in [lo, hi].
CactusChain delta_chain(int k);
CactusChain delta_tilde(int lo, int hi);
// epsilon_k for k in [lo, hi].
CactusChain epsilon_tilde(int lo, int hi);

// d x = delta o_1 x - (-1)^|x| sum_j x o_j delta, computed term by term.
CactusChain differential(const CactusChain& x);
// The part - (-1)^|x| sum_j x o_j delta alone; it preserves k.
CactusChain differential_inner(const CactusChain& x);
// Same as differential_inner with the per-slot sign written out.
CactusChain differential_inner_unfolded(const CactusChain& x);

// Components with k <= K of the distinguished elements.
CactusChain element_alpha(int K);
CactusChain element_beta(int K);
CactusChain element_rho(int K);
// Single component k of each.
CactusChain alpha_component(int k);
CactusChain beta_component(int k);
CactusChain rho_component(int k);

// Quotient onto the k = 0 part.
CactusChain quotient_Q(const CactusChain& x);

}  // namespace cactop
