#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cactop/cactus.hpp"
#include "cactop/random.hpp"
#include "cactop/rational.hpp"

namespace cactop {

using AVec = std::vector<Rational>;  // element of A in the basis

// Finite-dimensional dga with homological grading: d has degree -1.
struct FiniteDGA {
  std::string name;
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<AVec> diff;                  // diff[j] = d(e_j)
  std::vector<std::vector<AVec>> product;  // product[i][j] = e_i e_j
  int unit = 0;
  AVec trace;  // optional functional defining <a,b> = trace(ab); empty if absent

  int dim() const { return static_cast<int>(names.size()); }
  int index(const std::string& basis_name) const;  // throws on unknown name
  AVec basis_vector(int i) const;
  AVec multiply(const AVec& a, const AVec& b) const;
  AVec d(const AVec& a) const;
  // First violated invariant (degrees, d^2, Leibniz, associativity, unit), if any.
  std::optional<std::string> check() const;
  // Trace present, pairing nondegenerate, invariant and graded symmetric.
  bool frobenius() const;

  static FiniteDGA from_json(const std::string& text);  // throws std::invalid_argument
  std::string to_json() const;
};

FiniteDGA dga_rationals();     // Q
FiniteDGA dga_dual_numbers();  // Q[x]/x^2 with |x| = -2, trace(x) = 1
FiniteDGA dga_truncated();     // basis 1, y, x with |y| = -1, |x| = -2, dy = x, trivial products

// Multilinear map A^{(x)k} -> A of internal degree n, stored densely.
// Inputs are encoded big-endian: (v_1, ..., v_k) -> ((v_1 D + v_2) D + ...).
class MultiMap {
 public:
  MultiMap() = default;
  MultiMap(int dim, int arity, int degree);

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }
  size_t inputs() const { return inputs_; }
  const Rational& at(size_t in, int out) const { return data_[in * dim_ + out]; }
  Rational& at(size_t in, int out) { return data_[in * dim_ + out]; }
  std::vector<int> decode(size_t in) const;
  size_t encode(const std::vector<int>& args) const;
  bool is_zero() const;

  MultiMap& operator+=(const MultiMap& o);
  MultiMap& operator*=(const Rational& c);
  // Zero maps compare equal regardless of degree.
  friend bool operator==(const MultiMap& a, const MultiMap& b);

 private:
  int dim_ = 0, arity_ = 0, degree_ = 0;
  size_t inputs_ = 1;
  std::vector<Rational> data_;
};

// Endomorphism operad of a dga.
class EndOperad {
 public:
  explicit EndOperad(FiniteDGA a);
  const FiniteDGA& algebra() const { return a_; }
  int dim() const { return a_.dim(); }
  // Sum of input degrees of an encoded argument tuple.
  int input_degree(size_t in, int arity) const;

  MultiMap zero(int arity, int degree) const;
  MultiMap mu() const;
  MultiMap unit() const;  // arity 0, value 1_A
  MultiMap id() const;
  MultiMap zeta(int k) const;  // iterated product; zeta(0) = unit, zeta(1) = id
  MultiMap compose(const MultiMap& f, int i, const MultiMap& g) const;
  // Lobe a of the result reads argument sigma^{-1}(a): f^sigma(v) = +- f(v_{sigma^{-1}(1)}, ...).
  MultiMap sym(const MultiMap& f, const Perm& sigma) const;
  MultiMap differential(const MultiMap& f) const;
  MultiMap random(Rng& rng, int arity, int degree) const;

 private:
  FiniteDGA a_;
};

// Cyclic structure on End(A) from a Frobenius pairing:
//   <a_0, tau x(a_1..a_k)> = (-1)^{|a_k|(|a_0|+...+|a_{k-1}|+|x|)} <a_k, x(a_0..a_{k-1})>.
// tau_0 is the identity.
class CyclicStructure {
 public:
  explicit CyclicStructure(const EndOperad& e);  // throws if A is not Frobenius
  MultiMap tau(const MultiMap& f, int power = 1) const;
  // Violated axioms on random maps of arity <= max_arity; empty when all hold.
  std::vector<std::string> check_axioms(Rng& rng, int max_arity, int trials) const;

 private:
  const EndOperad& e_;
  std::vector<std::vector<Rational>> gram_inv_;
};

// Homogeneous Hochschild cochain; component k has internal degree degree + k.
struct Cochain {
  int degree = 0;
  std::map<int, MultiMap> comps;

  bool is_zero() const;
  void add(int arity, const MultiMap& f, const Rational& c = 1);
  friend bool operator==(const Cochain& a, const Cochain& b);
};

class Hochschild {
 public:
  explicit Hochschild(const EndOperad& e) : e_(e) {}
  const EndOperad& operad() const { return e_; }

  Cochain zero(int degree) const;
  Cochain unit_cochain() const;  // arity 0 component 1_A
  Cochain random(Rng& rng, int degree, int max_arity) const;
  Cochain sum(const Cochain& a, const Cochain& b, const Rational& cb = 1) const;
  Cochain scaled(const Cochain& a, const Rational& c) const;

  // Direct formulas on argument tuples.
  Cochain boundary(const Cochain& f) const;
  Cochain cup(const Cochain& f, const Cochain& g) const;
  Cochain star(const Cochain& f, const Cochain& g) const;
  Cochain bracket(const Cochain& f, const Cochain& g) const;

  // The same structures through the operad maps of End(A).
  Cochain boundary_operadic(const Cochain& x) const;
  Cochain bullet(const Cochain& x, const Cochain& y) const;
  Cochain star_operadic(const Cochain& x, const Cochain& y) const;
  Cochain bracket_operadic(const Cochain& x, const Cochain& y) const;
  Cochain bv_delta(const Cochain& x, const CyclicStructure& tau) const;

 private:
  const EndOperad& e_;
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Chain-level identity suite on `samples` random cochains of arity <= max_arity.
std::vector<SuiteResult> hochschild_suite(const FiniteDGA& a, Rng& rng, int samples, int max_arity = 3);

}  // namespace cactop
