#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cactop/rational.hpp"

namespace cactop {

// Sparse rational vector: index -> nonzero coefficient.
using QVec = std::map<int, Rational>;

void axpy(QVec& y, const Rational& a, const QVec& x);  // y += a x

// Column-major sparse matrix.
struct SparseMatrix {
  int rows = 0, cols = 0;
  std::vector<QVec> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
  void add(int row, int col, const Rational& v);
  QVec apply(const QVec& x) const;
  bool is_zero() const;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

// Fraction-free column reduction (integer arithmetic with content removal).
// Records, for every column, the combination of original columns it equals.
class ColumnReduction {
 public:
  explicit ColumnReduction(const SparseMatrix& m);
  int rank() const { return rank_; }
  const std::vector<QVec>& kernel() const { return kernel_; }
  // Solves m w = y exactly, if possible.
  std::optional<QVec> solve(const QVec& y) const;
  // Reduces y against the pivot columns; zero iff y is in the column space.
  bool in_span(const QVec& y) const;

 private:
  using ZVec = std::vector<std::pair<int, mpz_class>>;
  int rows_ = 0;
  int rank_ = 0;
  std::vector<ZVec> reduced_, combo_;
  std::map<int, int> pivot_;  // low row -> column
  std::vector<QVec> kernel_;
};

struct HomologyGroup {
  int betti = 0;
  std::vector<QVec> representatives;  // cycles whose classes form a basis
};

// Finite chain complex over Q, homological grading, boundary of degree -1.
class ChainComplexQ {
 public:
  ChainComplexQ() = default;
  // Throws std::invalid_argument if dimensions are inconsistent or d o d != 0.
  ChainComplexQ(std::map<int, std::vector<std::string>> basis, std::map<int, SparseMatrix> boundary);

  int dim(int n) const;
  const std::vector<std::string>& basis(int n) const;
  std::vector<int> degrees() const;
  SparseMatrix d(int n) const;  // C_n -> C_{n-1}

  HomologyGroup homology(int n) const;
  std::map<int, int> betti() const;
  int total_betti() const;
  bool is_cycle(int n, const QVec& z) const;
  std::optional<QVec> boundary_witness(int n, const QVec& z) const;  // w with d w = z

 private:
  const ColumnReduction& reduction(int n) const;
  std::map<int, std::vector<std::string>> basis_;
  std::map<int, SparseMatrix> d_;
  mutable std::map<int, ColumnReduction> cache_;
};

// Double complex with columns C(k) and horizontal maps delta_k: C(k-1)_n -> C(k)_n
// anticommuting with the vertical boundaries.
struct DoubleComplexQ {
  std::map<int, ChainComplexQ> columns;
  std::map<int, std::map<int, SparseMatrix>> delta;  // k -> n -> matrix

  // Total complex of the columns k <= K, with T_N = (+)_k C(k)_{N+k} and
  // boundary d + delta. Basis entries are named "k|name".
  ChainComplexQ total(int K) const;
};

// Double complex of a cosimplicial chain complex: delta_k on x in C(k-1)_n is
// (-1)^(|x|+k-1) sum_i (-1)^i cofaces[k][i][n] with |x| = n-k+1 the total
// degree, so the prefactor is (-1)^n.
DoubleComplexQ from_cosimplicial(const std::map<int, ChainComplexQ>& columns,
                                 const std::map<int, std::vector<std::map<int, SparseMatrix>>>& cofaces);

}  // namespace cactop
