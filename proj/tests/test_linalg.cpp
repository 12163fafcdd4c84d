#include <algorithm>
#include <random>
#include <set>

#include "cactop/linalg.hpp"
#include "doctest.h"

using namespace cactop;

namespace {

// Dense Gaussian elimination, used as an oracle.
int dense_rank(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
  for (int j = 0; j < m.cols; ++j)
    for (auto& [i, v] : m.columns[j]) a[i][j] = v;
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int p = rank;
    while (p < m.rows && a[p][c] == 0) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[rank]);
    for (int i = 0; i < m.rows; ++i)
      if (i != rank && a[i][c] != 0) {
        Rational f = a[i][c] / a[rank][c];
        for (int j = c; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
      }
    ++rank;
  }
  return rank;
}

SparseMatrix random_matrix(std::mt19937& rng, int rows, int cols, int density) {
  SparseMatrix m(rows, cols);
  std::uniform_int_distribution<int> coin(0, 99), val(-3, 3);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      if (coin(rng) < density) m.add(i, j, Rational(val(rng), 1 + coin(rng) % 3));
  return m;
}

// Simplicial chain complex of the closure of the given facets.
ChainComplexQ simplicial(const std::vector<std::vector<int>>& facets) {
  std::map<int, std::set<std::vector<int>>> faces;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    int n = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> s;
      for (int a = 0; a < n; ++a)
        if (mask >> a & 1) s.push_back(f[a]);
      faces[static_cast<int>(s.size()) - 1].insert(s);
    }
  }
  std::map<int, std::vector<std::string>> basis;
  std::map<int, std::map<std::vector<int>, int>> index;
  for (auto& [n, fs] : faces)
    for (auto& s : fs) {
      index[n][s] = static_cast<int>(basis[n].size());
      std::string name;
      for (int v : s) name += std::to_string(v) + ",";
      basis[n].push_back(name);
    }
  std::map<int, SparseMatrix> d;
  for (auto& [n, fs] : faces) {
    if (n == 0) continue;
    SparseMatrix m(static_cast<int>(faces[n - 1].size()), static_cast<int>(fs.size()));
    for (auto& s : fs)
      for (size_t a = 0; a < s.size(); ++a) {
        auto t = s;
        t.erase(t.begin() + a);
        m.add(index[n - 1][t], index[n][s], a % 2 ? -1 : 1);
      }
    d[n] = m;
  }
  return ChainComplexQ(basis, d);
}

}  // namespace

TEST_CASE("column reduction rank matches dense elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 9), cols = 1 + static_cast<int>(rng() % 9);
    auto m = random_matrix(rng, rows, cols, 10 + static_cast<int>(rng() % 60));
    ColumnReduction red(m);
    CHECK(red.rank() == dense_rank(m));
    CHECK(static_cast<int>(red.kernel().size()) == cols - red.rank());
    for (const auto& z : red.kernel()) CHECK(m.apply(z).empty());
    // Solvable right-hand sides come back with an exact preimage.
    QVec x;
    for (int j = 0; j < cols; ++j)
      if (rng() % 2) {
        Rational q(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 4));
        q.canonicalize();
        if (q != 0) x[j] = q;
      }
    QVec y = m.apply(x);
    auto w = red.solve(y);
    REQUIRE(w.has_value());
    CHECK(m.apply(*w) == y);
  }
}

TEST_CASE("solve rejects vectors outside the column space") {
  SparseMatrix m(3, 2);
  m.add(0, 0, 1);
  m.add(1, 0, 1);
  m.add(1, 1, 2);
  ColumnReduction red(m);
  CHECK_FALSE(red.solve(QVec{{2, 1}}).has_value());
  CHECK(red.in_span(QVec{{0, 1}}));
  CHECK_FALSE(red.in_span(QVec{{0, 1}, {2, 3}}));
}

TEST_CASE("simplicial homology of standard spaces") {
  auto circle = simplicial({{0, 1}, {1, 2}, {0, 2}});
  CHECK(circle.betti() == std::map<int, int>{{0, 1}, {1, 1}});
  auto sphere = simplicial({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(sphere.betti() == std::map<int, int>{{0, 1}, {2, 1}});
  std::vector<std::vector<int>> torus;
  for (int i = 0; i < 7; ++i) {
    torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
    torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  auto t = simplicial(torus);
  CHECK(t.betti() == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
  auto rp2 = simplicial({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                         {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
  CHECK(rp2.betti() == std::map<int, int>{{0, 1}});
  auto h1 = t.homology(1);
  CHECK(h1.betti == 2);
  for (const auto& z : h1.representatives) {
    CHECK(t.is_cycle(1, z));
    CHECK_FALSE(t.boundary_witness(1, z).has_value());
  }
}

TEST_CASE("boundary witnesses") {
  auto sphere = simplicial({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  // Boundary of one triangle is a boundary; a vertex difference is too.
  QVec tri{{0, 1}};
  QVec z = sphere.d(2).apply(tri);
  auto w = sphere.boundary_witness(1, z);
  REQUIRE(w.has_value());
  CHECK(sphere.d(2).apply(*w) == z);
  QVec pts{{0, 1}, {3, -1}};
  auto w0 = sphere.boundary_witness(0, pts);
  REQUIRE(w0.has_value());
  CHECK(sphere.d(1).apply(*w0) == pts);
  CHECK_FALSE(sphere.boundary_witness(0, QVec{{0, 1}}).has_value());
}

TEST_CASE("chain complexes reject d o d != 0") {
  SparseMatrix d1(1, 1), d2(1, 1);
  d1.add(0, 0, 1);
  d2.add(0, 0, 1);
  CHECK_THROWS_AS(ChainComplexQ({{0, {"a"}}, {1, {"b"}}, {2, {"c"}}}, {{1, d1}, {2, d2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ChainComplexQ({{0, {"a"}}, {1, {"b"}}}, {{1, SparseMatrix(2, 1)}}), std::invalid_argument);
}

TEST_CASE("total complex of the constant cosimplicial object") {
  // Q in every cosimplicial degree with identity cofaces: the alternating sum
  // is an isomorphism C(k-1) -> C(k) for even k and zero for odd k.
  for (int K = 0; K <= 6; ++K) {
    std::map<int, ChainComplexQ> cols;
    std::map<int, std::vector<std::map<int, SparseMatrix>>> cof;
    for (int k = 0; k <= K; ++k) {
      cols[k] = ChainComplexQ({{0, {"p"}}}, {});
      if (k == 0) continue;
      SparseMatrix id(1, 1);
      id.add(0, 0, 1);
      cof[k] = std::vector<std::map<int, SparseMatrix>>(k + 1, {{0, id}});
    }
    auto tot = from_cosimplicial(cols, cof).total(K);
    std::map<int, int> expected{{0, 1}};
    if (K % 2 == 1) expected[-K] = 1;
    CHECK_MESSAGE(tot.betti() == expected, "K=" << K);
  }
}

TEST_CASE("total complex of a product of simplicial complexes") {
  // Columns C(k) = circle chains, delta the constant cosimplicial structure
  // tensored with the identity: total homology is that of the circle.
  auto circle = simplicial({{0, 1}, {1, 2}, {0, 2}});
  for (int K : {2, 4}) {
    std::map<int, ChainComplexQ> cols;
    std::map<int, std::vector<std::map<int, SparseMatrix>>> cof;
    for (int k = 0; k <= K; ++k) {
      cols[k] = circle;
      if (k == 0) continue;
      std::map<int, SparseMatrix> ids;
      for (int n : {0, 1}) {
        SparseMatrix id(circle.dim(n), circle.dim(n));
        for (int a = 0; a < circle.dim(n); ++a) id.add(a, a, 1);
        ids[n] = id;
      }
      cof[k] = std::vector<std::map<int, SparseMatrix>>(k + 1, ids);
    }
    auto tot = from_cosimplicial(cols, cof).total(K);
    CHECK(tot.betti() == circle.betti());
  }
}
