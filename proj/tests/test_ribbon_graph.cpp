#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cactop/ribbon_graph.hpp"
#include "doctest.h"

using namespace cactop;

namespace {

// Random ribbon graph: random involution and random N; vertices are the
// N-orbits, so lambda is determined.
RibbonGraph random_graph(std::mt19937& rng, int n) {
  std::vector<int> io(n), nx(n), lam(n, -1);
  std::iota(io.begin(), io.end(), 0);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int a = 0; a + 1 < n; a += 2)
    if (rng() % 4 != 0) {
      io[order[a]] = order[a + 1];
      io[order[a + 1]] = order[a];
    }
  std::iota(nx.begin(), nx.end(), 0);
  std::shuffle(nx.begin(), nx.end(), rng);
  int nv = 0;
  for (int f = 0; f < n; ++f) {
    if (lam[f] >= 0) continue;
    for (int g = f; lam[g] < 0; g = nx[g]) lam[g] = nv;
    ++nv;
  }
  std::vector<int> verts(nv);
  std::iota(verts.begin(), verts.end(), 0);
  return RibbonGraph(verts, lam, io, nx, RibbonGraph::Unchecked{});
}

RibbonGraph relabel(const RibbonGraph& g, std::mt19937& rng) {
  int n = g.flag_bound();
  std::vector<int> p(n), q(g.vertex_bound());
  std::iota(p.begin(), p.end(), 0);
  std::iota(q.begin(), q.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::shuffle(q.begin(), q.end(), rng);
  std::vector<int> lam(n), io(n), nx(n), verts;
  for (int f : g.flags()) {
    lam[p[f]] = q[g.lambda(f)];
    io[p[f]] = p[g.iota(f)];
    nx[p[f]] = p[g.next(f)];
  }
  for (int v : g.vertices()) verts.push_back(q[v]);
  return RibbonGraph(verts, lam, io, nx, RibbonGraph::Unchecked{});
}

}  // namespace

TEST_CASE("ribbon graph validation") {
  // One vertex with a loop and a tail.
  auto g = RibbonGraph::from_maps({0}, {{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 0}, {2, 2}},
                                  {{0, 1}, {1, 2}, {2, 0}});
  CHECK(g.num_edges() == 1);
  CHECK(g.tails() == std::vector<int>{2});
  CHECK(g.genus() == 0);
  CHECK_THROWS_AS(RibbonGraph::from_maps({0}, {{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 1}, {1, 0}}),
                  std::invalid_argument);
  // N must be transitive on each vertex.
  CHECK_THROWS_AS(RibbonGraph::from_maps({0}, {{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}),
                  std::invalid_argument);
  // N must preserve lambda.
  CHECK_THROWS_AS(RibbonGraph::from_maps({0, 1}, {{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("genus of one-vertex graphs") {
  // Two loops a=(0,2), b=(1,3) with cyclic order 0,1,2,3: interleaved, genus 1.
  auto torus = RibbonGraph::from_maps({0}, {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                                      {{0, 2}, {2, 0}, {1, 3}, {3, 1}},
                                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(torus.cycles().size() == 1);
  CHECK(torus.genus() == 1);
  auto plane = RibbonGraph::from_maps({0}, {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                                      {{0, 1}, {1, 0}, {2, 3}, {3, 2}},
                                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(plane.cycles().size() == 3);
  CHECK(plane.genus() == 0);
}

TEST_CASE("flag removal follows the rerouting rules") {
  // Vertex 0: 0 -> 1 -> 2 -> 0; edge {1,3}; vertex 1: 3 -> 4 -> 3.
  auto g = RibbonGraph::from_maps({0, 1}, {{0, 0}, {1, 0}, {2, 0}, {3, 1}, {4, 1}},
                                  {{0, 0}, {1, 3}, {3, 1}, {2, 2}, {4, 4}},
                                  {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 3}});
  auto h = remove_flag(g, 1);
  CHECK_FALSE(h.has_flag(1));
  CHECK(h.next(0) == 2);
  CHECK(h.iota(3) == 3);  // partner becomes a tail
  CHECK(h.vertices() == g.vertices());
  CHECK(h.check().empty());
  // Removing the last flag at a vertex keeps the vertex.
  auto k = remove_flags(g, {3, 4});
  CHECK(k.has_vertex(1));
  CHECK(k.flags_at(1).empty());
}

TEST_CASE("edge contraction splices the cyclic orders") {
  // v0: 0 -> 1 -> 2, v1: 3 -> 4, edge {1,3}.
  auto g = RibbonGraph::from_maps({0, 1}, {{0, 0}, {1, 0}, {2, 0}, {3, 1}, {4, 1}},
                                  {{0, 0}, {1, 3}, {3, 1}, {2, 2}, {4, 4}},
                                  {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 3}});
  std::map<int, int> vm;
  auto c = contract_edges(g, {{1, 3}}, &vm);
  CHECK(c.vertices() == std::vector<int>{2});
  CHECK(vm[0] == 2);
  CHECK(vm[1] == 2);
  CHECK(c.flags_at(2) == std::vector<int>{0, 4, 2});
  CHECK(c.check().empty());
  CHECK_THROWS(contract_edges(remove_flag(g, 4), {{1, 3}, {1, 3}}));
}

TEST_CASE("contraction commutes with removal on random graphs") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto g = random_graph(rng, 4 + static_cast<int>(rng() % 9));
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<std::pair<int, int>> e;
    for (auto ed : edges) {
      auto trial_set = e;
      trial_set.push_back(ed);
      if (rng() % 2 && is_acyclic(g, trial_set)) e = trial_set;
    }
    std::set<int> etilde;
    for (auto [a, b] : e) {
      etilde.insert(a);
      etilde.insert(b);
    }
    std::vector<int> f;
    for (int x : g.flags())
      if (!etilde.count(x) && rng() % 3 == 0) f.push_back(x);
    auto lhs = remove_flags(contract_edges(g, e), f);
    auto rhs = contract_edges(remove_flags(g, f), e);
    CHECK(lhs.check().empty());
    CHECK(canonical_form(lhs) == canonical_form(rhs));
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("canonical form is a relabelling invariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, 1 + static_cast<int>(rng() % 10));
    auto h = relabel(g, rng);
    CHECK(isomorphic(g, h));
    CHECK(g.genus() == h.genus());
  }
  // Mirror image of a vertex with three distinguishable neighbours differs.
  auto a = random_graph(rng, 6);
  CHECK(canonical_form(a) == canonical_form(compact(a)));
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  // A loop at one vertex versus an edge between two vertices.
  auto loop = RibbonGraph::from_maps({0}, {{0, 0}, {1, 0}}, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}});
  auto bar = RibbonGraph::from_maps({0, 1}, {{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}, {{0, 0}, {1, 1}});
  CHECK_FALSE(isomorphic(loop, bar));
  auto iso_vertex = RibbonGraph::from_maps({0, 1}, {{0, 0}, {1, 0}}, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}});
  CHECK_FALSE(isomorphic(loop, iso_vertex));
}
