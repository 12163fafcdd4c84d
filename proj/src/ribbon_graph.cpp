#include "cactop/ribbon_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace cactop {

RibbonGraph::RibbonGraph(std::vector<int> vertices, std::vector<int> lambda, std::vector<int> iota,
                         std::vector<int> next, Unchecked)
    : vertices_(std::move(vertices)), lambda_(std::move(lambda)), iota_(std::move(iota)),
      next_(std::move(next)) {
  std::sort(vertices_.begin(), vertices_.end());
  rebuild_flag_list();
}

void RibbonGraph::rebuild_flag_list() {
  flags_.clear();
  for (int f = 0; f < flag_bound(); ++f)
    if (lambda_[f] >= 0) flags_.push_back(f);
}

RibbonGraph RibbonGraph::from_maps(std::vector<int> vertices, const std::map<int, int>& lambda,
                                   const std::map<int, int>& iota, const std::map<int, int>& next) {
  int bound = 0;
  for (auto [f, v] : lambda) {
    if (f < 0 || v < 0) throw std::invalid_argument("negative id");
    bound = std::max(bound, f + 1);
  }
  std::vector<int> l(bound, -1), i(bound, -1), n(bound, -1);
  for (auto [f, v] : lambda) l[f] = v;
  auto fill = [&](const std::map<int, int>& m, std::vector<int>& out, const char* name) {
    if (m.size() != lambda.size()) throw std::invalid_argument(std::string(name) + " has wrong domain");
    for (auto [f, g] : m) {
      if (!lambda.count(f) || !lambda.count(g))
        throw std::invalid_argument(std::string(name) + " refers to an unknown flag");
      out[f] = g;
    }
  };
  fill(iota, i, "iota");
  fill(next, n, "next");
  std::set<int> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) throw std::invalid_argument("duplicate vertex");
  RibbonGraph g(std::move(vertices), std::move(l), std::move(i), std::move(n), Unchecked{});
  std::string err = g.check();
  if (!err.empty()) throw std::invalid_argument(err);
  return g;
}

int RibbonGraph::vertex_bound() const { return vertices_.empty() ? 0 : vertices_.back() + 1; }

bool RibbonGraph::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int RibbonGraph::prev(int f) const {
  int g = f;
  while (next_[g] != f) g = next_[g];
  return g;
}

std::string RibbonGraph::check() const {
  for (int f : flags_) {
    if (!has_vertex(lambda_[f])) return "lambda maps flag " + std::to_string(f) + " to an unknown vertex";
    int i = iota_[f], n = next_[f];
    if (!has_flag(i) || !has_flag(n)) return "flag " + std::to_string(f) + " maps outside F";
    if (iota_[i] != f) return "iota is not an involution at flag " + std::to_string(f);
    if (lambda_[n] != lambda_[f]) return "N does not preserve lambda at flag " + std::to_string(f);
  }
  std::vector<int> seen(flag_bound(), 0);
  for (int f : flags_) {
    if (seen[f]) continue;
    int g = f;
    do {
      if (seen[g]) return "N is not a permutation";
      seen[g] = 1;
      g = next_[g];
    } while (g != f);
  }
  // Transitivity: one N-orbit per vertex.
  std::map<int, int> orbits;
  std::fill(seen.begin(), seen.end(), 0);
  for (int f : flags_) {
    if (seen[f]) continue;
    for (int g = f; !seen[g]; g = next_[g]) seen[g] = 1;
    if (++orbits[lambda_[f]] > 1)
      return "N is not transitive at vertex " + std::to_string(lambda_[f]);
  }
  return {};
}

std::vector<int> RibbonGraph::flags_at(int v) const {
  std::vector<int> out;
  for (int f : flags_)
    if (lambda_[f] == v) {
      int g = f;
      do {
        out.push_back(g);
        g = next_[g];
      } while (g != f);
      break;
    }
  return out;
}

std::vector<int> RibbonGraph::tails() const {
  std::vector<int> out;
  for (int f : flags_)
    if (iota_[f] == f) out.push_back(f);
  return out;
}

std::vector<std::pair<int, int>> RibbonGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int f : flags_)
    if (f < iota_[f]) out.emplace_back(f, iota_[f]);
  return out;
}

std::vector<int> RibbonGraph::cycle_of(int f) const {
  std::vector<int> out;
  int g = f;
  do {
    out.push_back(g);
    g = next_[iota_[g]];
  } while (g != f);
  return out;
}

std::vector<std::vector<int>> RibbonGraph::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<int> seen(flag_bound(), 0);
  for (int f : flags_) {
    if (seen[f]) continue;
    out.push_back(cycle_of(f));
    for (int g : out.back()) seen[g] = 1;
  }
  return out;
}

namespace {

struct Dsu {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    return parent[x] = find(it->second);
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool RibbonGraph::connected() const {
  if (vertices_.empty()) return true;
  Dsu d;
  for (int v : vertices_) d.find(v);
  for (auto [a, b] : edges()) d.unite(lambda_[a], lambda_[b]);
  int root = d.find(vertices_[0]);
  for (int v : vertices_)
    if (d.find(v) != root) return false;
  return true;
}

int RibbonGraph::euler_characteristic() const {
  return static_cast<int>(vertices_.size()) - num_edges() + static_cast<int>(cycles().size());
}

int RibbonGraph::genus() const {
  // Sum of (2 - chi_C) / 2 over components C.
  Dsu d;
  for (int v : vertices_) d.find(v);
  for (auto [a, b] : edges()) d.unite(lambda_[a], lambda_[b]);
  std::map<int, int> chi;
  for (int v : vertices_) chi[d.find(v)] += 1;
  for (auto [a, b] : edges()) chi[d.find(lambda_[a])] -= 1;
  for (const auto& c : cycles()) chi[d.find(lambda_[c[0]])] += 1;
  int g = 0;
  for (auto [root, x] : chi) g += (2 - x) / 2;
  return g;
}

RibbonGraph remove_flag(const RibbonGraph& g, int f) {
  if (!g.has_flag(f)) throw std::invalid_argument("remove_flag: unknown flag " + std::to_string(f));
  int bound = g.flag_bound();
  std::vector<int> l(bound, -1), io(bound, -1), n(bound, -1);
  for (int h : g.flags()) {
    if (h == f) continue;
    l[h] = g.lambda(h);
    io[h] = g.iota(h) == f ? h : g.iota(h);
    n[h] = g.next(h) == f ? g.next(f) : g.next(h);
  }
  return RibbonGraph(g.vertices(), l, io, n, RibbonGraph::Unchecked{});
}

RibbonGraph remove_flags(const RibbonGraph& g, const std::vector<int>& fs) {
  RibbonGraph out = g;
  for (int f : fs) out = remove_flag(out, f);
  return out;
}

bool is_acyclic(const RibbonGraph& g, const std::vector<std::pair<int, int>>& edges) {
  Dsu d;
  for (auto [a, b] : edges)
    if (!d.unite(g.lambda(a), g.lambda(b))) return false;
  return true;
}

namespace {

RibbonGraph contract_one(const RibbonGraph& g, int f0, int f1, int fresh) {
  if (!g.has_flag(f0) || g.iota(f0) != f1 || f0 == f1)
    throw std::invalid_argument("contract: not an edge");
  int v0 = g.lambda(f0), v1 = g.lambda(f1);
  if (v0 == v1) throw std::invalid_argument("contract: edge is a loop");
  int n0 = g.next(f0), n1 = g.next(f1);
  int bound = g.flag_bound();
  std::vector<int> l(bound, -1), io(bound, -1), n(bound, -1);
  for (int f : g.flags()) {
    if (f == f0 || f == f1) continue;
    l[f] = (g.lambda(f) == v0 || g.lambda(f) == v1) ? fresh : g.lambda(f);
    io[f] = g.iota(f);
    int nf = g.next(f);
    if ((nf == f0 && n1 != f1) || (nf == f1 && n0 == f0))
      n[f] = n1;
    else if ((nf == f1 && n0 != f0) || (nf == f0 && n1 == f1))
      n[f] = n0;
    else
      n[f] = nf;
  }
  std::vector<int> vs;
  for (int v : g.vertices())
    if (v != v0 && v != v1) vs.push_back(v);
  vs.push_back(fresh);
  return RibbonGraph(std::move(vs), l, io, n, RibbonGraph::Unchecked{});
}

}  // namespace

RibbonGraph contract_edges(const RibbonGraph& g, const std::vector<std::pair<int, int>>& edges,
                           std::map<int, int>* vertex_map) {
  if (!is_acyclic(g, edges)) throw std::invalid_argument("contract_edges: edge set is not acyclic");
  std::map<int, int> vm;
  for (int v : g.vertices()) vm[v] = v;
  RibbonGraph out = g;
  for (auto [a, b] : edges) {
    int fresh = out.vertex_bound();
    int v0 = out.lambda(a), v1 = out.lambda(b);
    out = contract_one(out, a, b, fresh);
    for (auto& [old, cur] : vm)
      if (cur == v0 || cur == v1) cur = fresh;
  }
  if (vertex_map) *vertex_map = vm;
  return out;
}

RibbonGraph compact(const RibbonGraph& g, std::map<int, int>* flag_map, std::map<int, int>* vertex_map) {
  std::map<int, int> fm, vm;
  for (int f : g.flags()) fm.emplace(f, static_cast<int>(fm.size()));
  for (int v : g.vertices()) vm.emplace(v, static_cast<int>(vm.size()));
  int n = static_cast<int>(fm.size());
  std::vector<int> l(n), io(n), nx(n), vs;
  for (auto [f, nf] : fm) {
    l[nf] = vm[g.lambda(f)];
    io[nf] = fm[g.iota(f)];
    nx[nf] = fm[g.next(f)];
  }
  for (auto [v, nv] : vm) vs.push_back(nv);
  if (flag_map) *flag_map = fm;
  if (vertex_map) *vertex_map = vm;
  return RibbonGraph(std::move(vs), l, io, nx, RibbonGraph::Unchecked{});
}

namespace {

// BFS relabelling from a start flag; returns (iota, next) in label order.
std::vector<int> encode_from(const RibbonGraph& g, int start, std::vector<int>& label) {
  std::fill(label.begin(), label.end(), -1);
  std::vector<int> order{start};
  label[start] = 0;
  for (size_t q = 0; q < order.size(); ++q) {
    int f = order[q];
    for (int h : {g.next(f), g.iota(f)})
      if (label[h] < 0) {
        label[h] = static_cast<int>(order.size());
        order.push_back(h);
      }
  }
  std::vector<int> code;
  code.reserve(2 * order.size() + 1);
  code.push_back(static_cast<int>(order.size()));
  for (int f : order) {
    code.push_back(label[g.iota(f)]);
    code.push_back(label[g.next(f)]);
  }
  return code;
}

}  // namespace

std::vector<int> canonical_form(const RibbonGraph& g) {
  std::vector<int> label(g.flag_bound(), -1);
  std::vector<int> comp(g.flag_bound(), -1);
  std::vector<std::vector<int>> codes;
  for (int f : g.flags()) {
    if (comp[f] >= 0) continue;
    // Collect the component of f.
    std::vector<int> members{f};
    comp[f] = 1;
    for (size_t q = 0; q < members.size(); ++q)
      for (int h : {g.next(members[q]), g.iota(members[q])})
        if (comp[h] < 0) {
          comp[h] = 1;
          members.push_back(h);
        }
    std::vector<int> best;
    for (int s : members) {
      auto c = encode_from(g, s, label);
      if (best.empty() || c < best) best = std::move(c);
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::set<int> used;
  for (int f : g.flags()) used.insert(g.lambda(f));
  int isolated = static_cast<int>(g.vertices().size() - used.size());
  std::vector<int> out{isolated, static_cast<int>(codes.size())};
  for (auto& c : codes) out.insert(out.end(), c.begin(), c.end());
  return out;
}

bool isomorphic(const RibbonGraph& a, const RibbonGraph& b) { return canonical_form(a) == canonical_form(b); }

}  // namespace cactop
