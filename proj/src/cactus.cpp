#include "cactop/cactus.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cactop {

int Profile::degree() const { return std::accumulate(lobes.begin(), lobes.end(), 0) - k; }

std::string Profile::str() const {
  std::string s = std::to_string(k) + ":";
  for (size_t i = 0; i < lobes.size(); ++i) s += (i ? "," : "") + std::to_string(lobes[i]);
  return s;
}

Profile Profile::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("profile must look like k:l1,l2,...");
  Profile p;
  try {
    p.k = std::stoi(s.substr(0, colon));
    std::string rest = s.substr(colon + 1);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) p.lobes.push_back(std::stoi(item));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad profile '" + s + "'");
  }
  if (p.k < 0) throw std::invalid_argument("bad profile '" + s + "'");
  for (int l : p.lobes)
    if (l < 0) throw std::invalid_argument("bad profile '" + s + "'");
  return p;
}

const char* clause_name(Clause c) {
  switch (c) {
    case Clause::Graph: return "ribbon-graph";
    case Clause::Connected: return "(i) connected";
    case Clause::Genus: return "(i) genus zero";
    case Clause::Partition: return "(ii) cycle partition";
    case Clause::OuterIncidence: return "(iii) outer incidence";
    case Clause::BaseTail: return "base tail";
    case Clause::IsolatedVertex: return "isolated vertex";
    case Clause::Framing: return "framing";
  }
  return "?";
}

std::string Violation::str() const { return std::string("cactus violates ") + clause_name(clause) + ": " + detail; }

std::optional<Violation> validate(const RibbonGraph& g, const std::vector<std::vector<int>>& cycles,
                                  int base_tail) {
  std::string err = g.check();
  if (!err.empty()) return Violation{Clause::Graph, err};
  std::set<int> used;
  for (int f : g.flags()) used.insert(g.lambda(f));
  for (int v : g.vertices())
    if (!used.count(v)) return Violation{Clause::IsolatedVertex, "vertex " + std::to_string(v) + " has no flags"};
  if (!g.connected()) return Violation{Clause::Connected, "graph is disconnected"};
  if (g.genus() != 0) return Violation{Clause::Genus, "genus is " + std::to_string(g.genus())};
  if (cycles.empty()) return Violation{Clause::Partition, "no outer cycle"};
  std::vector<int> owner(g.flag_bound(), -1);
  for (size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].empty()) return Violation{Clause::Partition, "cycle " + std::to_string(i) + " is empty"};
    for (int f : cycles[i]) {
      if (!g.has_flag(f)) return Violation{Clause::Partition, "unknown flag " + std::to_string(f)};
      if (owner[f] >= 0) return Violation{Clause::Partition, "flag " + std::to_string(f) + " lies in two cycles"};
      owner[f] = static_cast<int>(i);
    }
    auto orbit = g.cycle_of(cycles[i][0]);
    std::set<int> a(orbit.begin(), orbit.end()), b(cycles[i].begin(), cycles[i].end());
    if (a != b || orbit.size() != cycles[i].size())
      return Violation{Clause::Partition, "c_" + std::to_string(i) + " is not a cycle of N o iota"};
  }
  for (int f : g.flags())
    if (owner[f] < 0) return Violation{Clause::Partition, "flag " + std::to_string(f) + " lies in no cycle"};
  for (int f : g.flags()) {
    int n = (owner[f] == 0) + (g.iota(f) != f && owner[g.iota(f)] == 0);
    if (n != 1)
      return Violation{Clause::OuterIncidence,
                       "flag " + std::to_string(f) + " meets c_0 in " + std::to_string(n) + " flags"};
  }
  if (!g.has_flag(base_tail) || !g.is_tail(base_tail))
    return Violation{Clause::BaseTail, "flag " + std::to_string(base_tail) + " is not a tail"};
  return std::nullopt;
}

namespace {

std::vector<int> rotate_to(std::vector<int> c, int f) {
  auto it = std::find(c.begin(), c.end(), f);
  std::rotate(c.begin(), it, c.end());
  return c;
}

std::vector<int> owners(const DecoratedCactus& x) {
  std::vector<int> own(x.graph.flag_bound(), -1);
  for (size_t i = 0; i < x.cycles.size(); ++i)
    for (int f : x.cycles[i]) own[f] = static_cast<int>(i);
  return own;
}

}  // namespace

DecoratedCactus DecoratedCactus::make(RibbonGraph g, const std::vector<std::vector<int>>& cycles, int base_tail) {
  if (auto v = validate(g, cycles, base_tail)) throw CactusError(*v);
  DecoratedCactus d;
  d.cycles.push_back(g.cycle_of(base_tail));
  for (size_t i = 1; i < cycles.size(); ++i) d.cycles.push_back(g.cycle_of(cycles[i][0]));
  d.graph = std::move(g);
  d.base_tail = base_tail;
  return d;
}

Profile DecoratedCactus::profile() const {
  Profile p;
  p.k = static_cast<int>(graph.tails().size()) - 1;
  for (size_t i = 1; i < cycles.size(); ++i) p.lobes.push_back(static_cast<int>(cycles[i].size()) - 1);
  return p;
}

int DecoratedCactus::lobe_of(int f) const {
  for (size_t i = 0; i < cycles.size(); ++i)
    if (std::find(cycles[i].begin(), cycles[i].end(), f) != cycles[i].end()) return static_cast<int>(i);
  return -1;
}

FramedCactus FramedCactus::make(DecoratedCactus d, std::vector<int> framing) {
  if (static_cast<int>(framing.size()) != d.r())
    throw CactusError(Violation{Clause::Framing, "need one framing flag per lobe"});
  for (int i = 1; i <= d.r(); ++i) {
    auto& c = d.cycles[i];
    if (std::find(c.begin(), c.end(), framing[i - 1]) == c.end())
      throw CactusError(Violation{Clause::Framing, "fr(c_" + std::to_string(i) + ") is not in c_" + std::to_string(i)});
    c = rotate_to(c, framing[i - 1]);
  }
  return FramedCactus{std::move(d), std::move(framing)};
}

FramedCactus FramedCactus::from_graph(RibbonGraph g, int base_tail, const std::vector<int>& framing) {
  FramedCactus x;
  x.shape.cycles.push_back(g.cycle_of(base_tail));
  for (int f : framing) x.shape.cycles.push_back(g.cycle_of(f));
  x.shape.graph = std::move(g);
  x.shape.base_tail = base_tail;
  x.framing = framing;
  return x;
}

DualTree dual_tree(const DecoratedCactus& x) {
  DualTree t;
  t.vertices = x.graph.vertices();
  t.r = x.r();
  for (int i = 1; i <= x.r(); ++i)
    for (int f : x.cycles[i]) {
      t.edges.emplace_back(i, x.graph.lambda(f));
      t.edge_flags.push_back(f);
    }
  return t;
}

std::vector<int> canonical_framing(const DecoratedCactus& x) {
  // BFS over the bipartite dual tree from the base vertex.
  const auto& g = x.graph;
  auto own = owners(x);
  std::vector<int> fr(x.r(), -1);
  std::set<int> seen_v{g.lambda(x.base_tail)};
  std::deque<int> queue{g.lambda(x.base_tail)};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int f : g.flags_at(v)) {
      int i = own[f];
      if (i <= 0 || fr[i - 1] >= 0) continue;
      fr[i - 1] = f;
      for (int h : x.cycles[i]) {
        int w = g.lambda(h);
        if (seen_v.insert(w).second) queue.push_back(w);
      }
    }
  }
  return fr;
}

FramedCactus with_canonical_framing(const DecoratedCactus& x) { return FramedCactus::make(x, canonical_framing(x)); }

bool has_canonical_framing(const FramedCactus& x) { return canonical_framing(x.shape) == x.framing; }

FramedCactus compose(const FramedCactus& x, int i, const FramedCactus& y) {
  if (i < 1 || i > x.r()) throw std::invalid_argument("compose: slot out of range");
  const auto& gx = x.graph();
  const auto& gy = y.graph();
  const auto& ci = x.cycles()[i];
  const int l = static_cast<int>(ci.size()) - 1;
  std::vector<int> ytails;
  for (int f : y.cycles()[0])
    if (gy.is_tail(f)) ytails.push_back(f);
  if (static_cast<int>(ytails.size()) != l + 1)
    throw std::invalid_argument("compose: colour mismatch at slot " + std::to_string(i));

  const int fx = gx.flag_bound(), fy = gy.flag_bound(), vx = gx.vertex_bound();
  const int total = fx + fy + l + 1;
  std::vector<int> lam(total, -1), io(total, -1), nx(total, -1);
  for (int f : gx.flags()) {
    lam[f] = gx.lambda(f);
    io[f] = gx.iota(f);
    nx[f] = gx.next(f);
  }
  for (int f : gy.flags()) {
    lam[fx + f] = vx + gy.lambda(f);
    io[fx + f] = fx + gy.iota(f);
    nx[fx + f] = fx + gy.next(f);
  }
  std::vector<std::pair<int, int>> glue;
  for (int j = 0; j <= l; ++j) {
    int fj = ci[j], g = fx + fy + j;
    int tj = fx + ytails[(l + 1 - j) % (l + 1)];
    nx[gx.prev(fj)] = g;
    lam[g] = gx.lambda(fj);
    nx[g] = fj;
    io[g] = tj;
    io[tj] = g;
    glue.emplace_back(g, tj);
  }
  std::vector<int> verts = gx.vertices();
  for (int v : gy.vertices()) verts.push_back(vx + v);
  RibbonGraph glued(std::move(verts), lam, io, nx, RibbonGraph::Unchecked{});

  std::vector<int> drop;
  for (int f : ci) {
    drop.push_back(f);
    drop.push_back(gx.iota(f));
  }
  RibbonGraph cut = remove_flags(glued, drop);
  RibbonGraph merged = contract_edges(cut, glue);
  std::map<int, int> fm;
  RibbonGraph out = compact(merged, &fm);

  std::vector<int> framing;
  for (int a = 1; a < i; ++a) framing.push_back(fm.at(x.framing[a - 1]));
  for (int b = 1; b <= y.r(); ++b) framing.push_back(fm.at(fx + y.framing[b - 1]));
  for (int a = i + 1; a <= x.r(); ++a) framing.push_back(fm.at(x.framing[a - 1]));
  return FramedCactus::from_graph(std::move(out), fm.at(x.base_tail()), framing);
}

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm perm_compose(const Perm& s, const Perm& t) {
  Perm out(t.size());
  for (size_t i = 0; i < t.size(); ++i) out[i] = s[t[i] - 1];
  return out;
}

Perm perm_inverse(const Perm& s) {
  Perm out(s.size());
  for (size_t i = 0; i < s.size(); ++i) out[s[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

bool perm_valid(const Perm& s) {
  std::vector<int> seen(s.size() + 1, 0);
  for (int v : s) {
    if (v < 1 || v > static_cast<int>(s.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm perm_from_cycles(const std::string& text, int n) {
  Perm p = perm_identity(n);
  size_t pos = 0;
  auto fail = [&]() { throw std::invalid_argument("bad permutation '" + text + "'"); };
  while (pos < text.size()) {
    if (text[pos] != '(') fail();
    auto close = text.find(')', pos);
    if (close == std::string::npos) fail();
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> cyc;
    if (body.find(',') != std::string::npos) {
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) cyc.push_back(std::stoi(item));
    } else {
      for (char c : body) {
        if (c < '1' || c > '9') fail();
        cyc.push_back(c - '0');
      }
    }
    for (int v : cyc)
      if (v < 1 || v > n) fail();
    for (size_t a = 0; a < cyc.size(); ++a) p[cyc[a] - 1] = cyc[(a + 1) % cyc.size()];
    pos = close + 1;
  }
  if (!perm_valid(p)) fail();
  return p;
}

std::string perm_to_cycles(const Perm& s) {
  bool wide = s.size() > 9;
  std::string out;
  std::vector<int> seen(s.size() + 1, 0);
  for (int a = 1; a <= static_cast<int>(s.size()); ++a) {
    if (seen[a] || s[a - 1] == a) continue;
    out += '(';
    int b = a;
    bool first = true;
    while (!seen[b]) {
      seen[b] = 1;
      if (wide && !first) out += ',';
      out += std::to_string(b);
      first = false;
      b = s[b - 1];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

FramedCactus sym_action(const FramedCactus& x, const Perm& sigma) {
  if (static_cast<int>(sigma.size()) != x.r() || !perm_valid(sigma))
    throw std::invalid_argument("sym_action: bad permutation");
  FramedCactus y = x;
  for (int i = 1; i <= x.r(); ++i) {
    y.shape.cycles[i] = x.cycles()[sigma[i - 1]];
    y.framing[i - 1] = x.framing[sigma[i - 1] - 1];
  }
  return y;
}

namespace {

std::vector<int> bfs_order(const RibbonGraph& g, int start, std::vector<int>& label) {
  label.assign(g.flag_bound(), -1);
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
  return order;
}

CactusKey key_impl(const DecoratedCactus& x, const std::vector<int>* framing) {
  const auto& g = x.graph;
  std::vector<int> label;
  auto order = bfs_order(g, x.base_tail, label);
  auto own = owners(x);
  CactusKey key;
  key.reserve(3 * order.size() + 2 + x.r());
  key.push_back(static_cast<int>(order.size()));
  key.push_back(x.r());
  for (int f : order) {
    key.push_back(label[g.iota(f)]);
    key.push_back(label[g.next(f)]);
    key.push_back(own[f]);
  }
  if (framing)
    for (int f : *framing) key.push_back(label[f]);
  return key;
}

}  // namespace

CactusKey cactus_key(const FramedCactus& x) { return key_impl(x.shape, &x.framing); }
CactusKey cactus_key(const DecoratedCactus& x) { return key_impl(x, nullptr); }
bool isomorphic(const FramedCactus& a, const FramedCactus& b) { return cactus_key(a) == cactus_key(b); }
bool isomorphic(const DecoratedCactus& a, const DecoratedCactus& b) { return cactus_key(a) == cactus_key(b); }

FramedCactus normalize_ids(const FramedCactus& x) {
  const auto& g = x.graph();
  std::vector<int> label;
  auto order = bfs_order(g, x.base_tail(), label);
  std::map<int, int> vmap;
  for (int f : order) vmap.emplace(g.lambda(f), static_cast<int>(vmap.size()));
  int n = static_cast<int>(order.size());
  std::vector<int> lam(n), io(n), nx(n), verts;
  for (int f : order) {
    lam[label[f]] = vmap[g.lambda(f)];
    io[label[f]] = label[g.iota(f)];
    nx[label[f]] = label[g.next(f)];
  }
  for (int v = 0; v < static_cast<int>(vmap.size()); ++v) verts.push_back(v);
  std::vector<int> framing;
  for (int f : x.framing) framing.push_back(label[f]);
  return FramedCactus::from_graph(RibbonGraph(verts, lam, io, nx, RibbonGraph::Unchecked{}), 0, framing);
}

int lobes_at(const DecoratedCactus& x, int v) {
  auto own = owners(x);
  int n = 0;
  for (int f : x.graph.flags_at(v)) n += own[f] > 0;
  return n;
}

int d_invariant(const DecoratedCactus& x) {
  auto own = owners(x);
  int d = 0;
  for (int v : x.graph.vertices()) {
    auto fs = x.graph.flags_at(v);
    int val = static_cast<int>(fs.size()), lobes = 0;
    for (int f : fs) lobes += own[f] > 0;
    bool good = (val == 4 && lobes == 2) || (val == 3 && lobes == 1);
    d += !good;
  }
  return d;
}

bool is_degenerate(const FramedCactus& x) {
  const auto& g = x.graph();
  std::set<int> marked;
  for (int f : x.framing) marked.insert(g.lambda(f));
  for (int v : g.vertices())
    if (g.valence(v) == 2 && !marked.count(v)) return true;
  return false;
}

}  // namespace cactop
