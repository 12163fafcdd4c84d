#include "cactop/decompose.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cactop/generators.hpp"

namespace cactop {

namespace {

std::vector<int> owner_table(const FramedCactus& x) {
  std::vector<int> own(x.graph().flag_bound(), -1);
  for (size_t i = 0; i < x.cycles().size(); ++i)
    for (int f : x.cycles()[i]) own[f] = static_cast<int>(i);
  return own;
}

// BFS labels from the base tail, as used by the canonical key.
std::vector<int> bfs_labels(const RibbonGraph& g, int start) {
  std::vector<int> label(g.flag_bound(), -1);
  std::vector<int> order{start};
  label[start] = 0;
  for (size_t q = 0; q < order.size(); ++q)
    for (int h : {g.next(order[q]), g.iota(order[q])})
      if (label[h] < 0) {
        label[h] = static_cast<int>(order.size());
        order.push_back(h);
      }
  return label;
}

bool good_vertex(const RibbonGraph& g, const std::vector<int>& own, int v) {
  auto fs = g.flags_at(v);
  int val = static_cast<int>(fs.size()), lobes = 0;
  for (int f : fs) lobes += own[f] > 0;
  return (val == 4 && lobes == 2) || (val == 3 && lobes == 1);
}

// Replaces every bad vertex by a new lobe carrying one unit (a tail, or a
// pair iota(f_{j-1}), f_j of some lobe) per vertex.
FramedCactus blow_up(const FramedCactus& x, std::vector<int>& zeta_sizes) {
  const auto& g = x.graph();
  auto own = owner_table(x);
  auto label = bfs_labels(g, x.base_tail());
  std::vector<std::pair<int, int>> bad;  // (min label, vertex)
  for (int v : g.vertices())
    if (!good_vertex(g, own, v)) {
      int best = g.flag_bound();
      for (int f : g.flags_at(v)) best = std::min(best, label[f]);
      bad.emplace_back(best, v);
    }
  std::sort(bad.begin(), bad.end());

  int nflags = g.flag_bound();
  for (auto [lab, v] : bad) nflags += 2 * static_cast<int>(g.flags_at(v).size());
  std::vector<int> lam(nflags, -1), io(nflags, -1), nx(nflags, -1);
  for (int f : g.flags()) {
    lam[f] = g.lambda(f);
    io[f] = g.iota(f);
    nx[f] = g.next(f);
  }
  std::vector<int> verts;
  int next_vertex = g.vertex_bound(), next_flag = g.flag_bound();
  std::vector<int> framing = x.framing;
  for (auto [lab, v] : bad) {
    auto fs = g.flags_at(v);
    auto start = std::find_if(fs.begin(), fs.end(), [&](int f) { return own[f] == 0; });
    std::rotate(fs.begin(), start, fs.end());
    std::vector<std::vector<int>> units;
    for (size_t a = 0; a < fs.size();) {
      if (g.is_tail(fs[a])) {
        units.push_back({fs[a]});
        ++a;
      } else {
        if (a + 1 >= fs.size() || own[fs[a + 1]] <= 0) throw std::logic_error("blow_up: malformed vertex");
        units.push_back({fs[a], fs[a + 1]});
        a += 2;
      }
    }
    const int p = static_cast<int>(units.size());
    std::vector<int> w(p), af(p), bf(p);
    for (int q = 0; q < p; ++q) {
      w[q] = next_vertex++;
      af[q] = next_flag++;
      bf[q] = next_flag++;
    }
    for (int q = 0; q < p; ++q) {
      const auto& u = units[(p - q) % p];
      int b_prev = bf[(q + p - 1) % p];
      lam[af[q]] = w[q];
      lam[bf[q]] = w[(q + 1) % p];
      io[af[q]] = bf[q];
      io[bf[q]] = af[q];
      nx[b_prev] = af[q];
      nx[af[q]] = u.front();
      for (size_t a = 0; a < u.size(); ++a) {
        lam[u[a]] = w[q];
        nx[u[a]] = a + 1 < u.size() ? u[a + 1] : b_prev;
      }
      verts.push_back(w[q]);
    }
    framing.push_back(af[0]);
    zeta_sizes.push_back(p - 1);
  }
  for (int v : g.vertices())
    if (std::none_of(bad.begin(), bad.end(), [&](auto& b) { return b.second == v; })) verts.push_back(v);
  RibbonGraph out(verts, lam, io, nx, RibbonGraph::Unchecked{});
  std::map<int, int> fm;
  RibbonGraph c = compact(out, &fm);
  for (int& f : framing) f = fm.at(f);
  FramedCactus y = FramedCactus::from_graph(std::move(c), fm.at(x.base_tail()), framing);
  return FramedCactus::make(y.shape, canonical_framing(y.shape));
}

}  // namespace

Decomposition decompose_steps(const FramedCactus& x) {
  Decomposition d;
  const int r = x.r();
  d.unframed = FramedCactus::make(x.shape, canonical_framing(x.shape));
  for (int s = 1; s <= r; ++s) {
    const auto& c = d.unframed.cycles()[s];
    d.exponents.push_back(static_cast<int>(std::find(c.begin(), c.end(), x.framing[s - 1]) - c.begin()));
  }
  if (r == 0) return d;
  d.blown_up = blow_up(d.unframed, d.zeta_sizes);
  const auto& y = d.blown_up;
  const auto& g = y.graph();
  if (d_invariant(y.shape) != 0) throw std::logic_error("decompose: blow-up left a bad vertex");
  const int rr = y.r();
  const auto& c0 = y.cycles()[0];
  std::vector<int> pos(g.flag_bound(), -1);
  for (size_t a = 0; a < c0.size(); ++a) pos[c0[a]] = static_cast<int>(a);
  auto own = owner_table(y);
  int root = -1;
  for (int f : g.flags_at(g.lambda(y.base_tail())))
    if (own[f] > 0) root = own[f];
  // Entry position of each non-root lobe along c_0.
  std::vector<std::pair<int, int>> entries;
  for (int L = 1; L <= rr; ++L) {
    if (L == root) continue;
    int e = static_cast<int>(c0.size());
    for (int f : y.cycles()[L]) e = std::min(e, pos[g.iota(f)]);
    entries.emplace_back(e, L);
  }
  std::sort(entries.rbegin(), entries.rend());
  int tails = static_cast<int>(g.tails().size());
  std::vector<TermPtr> betas;
  for (auto [e, L] : entries) {
    int before = 0;
    for (int a = 0; a < e; ++a) before += g.is_tail(c0[a]);
    int n = static_cast<int>(y.cycles()[L].size()) - 1;
    tails -= n - 1;
    betas.push_back(gen_B(tails - 1, before, n));
    d.attachment.push_back(before);
  }
  TermPtr w;
  if (betas.empty()) {
    w = gen_E(static_cast<int>(y.cycles()[root].size()) - 1);
  } else {
    w = betas.back();
    for (int j = static_cast<int>(betas.size()) - 2; j >= 0; --j) w = comp(betas[j], 1, w);
  }
  // Leaves of W: root, then lobes by increasing entry.
  std::vector<int> leaves{root};
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) leaves.push_back(it->second);
  Perm sigma(rr);
  for (int a = 0; a < rr; ++a) sigma[leaves[a] - 1] = a + 1;
  d.word = sigma == perm_identity(rr) ? w : sym(w, sigma);
  return d;
}

TermPtr decompose(const FramedCactus& x) {
  const int r = x.r();
  if (r == 0) return gen_Z(x.profile().k);
  Decomposition d = decompose_steps(x);
  TermPtr t = d.word;
  for (int m : d.zeta_sizes) t = comp(t, r + 1, gen_Z(m));
  const auto& lobes = x.profile().lobes;
  if (t->kind == Term::Kind::Gen && t->gen == 'E' && d.exponents[0] > 0) return gen_T(lobes[0], d.exponents[0]);
  for (int s = 1; s <= r; ++s)
    if (d.exponents[s - 1] > 0) t = comp(t, s, gen_T(lobes[s - 1], d.exponents[s - 1]));
  return t;
}

}  // namespace cactop
