#include "cactop/generators.hpp"

#include <map>
#include <stdexcept>

namespace cactop {

FramedCactus zeta(int k) {
  if (k < 0) throw std::invalid_argument("zeta: k < 0");
  int n = k + 1;
  std::vector<int> lam(n, 0), io(n), nx(n);
  for (int i = 0; i < n; ++i) {
    io[i] = i;
    nx[i] = (i + 1) % n;
  }
  return FramedCactus::from_graph(RibbonGraph({0}, lam, io, nx, RibbonGraph::Unchecked{}), 0, {});
}

namespace {

// Flags of epsilon_k: f-_i = 3i, f+_i = 3i+1, t_i = 3i+2, all at vertex i.
RibbonGraph epsilon_graph(int k) {
  int n = 3 * (k + 1);
  std::vector<int> lam(n), io(n), nx(n), verts;
  for (int i = 0; i <= k; ++i) {
    int fm = 3 * i, fp = 3 * i + 1, t = 3 * i + 2;
    lam[fm] = lam[fp] = lam[t] = i;
    nx[fm] = t;
    nx[fp] = fm;
    nx[t] = fp;
    io[t] = t;
    int fm_next = 3 * ((i + 1) % (k + 1));
    io[fp] = fm_next;
    io[fm_next] = fp;
    verts.push_back(i);
  }
  return RibbonGraph(verts, lam, io, nx, RibbonGraph::Unchecked{});
}

}  // namespace

FramedCactus epsilon(int k) {
  if (k < 0) throw std::invalid_argument("epsilon: k < 0");
  return FramedCactus::from_graph(epsilon_graph(k), 2, {0});
}

FramedCactus tau(int k) {
  if (k < 1) throw std::invalid_argument("tau: k < 1");
  return FramedCactus::from_graph(epsilon_graph(k), 2, {3 * k});
}

FramedCactus graft(const FramedCactus& x, int a, const FramedCactus& y) {
  const auto& gx = x.graph();
  const auto& gy = y.graph();
  if (!gx.has_flag(a) || !gx.is_tail(a)) throw std::invalid_argument("graft: not a tail");
  const int fx = gx.flag_bound(), vx = gx.vertex_bound();
  const int ty = y.base_tail();
  const int n = fx + gy.flag_bound();
  std::vector<int> lam(n, -1), io(n, -1), nx(n, -1);
  for (int f : gx.flags()) {
    lam[f] = gx.lambda(f);
    io[f] = gx.iota(f);
    nx[f] = gx.next(f);
  }
  const int v = gx.lambda(a), vy = gy.lambda(ty);
  for (int f : gy.flags()) {
    lam[fx + f] = gy.lambda(f) == vy ? v : vx + gy.lambda(f);
    io[fx + f] = fx + gy.iota(f);
    nx[fx + f] = fx + gy.next(f);
  }
  std::vector<int> verts = gx.vertices();
  for (int w : gy.vertices())
    if (w != vy) verts.push_back(vx + w);
  // Splice: prev(a) -> N(t') ... -> prev(t') -> N(a).
  int pa = gx.prev(a), na = gx.next(a);
  int pt = fx + gy.prev(ty), nt = fx + gy.next(ty);
  bool x_alone = pa == a, y_alone = nt == fx + ty;
  if (y_alone && !x_alone) {
    nx[pa] = na;
  } else if (x_alone && !y_alone) {
    nx[pt] = nt;
  } else if (!x_alone) {
    nx[pa] = nt;
    nx[pt] = na;
  }
  lam[a] = io[a] = nx[a] = -1;
  lam[fx + ty] = io[fx + ty] = nx[fx + ty] = -1;
  RibbonGraph g(verts, lam, io, nx, RibbonGraph::Unchecked{});
  std::map<int, int> fm;
  RibbonGraph c = compact(g, &fm);
  std::vector<int> framing;
  for (int f : x.framing) framing.push_back(fm.at(f));
  // Provisional framing for y's lobes; made canonical below.
  for (int f : y.framing) framing.push_back(fm.at(fx + f));
  FramedCactus out = FramedCactus::from_graph(std::move(c), fm.at(x.base_tail()), framing);
  auto canon = canonical_framing(out.shape);
  for (int i = x.r(); i < out.r(); ++i) framing[i] = canon[i];
  return FramedCactus::make(out.shape, framing);
}

FramedCactus beta(int k, int i, int l) {
  if (k < 1 || i < 1 || i > k || l < 0) throw std::invalid_argument("beta: need 1 <= i <= k, l >= 0");
  // Tail t_i of epsilon_k is flag 3i+2.
  return graft(epsilon(k), 3 * i + 2, epsilon(l));
}

FramedCactus delta_face(int k, int i) {
  if (k < 1 || i < 0 || i > k) throw std::invalid_argument("delta: need 0 <= i <= k, k >= 1");
  if (i == 0) return compose(beta(2, 2, k - 1), 1, zeta(2));
  if (i == k) return compose(beta(2, 1, k - 1), 1, zeta(2));
  return compose(beta(k - 1, i, 2), 2, zeta(2));
}

FramedCactus sigma_degeneracy(int k, int i) {
  if (k < 0 || i < 0 || i > k) throw std::invalid_argument("sigma: need 0 <= i <= k");
  return compose(beta(k + 1, i + 1, 0), 2, zeta(0));
}

FramedCactus alpha(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("alpha: negative index");
  return compose(beta(k + 1, k + 1, l), 1, delta_face(k + 1, k + 1));
}

FramedCactus j_cactus(int k) {
  if (k < 0) throw std::invalid_argument("j: k < 0");
  std::vector<int> drop;
  for (int i = 1; i <= k; ++i) drop.push_back(3 * i + 2);
  RibbonGraph g = remove_flags(epsilon_graph(k), drop);
  return FramedCactus::from_graph(std::move(g), 2, {0});
}

FramedCactus twist(const FramedCactus& x, int i, int n) {
  FramedCactus out = x;
  int l = static_cast<int>(x.cycles()[i].size()) - 1;
  for (int s = 0; s < n; ++s) out = compose(out, i, tau(l));
  return out;
}

}  // namespace cactop
