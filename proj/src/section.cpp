#include "cactop/section.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cactop {

namespace {

struct EdgeOrders {
  std::vector<int> outer;   // c_0 flag of edge j (j in <_out order)
  std::vector<int> inner;   // rank of edge j in <_inn
  std::vector<bool> prime;  // edge j in E'
};

EdgeOrders edge_orders(const FramedCactus& x) {
  const auto& g = x.graph();
  EdgeOrders o;
  for (int f : x.cycles()[0])
    if (!g.is_tail(f)) o.outer.push_back(f);
  std::vector<int> rank(g.flag_bound(), -1);
  std::vector<bool> framing(g.flag_bound(), false);
  int n = 0;
  for (int i = 1; i <= x.r(); ++i) {
    framing[x.cycles()[i].front()] = true;
    for (int f : x.cycles()[i]) rank[f] = n++;
  }
  for (int f : o.outer) {
    int h = g.iota(f);
    if (rank[h] < 0) throw std::logic_error("section: edge without a lobe flag");
    o.inner.push_back(rank[h]);
    o.prime.push_back(!framing[h]);
  }
  return o;
}

}  // namespace

FramedCactus put_tails(const FramedCactus& x, const std::vector<int>& w) {
  const auto& g = x.graph();
  if (x.profile().k != 0) throw std::invalid_argument("put_tails: cactus has extra tails");
  EdgeOrders o = edge_orders(x);
  if (w.size() != o.outer.size()) throw std::invalid_argument("put_tails: wrong number of edges");
  int extra = 0;
  for (int c : w) extra += c;
  const int n = g.flag_bound() + 3 * extra;
  std::vector<int> lam(n, -1), io(n, -1), nx(n, -1);
  for (int f : g.flags()) {
    lam[f] = g.lambda(f);
    io[f] = g.iota(f);
    nx[f] = g.next(f);
  }
  std::vector<int> verts = g.vertices();
  int next_flag = g.flag_bound(), next_vertex = g.vertex_bound();
  for (size_t j = 0; j < w.size(); ++j) {
    int f = o.outer[j];
    const int lobe_flag = g.iota(f);
    for (int c = 0; c < w[j]; ++c) {
      int g0 = next_flag++, g1 = next_flag++, g2 = next_flag++, v = next_vertex++;
      verts.push_back(v);
      lam[g0] = lam[g1] = lam[g2] = v;
      io[g0] = g0;
      io[g1] = f;
      io[f] = g1;
      io[g2] = lobe_flag;
      io[lobe_flag] = g2;
      nx[g1] = g0;
      nx[g0] = g2;
      nx[g2] = g1;
      f = g2;
    }
  }
  RibbonGraph out(std::move(verts), lam, io, nx, RibbonGraph::Unchecked{});
  return FramedCactus::from_graph(std::move(out), x.base_tail(), x.framing);
}

int section_sign_exponent(const FramedCactus& x, const std::vector<int>& w) {
  EdgeOrders o = edge_orders(x);
  const int E = static_cast<int>(w.size());
  long long s = 0;
  for (int e = 0; e < E; ++e)
    for (int f = e + 1; f < E; ++f)
      if (o.inner[e] < o.inner[f]) s += static_cast<long long>(w[e]) * w[f];
  for (int e = 0; e < E; ++e) {
    long long below = 0;
    for (int f = 0; f < E; ++f)
      if (o.prime[f] && o.inner[f] <= o.inner[e]) ++below;
    s += w[e] * below;
  }
  return static_cast<int>(s % 2);
}

CactusChain section_P(const FramedCactus& x, int K) {
  CactusChain out(x.r());
  if (x.profile().k != 0) throw std::invalid_argument("section: cactus has extra tails");
  if (x.r() == 0) {
    out.add(x, 1);
    return out;
  }
  const int E = static_cast<int>(edge_orders(x).outer.size());
  std::vector<int> w(E, 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == E - 1) {
      w[j] = left;
      out.add(put_tails(x, w), section_sign_exponent(x, w) ? -1 : 1);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      w[j] = c;
      rec(j + 1, left - c);
    }
  };
  for (int k = 0; k <= K; ++k) rec(0, k);
  return out;
}

CactusChain section_P(const CactusChain& x, int K) {
  CactusChain out(x.r());
  for (const auto& [key, e] : x.terms()) out.add(section_P(e.cactus, K), e.coeff);
  return out;
}

CactusChain compose_k0(const CactusChain& x, int i, const CactusChain& y) {
  int need = 0;
  for (const auto& [key, e] : x.terms()) {
    const auto& lobes = e.cactus.profile().lobes;
    if (i < 1 || i > static_cast<int>(lobes.size())) throw std::invalid_argument("compose_k0: slot out of range");
    need = std::max(need, lobes[i - 1]);
  }
  return quotient_Q(compose(x, i, section_P(y, need)));
}

}  // namespace cactop
