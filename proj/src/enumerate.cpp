#include "cactop/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cactop {

int profile_edges(const Profile& p) {
  int e = 0;
  for (int l : p.lobes) e += l + 1;
  return e;
}

namespace {

// Outer flags are 0..m-1 (m = E+k+1, flag 0 is the base tail) in N o iota
// order; lobe i owns flags base[i]..base[i]+l_i, also in N o iota order,
// starting at its framing flag. partner[j] gives iota of outer flag j
// (j itself for tails). Returns false unless the result has genus zero and
// is connected.
bool build(const Profile& p, const std::vector<int>& partner, FramedCactus& out) {
  const int m = static_cast<int>(partner.size());
  std::vector<int> base;
  int n = m;
  for (int l : p.lobes) {
    base.push_back(n);
    n += l + 1;
  }
  std::vector<int> io(n), phi(n), owner(n, 0);
  for (int j = 0; j < m; ++j) {
    io[j] = partner[j];
    if (partner[j] != j) io[partner[j]] = j;
    phi[j] = (j + 1) % m;
  }
  for (int i = 0; i < p.r(); ++i)
    for (int a = 0; a <= p.lobes[i]; ++a) {
      phi[base[i] + a] = base[i] + (a + 1) % (p.lobes[i] + 1);
      owner[base[i] + a] = i + 1;
    }
  std::vector<int> nx(n), lam(n, -1);
  for (int f = 0; f < n; ++f) nx[f] = phi[io[f]];
  int nv = 0;
  for (int f = 0; f < n; ++f) {
    if (lam[f] >= 0) continue;
    for (int g = f; lam[g] < 0; g = nx[g]) lam[g] = nv;
    ++nv;
  }
  if (nv != profile_edges(p) - p.r() + 1) return false;
  std::vector<int> verts(nv);
  std::iota(verts.begin(), verts.end(), 0);
  RibbonGraph g(verts, lam, io, nx, RibbonGraph::Unchecked{});
  if (!g.connected()) return false;
  out = FramedCactus::from_graph(std::move(g), 0, base);
  return true;
}

struct NonCrossing {
  const Profile& p;
  bool framed;
  std::vector<FramedCactus>& out;
  int slots;
  std::vector<int> label;  // per outer position 1..slots: 0 tail, i lobe
  std::vector<int> used;
  std::vector<int> stack;
  int tails_left;

  void emit() {
    // Positions of each lobe, then every rotation choice.
    std::vector<std::vector<int>> pos(p.r());
    for (int j = 0; j < slots; ++j)
      if (label[j] > 0) pos[label[j] - 1].push_back(j + 1);
    std::vector<int> rot(p.r(), 0);
    std::vector<int> base;
    int n = slots + 1;
    for (int l : p.lobes) {
      base.push_back(n);
      n += l + 1;
    }
    while (true) {
      std::vector<int> partner(slots + 1);
      std::iota(partner.begin(), partner.end(), 0);
      for (int i = 0; i < p.r(); ++i) {
        int sz = p.lobes[i] + 1;
        // iota(f_j) = pos[(s - j) mod sz]
        for (int jj = 0; jj < sz; ++jj) partner[pos[i][((rot[i] - jj) % sz + sz) % sz]] = base[i] + jj;
      }
      FramedCactus x;
      if (build(p, partner, x) && (framed || has_canonical_framing(x))) out.push_back(std::move(x));
      int i = 0;
      while (i < p.r() && ++rot[i] > p.lobes[i]) rot[i++] = 0;
      if (i == p.r()) break;
    }
  }

  void rec(int j) {
    if (j == slots) {
      emit();
      return;
    }
    if (tails_left > 0) {
      label[j] = 0;
      --tails_left;
      rec(j + 1);
      ++tails_left;
    }
    if (!stack.empty()) {
      int i = stack.back();
      label[j] = i;
      ++used[i];
      bool done = used[i] == p.lobes[i - 1] + 1;
      if (done) stack.pop_back();
      rec(j + 1);
      if (done) stack.push_back(i);
      --used[i];
    }
    for (int i = 1; i <= p.r(); ++i) {
      if (used[i] != 0) continue;
      label[j] = i;
      used[i] = 1;
      bool done = p.lobes[i - 1] == 0;
      if (!done) stack.push_back(i);
      rec(j + 1);
      if (!done) stack.pop_back();
      used[i] = 0;
    }
  }
};

}  // namespace

std::vector<FramedCactus> enumerate_cacti(const Profile& p, bool framed) {
  std::vector<FramedCactus> out;
  int e = profile_edges(p);
  NonCrossing nc{p, framed, out, e + p.k, std::vector<int>(e + p.k), std::vector<int>(p.r() + 1, 0), {}, p.k};
  nc.rec(0);
  return out;
}

std::vector<FramedCactus> enumerate_cacti_bruteforce(const Profile& p, bool framed) {
  std::vector<FramedCactus> out;
  const int e = profile_edges(p), slots = e + p.k;
  std::vector<int> lobe_flags;
  int n = slots + 1;
  for (int l : p.lobes)
    for (int a = 0; a <= l; ++a) lobe_flags.push_back(n++);
  std::vector<int> choose(slots, 0);
  std::fill(choose.begin(), choose.begin() + p.k, 1);  // 1 marks a tail
  std::sort(choose.begin(), choose.end());
  std::set<CactusKey> seen;
  do {
    std::vector<int> free;
    for (int j = 0; j < slots; ++j)
      if (!choose[j]) free.push_back(j + 1);
    std::vector<int> perm = lobe_flags;
    do {
      std::vector<int> partner(slots + 1);
      std::iota(partner.begin(), partner.end(), 0);
      for (size_t a = 0; a < free.size(); ++a) partner[free[a]] = perm[a];
      FramedCactus x;
      if (build(p, partner, x) && (framed || has_canonical_framing(x)) && seen.insert(cactus_key(x)).second)
        out.push_back(std::move(x));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(choose.begin(), choose.end()));
  return out;
}

std::vector<Profile> profiles_up_to(int r, int max_k, int max_edges) {
  std::vector<Profile> out;
  std::vector<int> l(r, 0);
  for (int k = 0; k <= max_k; ++k) {
    std::function<void(int, int)> rec = [&](int i, int budget) {
      if (i == r) {
        out.push_back(Profile{k, l});
        return;
      }
      for (int v = 0; v + 1 <= budget; ++v) {
        l[i] = v;
        rec(i + 1, budget - v - 1);
      }
    };
    rec(0, max_edges);
  }
  return out;
}

}  // namespace cactop
