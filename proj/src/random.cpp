#include "cactop/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cactop {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

TermPtr random_term(Rng& rng, int r, int k, int max_lobe, bool framed) {
  if (r < 0 || k < 0 || max_lobe < 0) throw std::invalid_argument("random_term: negative parameter");
  if (r == 0) return gen_Z(k);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const int d = uniform(rng, 0, 2);
    const int rr = r + d;
    const int total = k + rr - 1;
    std::vector<int> colours(rr, 0);
    for (int u = 0; u < total; ++u) ++colours[uniform(rng, 0, rr - 1)];
    if (std::any_of(colours.begin(), colours.begin() + r, [&](int c) { return c > max_lobe; })) continue;
    if (rr == 1 && colours[0] != k) continue;
    std::vector<int> order(rr);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    TermPtr w = gen_E(colours[order[0]]);
    int out = colours[order[0]];
    bool ok = true;
    for (int a = 1; a < rr && ok; ++a) {
      if (out < 1) {
        ok = false;
        break;
      }
      int n = colours[order[a]];
      w = comp(gen_B(out, uniform(rng, 1, out), n), 1, w);
      out += n - 1;
    }
    if (!ok) continue;
    Perm sigma(rr);
    for (int a = 0; a < rr; ++a) sigma[order[a]] = a + 1;
    TermPtr t = sigma == perm_identity(rr) ? w : sym(w, sigma);
    for (int a = r; a < rr; ++a) t = comp(t, r + 1, gen_Z(colours[a]));
    if (framed)
      for (int s = 1; s <= r; ++s)
        if (colours[s - 1] >= 1) {
          int e = uniform(rng, 0, colours[s - 1]);
          if (e > 0) t = comp(t, s, gen_T(colours[s - 1], e));
        }
    return t;
  }
  throw std::runtime_error("random_term: no term found");
}

FramedCactus random_cactus(Rng& rng, int r, int k, int max_lobe, bool framed) {
  FramedCactus x = evaluate(*random_term(rng, r, k, max_lobe, framed));
  if (!framed) x = FramedCactus::make(x.shape, canonical_framing(x.shape));
  return x;
}

CactusChain random_chain(Rng& rng, int r, int max_k, int max_lobe, int terms, bool framed) {
  CactusChain out(r);
  for (int a = 0; a < terms; ++a) {
    int c = uniform(rng, -3, 3);
    if (c == 0) c = 1;
    out.add(random_cactus(rng, r, uniform(rng, 0, max_k), max_lobe, framed), c);
  }
  return out;
}

}  // namespace cactop
