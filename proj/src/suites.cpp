#include "cactop/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "cactop/action.hpp"
#include "cactop/decompose.hpp"
#include "cactop/enumerate.hpp"
#include "cactop/generators.hpp"
#include "cactop/io.hpp"
#include "cactop/nondeg.hpp"
#include "cactop/section.hpp"

namespace cactop {

namespace {

int parity_sign(long long n) { return n % 2 == 0 ? 1 : -1; }

struct Recorder {
  SuiteResult res;
  explicit Recorder(std::string name) { res.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& detail) {
    ++res.checks;
    if (!ok && res.failures.size() < 5) res.failures.push_back(detail());
  }
};

std::string show(const FramedCactus& x) { return cactus_to_json(x).dump(); }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// pi with (x^sigma o_i y^tau) = (x o_{sigma(i)} y)^pi.
Perm equivariance_perm(const Perm& sigma, int i, const Perm& tau) {
  const int n = static_cast<int>(sigma.size()), s = static_cast<int>(tau.size());
  const int si = sigma[i - 1];
  auto place = [&](int c) { return c < si ? c : c + s - 1; };
  Perm pi;
  for (int a = 1; a < i; ++a) pi.push_back(place(sigma[a - 1]));
  for (int b = 1; b <= s; ++b) pi.push_back(si + tau[b - 1] - 1);
  for (int a = i + 1; a <= n; ++a) pi.push_back(place(sigma[a - 1]));
  return pi;
}

Perm random_perm(Rng& rng, int n) {
  Perm p = perm_identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

SuiteResult suite_relations(int bound) {
  Recorder r("relations (bound " + std::to_string(bound) + ")");
  for (const auto& rel : relation_instances(bound))
    r.check(isomorphic(evaluate(*rel.lhs), evaluate(*rel.rhs)),
            [&] { return rel.family + ": " + print_term(*rel.lhs) + " = " + print_term(*rel.rhs); });
  return r.res;
}

SuiteResult suite_operad_axioms(Rng& rng, int samples, int max_size) {
  Recorder r("operad axioms (" + std::to_string(samples) + " samples)");
  auto cactus = [&](int lobes, int k) { return random_cactus(rng, lobes, k, max_size, true); };
  for (int t = 0; t < samples; ++t) {
    const FramedCactus x = cactus(uniform(rng, 2, 3), uniform(rng, 0, max_size));
    const Profile px = x.profile();
    const int i = uniform(rng, 1, x.r());
    const FramedCactus y = cactus(uniform(rng, 1, 2), px.lobes[i - 1]);
    const int j = uniform(rng, 1, y.r());
    const FramedCactus z = cactus(uniform(rng, 0, 2), y.profile().lobes[j - 1]);
    auto ctx = [&] { return "x=" + show(x) + " y=" + show(y) + " z=" + show(z) + " i=" + std::to_string(i); };
    switch (t % 4) {
      case 0:
        r.check(isomorphic(compose(compose(x, i, y), i + j - 1, z), compose(x, i, compose(y, j, z))),
                [&] { return "sequential associativity: " + ctx(); });
        break;
      case 1: {
        int b = i == x.r() ? 1 : uniform(rng, i + 1, x.r());
        int a = std::min(i, b), c = std::max(i, b);
        if (a == c) {
          r.check(true, [] { return ""; });
          break;
        }
        const FramedCactus ya = cactus(uniform(rng, 0, 2), px.lobes[a - 1]);
        const FramedCactus zc = cactus(uniform(rng, 0, 2), px.lobes[c - 1]);
        r.check(isomorphic(compose(compose(x, a, ya), c + ya.r() - 1, zc), compose(compose(x, c, zc), a, ya)),
                [&] { return "parallel associativity: x=" + show(x) + " y=" + show(ya) + " z=" + show(zc); });
        break;
      }
      case 2:
        r.check(isomorphic(compose(epsilon(px.k), 1, x), x) && isomorphic(compose(x, i, epsilon(px.lobes[i - 1])), x),
                [&] { return "unit: " + ctx(); });
        break;
      default: {
        Perm sigma = random_perm(rng, x.r()), tau = random_perm(rng, y.r());
        FramedCactus xs = sym_action(x, sigma);
        int slot = static_cast<int>(std::find(sigma.begin(), sigma.end(), i) - sigma.begin()) + 1;
        FramedCactus lhs = compose(xs, slot, sym_action(y, tau));
        FramedCactus rhs = sym_action(compose(x, i, y), equivariance_perm(sigma, slot, tau));
        r.check(isomorphic(lhs, rhs), [&] { return "equivariance: " + ctx() + " sigma=" + perm_to_cycles(sigma); });
      }
    }
  }
  return r.res;
}

SuiteResult suite_presentation(int max_edges, int max_k) {
  Recorder r("presentation (edges <= " + std::to_string(max_edges) + ", k <= max(" + std::to_string(max_k) +
             ", " + std::to_string(max_edges) + " - edges))");
  for (int lobes = 0; lobes <= max_edges; ++lobes)
    for (const auto& p : profiles_up_to(lobes, std::max(max_k, max_edges), max_edges)) {
      if (p.k > std::max(max_k, max_edges - profile_edges(p))) continue;
      std::map<std::string, CactusKey> seen;
      for (const auto& x : enumerate_cacti(p, true)) {
        auto t = decompose(x);
        std::string s = print_term(*t);
        r.check(isomorphic(evaluate(*t), x), [&] { return "evaluate(decompose(x)) != x for " + show(x) + " term " + s; });
        auto [it, fresh] = seen.emplace(s, cactus_key(x));
        r.check(fresh, [&] { return "decompose not injective on " + p.str() + ": " + s; });
      }
    }
  return r.res;
}

SuiteResult suite_dg_identities(Rng& rng, int samples, int K) {
  Recorder r("dg identities (" + std::to_string(samples) + " random chains, k <= " + std::to_string(K) + ")");
  for (int t = 0; t < samples; ++t) {
    auto x = random_chain(rng, t % 4, 4, 4, 2, true);
    r.check(differential(differential(x)).empty(), [&] { return "d^2 != 0 on " + chain_to_json(x).dump(); });
  }
  for (int t = 0; t < samples / 4; ++t) {
    int rx = uniform(rng, 1, 3);
    auto x = random_cactus(rng, rx, uniform(rng, 0, 3), 4, true);
    int i = uniform(rng, 1, rx);
    auto y = random_cactus(rng, uniform(rng, 0, 2), x.profile().lobes[i - 1], 3, true);
    auto X = CactusChain::single(x), Y = CactusChain::single(y);
    auto lhs = differential(compose(X, i, Y));
    auto rhs = compose(differential(X), i, Y) + Rational(parity_sign(x.degree())) * compose(X, i, differential(Y));
    r.check(lhs == rhs, [&] { return "Leibniz fails for x=" + show(x) + " y=" + show(y); });
  }
  auto a = element_alpha(K);
  r.check(differential(a).filter_k(0, K).empty(), [] { return "d alpha != 0"; });
  r.check(compose(a, 1, a).filter_k(0, K) == compose(a, 2, a).filter_k(0, K), [] { return "alpha o1 alpha != alpha o2 alpha"; });
  auto b = element_beta(K);
  r.check(differential(b).filter_k(0, K).empty(), [] { return "d beta != 0"; });
  r.check(sym_action(b, {2, 1}) == b, [] { return "beta^(12) != beta"; });
  auto bb = compose(b, 1, element_beta(K + 1)).filter_k(0, K);
  auto jac = bb + sym_action(bb, perm_from_cycles("(123)", 3)) + sym_action(bb, perm_from_cycles("(132)", 3));
  r.check(jac.empty(), [&] { return "beta Jacobi sum = " + jac.str(); });
  auto rho = element_rho(K);
  r.check(differential(rho).filter_k(0, K).empty(), [] { return "d rho != 0"; });
  return r.res;
}

SuiteResult suite_section(Rng& rng, int samples, int K) {
  Recorder r("section P and quotient Q (k <= " + std::to_string(K) + ")");
  for (int t = 0; t < samples; ++t) {
    auto x = random_chain(rng, t % 4, 0, 4, 3, true);
    r.check(quotient_Q(section_P(x, K)) == x, [&] { return "Q P x != x for " + chain_to_json(x).dump(); });
    auto y = random_chain(rng, 1 + t % 3, 0, 3, 1, t % 2 == 0);
    r.check(section_P(differential_inner(y), K) == differential(section_P(y, K)).filter_k(0, K),
            [&] { return "P d != d P on " + chain_to_json(y).dump(); });
  }
  auto one = [](const FramedCactus& c) { return CactusChain::single(c); };
  r.check(section_P(epsilon(0), K) == epsilon_tilde(0, K), [] { return "P(eps_0) != sum eps_k"; });
  r.check(section_P(alpha(0, 0), K) == element_alpha(K), [] { return "P(alpha_00) != alpha"; });
  CactusChain pb(2);
  for (int k = 0; k <= K; ++k)
    for (int l = 1; l <= k + 1; ++l)
      for (int i = 1; i <= l; ++i) pb.add(beta(l, i, k + 1 - l), parity_sign(static_cast<long long>(i) * (k + 1 - l) + i - 1));
  r.check(section_P(beta(1, 1, 0), K) == pb, [] { return "P(beta_110) formula"; });
  r.check(section_P(twist(sigma_degeneracy(0, 0), 1, 1), K) == element_rho(K), [] { return "P(sigma_00 o1 tau_1) != rho"; });
  auto b = one(beta(1, 1, 0)) + sym_action(one(beta(1, 1, 0)), {2, 1});
  r.check(section_P(b, K) == -element_beta(K), [] { return "P(beta_110 + beta_110^(12)) != -beta"; });
  return r.res;
}

SuiteResult suite_homology(bool framed_r3) {
  Recorder r(std::string("homology totals") + (framed_r3 ? " (including framed r = 3)" : ""));
  int fact = 1;
  for (int n = 0; n <= 3; ++n) {
    if (n > 0) fact *= n;
    for (bool framed : {false, true}) {
      if (framed && n == 3 && !framed_r3) continue;
      NondegComplex c(n, framed);
      const int expect = framed ? fact * (1 << n) : fact;
      int chi = 0;
      for (auto [d, b] : c.betti()) chi += (d % 2 == 0 ? 1 : -1) * b;
      r.check(c.total_betti() == expect && chi == euler_characteristic(c.complex()), [&] {
        return std::string(framed ? "framed" : "unframed") + " r=" + std::to_string(n) + ": total " +
               std::to_string(c.total_betti()) + ", expected " + std::to_string(expect);
      });
    }
  }
  return r.res;
}

SuiteResult suite_bv() {
  Recorder r("Ger and BV relations up to boundaries");
  for (const auto& c : verify_bv_relations())
    r.check(c.ok(), [&] { return c.name + ": defect " + c.defect.str() + (c.cycle ? " (not a boundary)" : " (not a cycle)"); });
  return r.res;
}

std::vector<SuiteResult> suite_hochschild(const std::vector<FiniteDGA>& algebras, Rng& rng, int samples) {
  std::vector<SuiteResult> out;
  for (const auto& a : algebras)
    for (auto s : hochschild_suite(a, rng, samples)) {
      s.name = a.name + ": " + s.name;
      out.push_back(std::move(s));
    }
  return out;
}

std::vector<SuiteResult> suite_action(const std::vector<FiniteDGA>& algebras, Rng& rng, int bound, int trials) {
  std::vector<SuiteResult> out;
  for (const auto& a : algebras) {
    auto s = relation_invariance_suite(a, rng, bound, trials);
    s.name = a.name + ": " + s.name;
    out.push_back(std::move(s));
    auto e = element_action_suite(a, rng, 4, trials);
    e.name = a.name + ": " + e.name;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace cactop
