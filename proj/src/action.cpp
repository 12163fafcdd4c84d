#include "cactop/action.hpp"

#include <functional>
#include <memory>
#include <stdexcept>

#include "cactop/decompose.hpp"

namespace cactop {

namespace {

int parity_sign(long long n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

MultiMap act_term(const EndOperad& e, const CyclicStructure* tau, const Term& t, const std::vector<MultiMap>& inputs) {
  Colors c = colors(t);
  if (inputs.size() != c.in.size()) throw std::invalid_argument("action: wrong number of inputs");
  for (size_t i = 0; i < inputs.size(); ++i)
    if (inputs[i].arity() != c.in[i]) throw std::invalid_argument("action: input arity does not match the colour");
  switch (t.kind) {
    case Term::Kind::Gen:
      switch (t.gen) {
        case 'B': return e.compose(inputs[0], t.params[1], inputs[1]);
        case 'Z': return e.zeta(t.params[0]);
        case 'E': return inputs[0];
        default:
          if (!tau) throw std::invalid_argument("action: non-canonical framing needs a cyclic structure");
          return tau->tau(inputs[0], t.power);
      }
    case Term::Kind::Comp: {
      const size_t nr = colors(*t.rhs).in.size(), s = static_cast<size_t>(t.slot - 1);
      std::vector<MultiMap> inner(inputs.begin() + s, inputs.begin() + s + nr);
      std::vector<MultiMap> outer(inputs.begin(), inputs.begin() + s);
      outer.push_back(act_term(e, tau, *t.rhs, inner));
      outer.insert(outer.end(), inputs.begin() + s + nr, inputs.end());
      return act_term(e, tau, *t.lhs, outer);
    }
    case Term::Kind::Sym: {
      const size_t n = inputs.size();
      std::vector<MultiMap> moved(n);
      long long ex = 0;
      for (size_t a = 0; a < n; ++a) {
        moved[t.sigma[a] - 1] = inputs[a];
        for (size_t b = a + 1; b < n; ++b)
          if (t.sigma[a] > t.sigma[b]) ex += static_cast<long long>(inputs[a].degree()) * inputs[b].degree();
      }
      MultiMap out = act_term(e, tau, *t.lhs, moved);
      out *= parity_sign(ex);
      return out;
    }
  }
  throw std::logic_error("action: unknown term kind");
}

MultiMap act_cactus(const EndOperad& e, const CyclicStructure* tau, const FramedCactus& x,
                    const std::vector<MultiMap>& inputs) {
  if (!tau && !has_canonical_framing(x))
    throw std::invalid_argument("action: non-canonical framing needs a cyclic structure");
  return act_term(e, tau, *decompose(x), inputs);
}

Cochain truncate(const Cochain& c, int K) {
  Cochain out{c.degree, {}};
  for (const auto& [k, f] : c.comps)
    if (k <= K) out.comps.emplace(k, f);
  return out;
}

Cochain act_chain(const EndOperad& e, const CyclicStructure* tau, const CactusChain& x, const std::vector<Cochain>& ys,
                  int K) {
  int ydeg = 0;
  for (const auto& y : ys) ydeg += y.degree;
  if (x.empty()) return Cochain{ydeg, {}};
  if (x.r() != static_cast<int>(ys.size())) throw std::invalid_argument("action: lobe count does not match the inputs");
  const int xd = x.degree();
  Cochain out{xd + ydeg, {}};
  for (const auto& [key, entry] : x.terms()) {
    const Profile p = entry.cactus.profile();
    if (p.k > K) continue;
    std::vector<MultiMap> in;
    bool present = true;
    for (int i = 0; i < p.r() && present; ++i) {
      auto it = ys[i].comps.find(p.lobes[i]);
      if (it == ys[i].comps.end() || it->second.is_zero())
        present = false;
      else
        in.push_back(it->second);
    }
    if (!present) continue;
    long long s = static_cast<long long>(p.k + 1) * xd;
    int tail = 0;
    for (int i = p.r() - 1; i >= 0; --i) {
      tail += p.lobes[i];
      s += static_cast<long long>(p.k + tail) * ys[i].degree;
    }
    out.add(p.k, act_cactus(e, tau, entry.cactus, in), entry.coeff * parity_sign(s));
  }
  return out;
}

SuiteResult relation_invariance_suite(const FiniteDGA& a, Rng& rng, int bound, int trials) {
  SuiteResult res{"cactus action relation invariance", 0, {}};
  EndOperad E(a);
  std::unique_ptr<CyclicStructure> cyc;
  if (a.frobenius()) cyc = std::make_unique<CyclicStructure>(E);
  std::uniform_int_distribution<int> deg(-3, 2);
  for (const auto& rel : relation_instances(bound)) {
    Colors c = colors(*rel.lhs);
    bool framed = rel.family.rfind("tau", 0) == 0;
    if (framed && !cyc) continue;
    for (int t = 0; t < trials; ++t) {
      std::vector<MultiMap> in;
      for (int arity : c.in) in.push_back(E.random(rng, arity, deg(rng)));
      ++res.checks;
      MultiMap l = act_term(E, cyc.get(), *rel.lhs, in), r = act_term(E, cyc.get(), *rel.rhs, in);
      bool ok = l == r && act_cactus(E, cyc.get(), evaluate(*rel.lhs), in) == l;
      if (!ok && res.failures.size() < 5)
        res.failures.push_back(rel.family + ": " + print_term(*rel.lhs) + " = " + print_term(*rel.rhs));
    }
  }
  return res;
}

SuiteResult element_action_suite(const FiniteDGA& a, Rng& rng, int K, int trials) {
  SuiteResult res{"alpha, beta, rho act by the Hochschild operations; the action is a chain map", 0, {}};
  EndOperad E(a);
  Hochschild H(E);
  std::unique_ptr<CyclicStructure> cyc;
  if (a.frobenius()) cyc = std::make_unique<CyclicStructure>(E);
  const CactusChain alpha = element_alpha(K), beta = element_beta(K), rho = element_rho(K);
  std::uniform_int_distribution<int> deg(-3, 1);
  auto check = [&](bool ok, const std::string& what) {
    ++res.checks;
    if (!ok && res.failures.size() < 5) res.failures.push_back(what);
  };
  for (int t = 0; t < trials; ++t) {
    Cochain v = H.random(rng, deg(rng), 3), w = H.random(rng, deg(rng), 3);
    check(act_chain(E, cyc.get(), alpha, {v, w}, K) == truncate(H.bullet(v, w), K), "alpha acts by the product");
    check(act_chain(E, cyc.get(), beta, {v, w}, K) ==
              truncate(H.scaled(H.bracket_operadic(v, w), parity_sign(v.degree)), K),
          "beta acts by the bracket");
    if (cyc)
      check(act_chain(E, cyc.get(), rho, {v}, K) == truncate(H.bv_delta(v, *cyc), K), "rho acts by the BV operator");
    // d(x.(v,w)) = (dx).(v,w) + (-1)^{|x|} (x.(dv,w) + (-1)^{|v|} x.(v,dw)), exact in arities <= K.
    CactusChain x = random_chain(rng, 2, 2, 3, 4, cyc != nullptr);
    x = x.filter_degree(x.terms().begin()->second.cactus.degree());
    for (const CactusChain* c : std::vector<const CactusChain*>{&x, &alpha, &beta}) {
      Cochain lhs = truncate(H.boundary(act_chain(E, cyc.get(), *c, {v, w}, K)), K);
      Cochain rhs = H.sum(act_chain(E, cyc.get(), differential(*c), {v, w}, K),
                          H.sum(act_chain(E, cyc.get(), *c, {H.boundary(v), w}, K),
                                act_chain(E, cyc.get(), *c, {v, H.boundary(w)}, K), parity_sign(v.degree)),
                          parity_sign(c->degree()));
      check(lhs == rhs, "the action commutes with the differentials");
    }
    if (cyc) {
      Cochain lhs = truncate(H.boundary(act_chain(E, cyc.get(), rho, {v}, K)), K);
      Cochain rhs = H.sum(act_chain(E, cyc.get(), differential(rho), {v}, K),
                          act_chain(E, cyc.get(), rho, {H.boundary(v)}, K), -1);
      check(lhs == rhs, "the action commutes with the differentials");
    }
  }
  return res;
}

}  // namespace cactop
