#include "cactop/chain.hpp"
#include "cactop/generators.hpp"
#include "cactop/random.hpp"
#include "doctest.h"

using namespace cactop;

namespace {

int sgn(long long n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("d squared vanishes on random chains") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int r = trial % 4;
    auto x = random_chain(rng, r, 4, 4, 2, true);
    auto dd = differential(differential(x));
    CHECK_MESSAGE(dd.empty(), x.str() << " -> " << dd.str());
  }
}

TEST_CASE("differential of the delta element") {
  // delta_{k+1} o_1 delta_k = 0 as chains, componentwise.
  for (int k = 1; k <= 5; ++k) CHECK(compose(delta_chain(k + 1), 1, delta_chain(k)).empty());
}

TEST_CASE("unfolded inner differential matches the composition path") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = random_chain(rng, 1 + trial % 3, 3, 4, 3, true);
    CHECK(differential_inner(x) == differential_inner_unfolded(x));
  }
}

TEST_CASE("Leibniz rule") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + trial % 3, s = trial % 3;
    auto x = random_cactus(rng, r, static_cast<int>(rng() % 4), 4, true);
    int i = 1 + static_cast<int>(rng() % r);
    int m = x.profile().lobes[i - 1];
    auto y = random_cactus(rng, s, m, 3, true);
    auto X = CactusChain::single(x), Y = CactusChain::single(y);
    auto lhs = differential(compose(X, i, Y));
    auto rhs = compose(differential(X), i, Y) + Rational(sgn(x.degree())) * compose(X, i, differential(Y));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("unit and associativity signs") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = CactusChain::single(random_cactus(rng, 2, static_cast<int>(rng() % 4), 3, true));
    CHECK(compose(epsilon_tilde(0, 3), 1, x) == x);
    const auto& xc = x.terms().begin()->second.cactus;
    auto p = xc.profile();
    auto y = random_cactus(rng, 1 + trial % 2, p.lobes[0], 3, true);
    auto z = random_cactus(rng, trial % 3, p.lobes[1], 3, true);
    auto Y = CactusChain::single(y), Z = CactusChain::single(z);
    int s = y.r();
    auto lhs = compose(compose(x, 1, Y), 2 + s - 1, Z);
    auto rhs = Rational(sgn(static_cast<long long>(y.degree()) * z.degree())) * compose(compose(x, 2, Z), 1, Y);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("symmetric action on chains") {
  Rng rng(23);
  auto b = beta(1, 1, 1);  // profile (1: 1,1), l m odd
  auto B = CactusChain::single(b);
  auto Bs = sym_action(B, {2, 1});
  CHECK(Bs.coeff(sym_action(b, {2, 1})) == -1);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_chain(rng, 3, 3, 3, 2, true);
    Perm s = perm_from_cycles("(12)", 3), t = perm_from_cycles("(123)", 3);
    CHECK(sym_action(sym_action(x, s), t) == sym_action(x, perm_compose(s, t)));
    CHECK(differential(sym_action(x, t)) == sym_action(differential(x), t));
    CHECK(sym_action(x, perm_identity(3)) == x);
  }
}

TEST_CASE("alpha identities") {
  const int K = 4;
  auto a = element_alpha(K);
  CHECK(alpha_component(0).size() == 1);
  CHECK(alpha_component(0).coeff(alpha(0, 0)) == 1);
  CHECK(differential(a).filter_k(0, K).empty());
  CHECK(compose(a, 1, a).filter_k(0, K) == compose(a, 2, a).filter_k(0, K));
  CHECK(a.unframed());
}

TEST_CASE("beta identities") {
  const int K = 3;
  auto b = element_beta(K);
  CHECK(differential(b).filter_k(0, K).empty());
  CHECK(sym_action(b, {2, 1}) == b);
  auto bb = compose(b, 1, element_beta(K + 1)).filter_k(0, K);
  auto sum = bb + sym_action(bb, perm_from_cycles("(123)", 3)) + sym_action(bb, perm_from_cycles("(132)", 3));
  CHECK(sum.empty());
  CHECK(b.unframed());
}

TEST_CASE("rho is a cycle") {
  const int K = 4;
  auto rho = element_rho(K);
  CHECK(differential(rho).filter_k(0, K).empty());
  CHECK(rho.homogeneous());
  CHECK(rho.degree() == 1);
}

TEST_CASE("j identity") {
  for (int k = 0; k <= 5; ++k) {
    auto lhs = compose(CactusChain::single(j_cactus(k + 1)), 1, delta_chain(k + 1));
    auto rhs = CactusChain::single(j_cactus(k), k % 2 == 1 ? 1 : 0);
    CHECK_MESSAGE(lhs == rhs, "k=" << k << " " << lhs.str());
  }
}

TEST_CASE("quotient onto k = 0") {
  Rng rng(2);
  auto x = random_chain(rng, 2, 3, 3, 4, true);
  CHECK(quotient_Q(x) == x.filter_k(0, 0));
  CHECK(quotient_Q(compose(delta_chain(1), 1, x.filter_k(0, 0))).empty());
}
