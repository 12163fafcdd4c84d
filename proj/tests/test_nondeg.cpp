#include <set>

#include "cactop/enumerate.hpp"
#include "cactop/generators.hpp"
#include "cactop/nondeg.hpp"
#include "cactop/random.hpp"
#include "doctest.h"

using namespace cactop;

TEST_CASE("nondegenerate bases") {
  NondegComplex c0(0, false), f0(0, true);
  CHECK(c0.basis_size() == 1);
  CHECK(f0.basis_size() == 1);
  CHECK(cactus_key(c0.basis(0)[0]) == cactus_key(zeta(0)));
  for (int r = 1; r <= 3; ++r)
    for (bool framed : {false, true}) {
      if (framed && r == 3) continue;
      NondegComplex c(r, framed);
      for (int n : c.complex().degrees()) {
        std::set<std::string> names(c.complex().basis(n).begin(), c.complex().basis(n).end());
        CHECK(names.size() == c.complex().basis(n).size());
        for (const auto& x : c.basis(n)) {
          CHECK_FALSE(is_degenerate(x));
          CHECK(x.profile().k == 0);
          CHECK(profile_edges(x.profile()) <= nondeg_edge_bound(r, framed));
          if (!framed) CHECK(has_canonical_framing(x));
        }
      }
    }
}

TEST_CASE("homology totals and Betti baselines") {
  int fact = 1;
  for (int r = 0; r <= 3; ++r) {
    if (r > 0) fact *= r;
    NondegComplex c(r, false);
    CHECK(c.total_betti() == fact);
    int chi = 0;
    for (auto [n, b] : c.betti()) chi += (n % 2 == 0 ? 1 : -1) * b;
    CHECK(chi == euler_characteristic(c.complex()));
  }
  CHECK(NondegComplex(2, false).betti() == std::map<int, int>{{0, 1}, {1, 1}});
  CHECK(NondegComplex(3, false).betti() == std::map<int, int>{{0, 1}, {1, 3}, {2, 2}});
  CHECK(NondegComplex(1, true).betti() == std::map<int, int>{{0, 1}, {1, 1}});
  CHECK(NondegComplex(2, true).betti() == std::map<int, int>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
  CHECK(NondegComplex(2, true).total_betti() == 8);
}

TEST_CASE("homology representatives are independent cycles") {
  NondegComplex c(2, true);
  for (int n : c.complex().degrees()) {
    auto reps = c.representatives(n);
    for (size_t a = 0; a < reps.size(); ++a) {
      CHECK(c.is_cycle(reps[a]));
      CHECK_FALSE(c.boundary_witness(reps[a]).has_value());
      for (size_t b = a + 1; b < reps.size(); ++b) CHECK_FALSE(c.boundary_witness(reps[a] - reps[b]).has_value());
    }
  }
}

TEST_CASE("boundaries have witnesses") {
  NondegComplex c(2, true);
  for (int n : c.complex().degrees())
    for (const auto& x : c.basis(n)) {
      auto z = nondeg_differential(CactusChain::single(x));
      auto w = c.boundary_witness(z);
      REQUIRE(w.has_value());
      CHECK(nondeg_differential(*w) == z);
    }
}

TEST_CASE("nondegenerate differential squares to zero") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = project_nondeg(random_chain(rng, 1 + trial % 3, 0, 3, 3, true));
    CHECK(nondeg_differential(nondeg_differential(x)).empty());
    CHECK(nondeg_differential(x) == project_nondeg(differential_inner_unfolded(x)));
  }
}

TEST_CASE("nondegenerate composition") {
  Rng rng(32);
  auto e0 = CactusChain::single(epsilon(0));
  for (int trial = 0; trial < 15; ++trial) {
    auto x = project_nondeg(random_chain(rng, 2, 0, 2, 2, true));
    auto y = project_nondeg(random_chain(rng, 2, 0, 2, 1, false));
    auto z = project_nondeg(random_chain(rng, 1, 0, 2, 1, true));
    CHECK(compose_nondeg(x, 1, e0) == x);
    CHECK(compose_nondeg(e0, 1, z) == z);
    CHECK(compose_nondeg(compose_nondeg(x, 2, y), 3, z) == compose_nondeg(x, 2, compose_nondeg(y, 2, z)));
    // Leibniz rule in the quotient.
    for (const auto& [key, e] : x.terms()) {
      auto X = CactusChain::single(e.cactus, e.coeff);
      int sign = e.cactus.degree() % 2 == 0 ? 1 : -1;
      CHECK(nondeg_differential(compose_nondeg(X, 1, y)) ==
            compose_nondeg(nondeg_differential(X), 1, y) + Rational(sign) * compose_nondeg(X, 1, nondeg_differential(y)));
    }
  }
}

TEST_CASE("Ger and BV relations hold up to boundaries") {
  for (const auto& c : verify_bv_relations()) CHECK_MESSAGE(c.ok(), c.name << ": " << c.defect.str());
  // Negative controls: wrong relations are detected.
  NondegComplex f2(2, true), u2(2, false);
  auto a = ger_a(), b = ger_b(), D = bv_delta();
  auto wrong = b + (compose_nondeg(D, 1, a) - compose_nondeg(a, 1, D) - compose_nondeg(a, 2, D));
  CHECK(f2.is_cycle(wrong));
  CHECK_FALSE(f2.boundary_witness(wrong).has_value());
  CHECK_FALSE(u2.boundary_witness(a).has_value());
  CHECK_FALSE(u2.boundary_witness(b).has_value());
}
