#include "cactop/action.hpp"
#include "cactop/generators.hpp"
#include "doctest.h"

using namespace cactop;

TEST_CASE("generators act by the operad structure of End(A)") {
  EndOperad E(dga_truncated());
  Rng rng(3);
  auto f = E.random(rng, 2, 1), g = E.random(rng, 1, -1);
  CHECK(act_cactus(E, nullptr, zeta(0), {}) == E.unit());
  CHECK(act_cactus(E, nullptr, zeta(1), {}) == E.id());
  CHECK(act_cactus(E, nullptr, zeta(2), {}) == E.mu());
  CHECK(act_cactus(E, nullptr, epsilon(2), {f}) == f);
  CHECK(act_cactus(E, nullptr, beta(2, 2, 1), {f, g}) == E.compose(f, 2, g));
  CHECK_THROWS_AS(act_cactus(E, nullptr, tau(2), {f}), std::invalid_argument);
  CHECK_THROWS_AS(act_cactus(E, nullptr, beta(2, 2, 1), {g, f}), std::invalid_argument);
}

TEST_CASE("relation invariance of the action") {
  for (const auto& a : {dga_dual_numbers(), dga_truncated()}) {
    Rng rng(5);
    auto r = relation_invariance_suite(a, rng, 2, 2);
    for (const auto& f : r.failures) MESSAGE(a.name << ": " << f);
    CHECK(r.checks > 0);
    CHECK(r.ok());
  }
}

TEST_CASE("alpha, beta and rho act by the Hochschild operations") {
  for (const auto& a : {dga_rationals(), dga_dual_numbers(), dga_truncated()}) {
    Rng rng(6);
    auto r = element_action_suite(a, rng, 4, 6);
    for (const auto& f : r.failures) MESSAGE(a.name << ": " << f);
    CHECK(r.ok());
  }
}
