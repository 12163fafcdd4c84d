#include <algorithm>
#include <set>

#include "cactop/enumerate.hpp"
#include "cactop/generators.hpp"
#include "doctest.h"

using namespace cactop;

namespace {

bool valid(const FramedCactus& x) {
  return !validate(x.graph(), x.cycles(), x.base_tail()).has_value();
}

int position(const std::vector<int>& c, int f) {
  return static_cast<int>(std::find(c.begin(), c.end(), f) - c.begin());
}

}  // namespace

TEST_CASE("generators are valid cacti with the right profiles") {
  for (int k = 0; k <= 5; ++k) {
    CHECK(valid(zeta(k)));
    CHECK(zeta(k).profile() == Profile{k, {}});
    CHECK(valid(epsilon(k)));
    CHECK(epsilon(k).profile() == Profile{k, {k}});
    CHECK(has_canonical_framing(epsilon(k)));
    CHECK(valid(j_cactus(k)));
    CHECK(j_cactus(k).profile() == Profile{0, {k}});
  }
  for (int k = 1; k <= 5; ++k) {
    CHECK(valid(tau(k)));
    CHECK_FALSE(has_canonical_framing(tau(k)));
    for (int i = 0; i <= k; ++i) {
      CHECK(valid(delta_face(k, i)));
      CHECK(delta_face(k, i).profile() == Profile{k, {k - 1}});
      CHECK(has_canonical_framing(delta_face(k, i)));
    }
  }
  for (int k = 1; k <= 4; ++k)
    for (int i = 1; i <= k; ++i)
      for (int l = 0; l <= 4; ++l) {
        auto b = beta(k, i, l);
        CHECK(valid(b));
        CHECK(b.profile() == Profile{k + l - 1, {k, l}});
        CHECK(has_canonical_framing(b));
      }
  for (int k = 0; k <= 4; ++k)
    for (int i = 0; i <= k; ++i) CHECK(sigma_degeneracy(k, i).profile() == Profile{k, {k + 1}});
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) CHECK(alpha(k, l).profile() == Profile{k + l, {k, l}});
}

TEST_CASE("validation reports the violated clause") {
  auto e = epsilon(2);
  auto cycles = e.cycles();
  std::swap(cycles[0], cycles[1]);
  auto v = validate(e.graph(), cycles, e.base_tail());
  REQUIRE(v.has_value());
  CHECK(v->clause == Clause::OuterIncidence);
  auto short_cycles = e.cycles();
  short_cycles[1].pop_back();
  v = validate(e.graph(), short_cycles, e.base_tail());
  REQUIRE(v.has_value());
  CHECK(v->clause == Clause::Partition);
  v = validate(e.graph(), e.cycles(), 0);
  REQUIRE(v.has_value());
  CHECK(v->clause == Clause::BaseTail);
  CHECK_THROWS_AS(DecoratedCactus::make(e.graph(), cycles, e.base_tail()), CactusError);
  CHECK_THROWS_AS(FramedCactus::make(e.shape, {e.base_tail()}), CactusError);
}

TEST_CASE("d invariant on generators") {
  for (int k = 0; k <= 5; ++k) {
    CHECK(d_invariant(zeta(k).shape) == 1);
    CHECK(d_invariant(epsilon(k).shape) == 0);
  }
  CHECK(d_invariant(beta(3, 2, 2).shape) == 0);
  CHECK(d_invariant(delta_face(3, 1).shape) == 1);
}

TEST_CASE("lobes meet the outer cycle in reverse order and lambda is injective on lobes") {
  for (auto p : profiles_up_to(2, 2, 4)) {
    for (const auto& x : enumerate_cacti(p, true)) {
      const auto& g = x.graph();
      const auto& c0 = x.cycles()[0];
      for (int i = 1; i <= x.r(); ++i) {
        const auto& ci = x.cycles()[i];
        std::set<int> verts;
        for (int f : ci) verts.insert(g.lambda(f));
        CHECK(verts.size() == ci.size());
        // iota(f_0) > iota(f_1) > ... cyclically in c_0: the c_0 positions
        // read along c_i step backwards around c_0.
        int m = static_cast<int>(ci.size());
        if (m < 3) continue;
        for (int j = 0; j < m; ++j) {
          int a = position(c0, g.iota(ci[j])), b = position(c0, g.iota(ci[(j + 1) % m])),
              c = position(c0, g.iota(ci[(j + 2) % m]));
          // a > b > c cyclically: going forward from c we meet b before a.
          int n = static_cast<int>(c0.size());
          CHECK(((b - c + n) % n) < ((a - c + n) % n));
        }
      }
    }
  }
}

TEST_CASE("canonical framing points at the base vertex") {
  auto e = epsilon(3);
  CHECK(canonical_framing(e.shape) == std::vector<int>{0});
  auto t = tau(3);
  CHECK(t.framing == std::vector<int>{9});
  // tau_k^(k+1) is the unit.
  for (int k = 1; k <= 4; ++k) {
    FramedCactus x = epsilon(k);
    for (int s = 0; s <= k; ++s) {
      if (s > 0) CHECK_FALSE(isomorphic(x, epsilon(k)));
      x = compose(x, 1, tau(k));
    }
    CHECK(isomorphic(x, epsilon(k)));
  }
}

TEST_CASE("beta is characterised by condition (*) and its attachment vertex") {
  for (int k = 1; k <= 4; ++k)
    for (int l = 0; l <= 3; ++l) {
      int count = 0;
      for (const auto& x : enumerate_cacti(Profile{k + l - 1, {k, l}}, false)) {
        const auto& g = x.graph();
        std::set<int> v1, v2, tails;
        for (int f : x.cycles()[1]) v1.insert(g.lambda(f));
        for (int f : x.cycles()[2]) v2.insert(g.lambda(f));
        for (int f : g.tails()) tails.insert(g.lambda(f));
        std::vector<int> shared;
        std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(shared));
        if (shared.size() != 1) continue;
        int vx = shared[0];
        bool star = !tails.count(vx) && tails.size() == g.tails().size() &&
                    g.tails().size() == g.vertices().size() - 1;
        if (!star) continue;
        ++count;
        if (!v1.count(g.lambda(x.base_tail()))) continue;
        int f = x.base_tail();
        int i = 0;
        for (int step = 1; step <= 2 * k; ++step) {
          f = g.next(g.iota(f));
          if (step % 2 == 0 && g.lambda(f) == vx) {
            i = step / 2;
            break;
          }
        }
        REQUIRE(i >= 1);
        CHECK(isomorphic(x, beta(k, i, l)));
      }
      CHECK(count == k + l);
    }
}

TEST_CASE("composition unit laws and symmetric action") {
  auto x = compose(beta(3, 2, 2), 2, tau(2));
  CHECK(valid(x));
  CHECK(isomorphic(compose(epsilon(x.profile().k), 1, x), x));
  for (int i = 1; i <= x.r(); ++i) CHECK(isomorphic(compose(x, i, epsilon(x.profile().lobes[i - 1])), x));
  auto y = compose(compose(beta(2, 1, 2), 1, beta(2, 2, 1)), 3, beta(2, 1, 1));
  REQUIRE(y.r() == 4);
  Perm s = perm_from_cycles("(123)", 4), t = perm_from_cycles("(24)", 4);
  CHECK(isomorphic(sym_action(sym_action(y, s), t), sym_action(y, perm_compose(s, t))));
  CHECK(isomorphic(sym_action(y, perm_identity(4)), y));
}

TEST_CASE("composition of canonically framed cacti stays canonical") {
  auto b = beta(2, 2, 2);
  for (const auto& y : enumerate_cacti(Profile{2, {1, 1}}, false)) {
    auto z = compose(b, 1, y);
    CHECK(valid(z));
    CHECK(has_canonical_framing(z));
  }
}

TEST_CASE("degenerate cacti have a free vertex") {
  CHECK(is_degenerate(j_cactus(1)));
  auto twisted = compose(j_cactus(1), 1, tau(1));
  CHECK_FALSE(is_degenerate(twisted));
  CHECK_FALSE(is_degenerate(epsilon(0)));
  CHECK_FALSE(is_degenerate(alpha(0, 0)));
}

TEST_CASE("permutation cycle notation round trips") {
  for (std::string s : {"(12)", "(123)", "(13)(24)", "()"}) CHECK(perm_to_cycles(perm_from_cycles(s, 4)) == s);
  CHECK(perm_from_cycles("(321)", 3) == Perm{3, 1, 2});
  CHECK(perm_from_cycles("(123)", 3) == Perm{2, 3, 1});
  CHECK_THROWS(perm_from_cycles("(15)", 4));
}
