#include <functional>
#include <set>

#include "cactop/decompose.hpp"
#include "cactop/enumerate.hpp"
#include "cactop/generators.hpp"
#include "doctest.h"

using namespace cactop;

namespace {

bool has_zeta(const Term& t) {
  if (t.kind == Term::Kind::Gen) return t.gen == 'Z';
  if (t.kind == Term::Kind::Comp) return has_zeta(*t.lhs) || has_zeta(*t.rhs);
  return has_zeta(*t.lhs);
}

}  // namespace

TEST_CASE("term syntax round trips") {
  for (std::string s : {"B[5,4,5] o1 Z[5]", "(B[1,1,0] o1 T[1]) s(12)", "T[3]^2", "E[0]",
                        "B[2,1,2] o1 (B[2,2,1] o1 B[2,1,1])", "B[2,2,2] s(12) o2 T[2] o1 T[2]",
                        "(B[2,1,1] o1 B[2,2,1]) s(123) o3 Z[2]"}) {
    auto t = parse_term(s);
    CHECK(print_term(*t) == s);
    CHECK(*parse_term(print_term(*t)) == *t);
  }
  CHECK(colors(*parse_term("B[5,4,5] o1 Z[5]")).out == 9);
  CHECK(colors(*parse_term("B[5,4,5] o1 Z[5]")).in == std::vector<int>{5});
  CHECK_THROWS_AS(parse_term("B[2,3,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("B[2,1,1] o1 Z[3]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("T[0]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("B[2,1,1] s(13)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("B[2,1,1] o1"), std::invalid_argument);
}

TEST_CASE("relations hold for small parameters") {
  std::map<std::string, int> seen;
  for (const auto& rel : relation_instances(3)) {
    CHECK_MESSAGE(isomorphic(evaluate(*rel.lhs), evaluate(*rel.rhs)),
                  rel.family << ": " << print_term(*rel.lhs) << " = " << print_term(*rel.rhs));
    ++seen[rel.family];
  }
  for (auto fam : {"beta-commute", "beta-assoc", "beta-unit", "zeta-absorb", "tau-beta", "tau-order", "tau-zeta"}) CHECK(seen[fam] > 0);
}

TEST_CASE("defined cacti agree with their alternative expressions") {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      auto rhs = compose(sym_action(beta(l + 1, 1, k), {2, 1}), 2, delta_face(l + 1, 0));
      CHECK(isomorphic(alpha(k, l), rhs));
    }
}

TEST_CASE("decompose is a section of evaluate") {
  for (int r = 0; r <= 3; ++r)
    for (auto p : profiles_up_to(r, 3, 4))
      for (const auto& x : enumerate_cacti(p, true)) {
        auto t = decompose(x);
        CHECK_MESSAGE(isomorphic(evaluate(*t), x), p.str() << " " << print_term(*t));
        CHECK(colors(*t).out == p.k);
        CHECK(colors(*t).in == p.lobes);
      }
}

TEST_CASE("normal form shape") {
  for (auto p : profiles_up_to(3, 2, 4))
    for (const auto& x : enumerate_cacti(p, true)) {
      auto d = decompose_steps(x);
      for (size_t a = 1; a < d.attachment.size(); ++a) CHECK(d.attachment[a - 1] >= d.attachment[a]);
      if (x.r() > 0) CHECK(d_invariant(d.blown_up.shape) == 0);
      CHECK(d.zeta_sizes.size() == static_cast<size_t>(x.r() == 0 ? 0 : d_invariant(x.shape)));
      for (int e : d.exponents) CHECK(e >= 0);
      bool unframed = has_canonical_framing(x);
      CHECK(unframed == std::all_of(d.exponents.begin(), d.exponents.end(), [](int e) { return e == 0; }));
      CHECK((x.r() > 0 && d_invariant(x.shape) == 0) == (x.r() > 0 && !has_zeta(*decompose(x))));
    }
}

TEST_CASE("decomposition of generators") {
  CHECK(print_term(*decompose(beta(3, 2, 1))) == "B[3,2,1]");
  CHECK(print_term(*decompose(zeta(4))) == "Z[4]");
  CHECK(print_term(*decompose(epsilon(2))) == "E[2]");
  CHECK(print_term(*decompose(tau(2))) == "T[2]");
  CHECK(print_term(*decompose(compose(tau(3), 1, tau(3)))) == "T[3]^2");
  CHECK(print_term(*decompose(sym_action(beta(2, 1, 2), {2, 1}))) == "B[2,1,2] s(12)");
}

TEST_CASE("term enumeration agrees with graph enumeration") {
  for (auto p : std::vector<Profile>{{0, {}}, {2, {}}, {0, {0}}, {0, {1}}, {1, {1}}, {0, {2}}, {1, {0, 1}},
                                     {0, {0, 0}}, {2, {1}}, {1, {1, 1}}, {0, {1, 0}}}) {
    for (bool framed : {false, true}) {
      std::set<CactusKey> a, b;
      for (auto& x : enumerate_cacti(p, framed)) a.insert(cactus_key(x));
      for (auto& x : enumerate_by_terms(p, framed)) b.insert(cactus_key(x));
      CHECK_MESSAGE(a == b, p.str());
    }
  }
}
