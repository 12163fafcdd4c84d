#include "cactop/generators.hpp"
#include "cactop/hochschild.hpp"
#include "cactop/io.hpp"
#include "cactop/random.hpp"
#include "doctest.h"

#include <fstream>
#include <sstream>

using namespace cactop;

TEST_CASE("cactus and chain JSON round trip") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = random_cactus(rng, trial % 4, static_cast<int>(rng() % 3), 3, true);
    auto y = cactus_from_json(Json::parse(cactus_to_json(x).dump()));
    CHECK(isomorphic(x, y));
    CHECK(graph_from_json(graph_to_json(x.graph())) == x.graph());
  }
  auto c = random_chain(rng, 2, 2, 3, 4, true);
  CHECK(chain_from_json(Json::parse(chain_to_json(c).dump())) == c);
}

TEST_CASE("malformed JSON is rejected") {
  auto j = cactus_to_json(beta(2, 1, 1));
  j["base_tail"] = 999;
  CHECK_THROWS_AS(cactus_from_json(j), std::invalid_argument);
  auto k = cactus_to_json(tau(2));
  k["framing"] = Json::array({k["base_tail"]});
  CHECK_THROWS(cactus_from_json(k));
  CHECK_THROWS_AS(graph_from_json(Json::parse("{\"vertices\": [0]}")), std::invalid_argument);
}

TEST_CASE("DOT export marks the framing") {
  auto dot = cactus_to_dot(tau(5));
  CHECK(dot.find("graph") == 0);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("penwidth") != std::string::npos);
  CHECK(cactus_to_dot(zeta(0)).find("c1") == std::string::npos);
}

TEST_CASE("Betti CSV and homology JSON") {
  NondegComplex c(2, false);
  CHECK(betti_csv(c) == "degree,betti\n0,1\n1,1\ntotal,2\n");
  auto j = homology_json(c);
  CHECK(j["total"] == 2);
  CHECK(j["representatives"]["1"].size() == 1);
  auto z = chain_from_json(j["representatives"]["1"][0]);
  CHECK(c.is_cycle(z));
}

TEST_CASE("DGA JSON files") {
  for (const auto& a : {dga_rationals(), dga_dual_numbers(), dga_truncated()}) {
    auto b = FiniteDGA::from_json(a.to_json());
    CHECK(b.names == a.names);
    CHECK(b.degrees == a.degrees);
    CHECK(b.diff == a.diff);
    CHECK(b.product == a.product);
    CHECK(b.trace == a.trace);
    CHECK(b.frobenius() == a.frobenius());
  }
  CHECK(dga_dual_numbers().frobenius());
  CHECK_FALSE(dga_truncated().frobenius());
  CHECK_THROWS_AS(FiniteDGA::from_json("{\"basis\": [{\"name\": \"1\", \"degree\": 0}], \"unit\": \"2\"}"),
                  std::invalid_argument);
  // d(y) = 1 has the wrong degree.
  const char* bad = R"({"basis": [{"name": "1", "degree": 0}, {"name": "y", "degree": -1}, {"name": "x", "degree": -2}],
    "unit": "1", "differential": {"y": {"1": 1}},
    "product": [["1","1",{"1":1}],["1","y",{"y":1}],["y","1",{"y":1}],["1","x",{"x":1}],["x","1",{"x":1}]]})";
  CHECK_THROWS_AS(FiniteDGA::from_json(bad), std::invalid_argument);
}

TEST_CASE("shipped DGA files match the built-in algebras") {
  auto load = [](const std::string& f) {
    std::ifstream in(std::string(CACTOP_DATA_DIR) + "/" + f);
    std::stringstream ss;
    ss << in.rdbuf();
    return FiniteDGA::from_json(ss.str());
  };
  CHECK(load("rationals.json").to_json() == dga_rationals().to_json());
  CHECK(load("dual_numbers.json").to_json() == dga_dual_numbers().to_json());
  CHECK(load("truncated.json").to_json() == dga_truncated().to_json());
}
