#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "cactop/suites.hpp"

using namespace cactop;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<SuiteResult>()> run;
};

}  // namespace

int main(int argc, char** argv) {
  bool framed_r3 = true;
  unsigned long long seed = 20150703;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-framed-r3") == 0)
      framed_r3 = false;
    else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      seed = std::stoull(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--skip-framed-r3] [--seed N]\n";
      return 2;
    }
  }
  Rng rng(seed);
  const std::vector<FiniteDGA> algebras{dga_dual_numbers(), dga_truncated()};
  std::vector<Criterion> criteria{
      {1, "relations, every parameter <= 4", [] { return std::vector{suite_relations(4)}; }},
      {2, "operad axioms, 500 samples, profiles <= 4", [&] { return std::vector{suite_operad_axioms(rng, 500, 4)}; }},
      {3, "presentation round trip and injectivity, <= 6 edges", [] { return std::vector{suite_presentation(6, 2)}; }},
      {4, "dg identities: 200 d^2 checks, Leibniz, alpha/beta/rho for k <= 5",
       [&] { return std::vector{suite_dg_identities(rng, 200, 5)}; }},
      {5, "section P / quotient Q for k <= 5", [&] { return std::vector{suite_section(rng, 50, 5)}; }},
      {6, framed_r3 ? "homology totals r! and 2^r r!, framed r = 3 included" : "homology totals r! and 2^r r!",
       [&] { return std::vector{suite_homology(framed_r3)}; }},
      {7, "Ger/BV relations with boundary witnesses", [] { return std::vector{suite_bv()}; }},
      {8, "Hochschild suite, two algebras, 200 random cochains of arity <= 3",
       [&] { return suite_hochschild(algebras, rng, 200); }},
      {9, "cactus action invariance, relation parameters <= 2", [&] { return suite_action(algebras, rng, 2, 3); }},
  };
  std::cout << "acceptance (seed " << seed << ")\n";
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    auto results = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = true;
    long checks = 0;
    for (const auto& r : results) {
      ok = ok && r.ok();
      checks += r.checks;
    }
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << checks << " checks, "
              << std::fixed << std::setprecision(1) << secs << "s]\n";
    for (const auto& r : results)
      for (const auto& f : r.failures) std::cout << "    " << r.name << ": " << f << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
