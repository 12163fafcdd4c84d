#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cactop/action.hpp"
#include "cactop/decompose.hpp"
#include "cactop/enumerate.hpp"
#include "cactop/hochschild.hpp"
#include "cactop/io.hpp"
#include "cactop/nondeg.hpp"
#include "cactop/suites.hpp"
#include "cactop/term.hpp"

using namespace cactop;

namespace {

constexpr int kPass = 0, kCounterexample = 1, kUsage = 2;

struct Config {
  int bound = 4;
  int edges = 6;
  int max_k = 2;
  int window = 5;
  int r = 2;
  bool framed = false;
  bool skip_framed_r3 = false;
  unsigned long long seed = 1;
  int samples = 200;
  std::string out;
  std::string format;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int report(const Config& cfg, const std::string& title, const std::vector<SuiteResult>& results) {
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  if (cfg.format == "json") {
    Json j;
    j["suite"] = title;
    j["seed"] = cfg.seed;
    j["pass"] = ok;
    j["results"] = Json::array();
    for (const auto& r : results)
      j["results"].push_back({{"name", r.name}, {"checks", r.checks}, {"pass", r.ok()}, {"counterexamples", r.failures}});
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << title << " (seed " << cfg.seed << ")\n";
    for (const auto& r : results) {
      os << (r.ok() ? "PASS " : "FAIL ") << r.name << " [" << r.checks << " checks]\n";
      for (const auto& f : r.failures) os << "  counterexample: " << f << "\n";
    }
    os << (ok ? "all checks passed\n" : "counterexample found\n");
    emit(cfg, os.str());
  }
  return ok ? kPass : kCounterexample;
}

std::vector<FiniteDGA> default_algebras() { return {dga_dual_numbers(), dga_truncated()}; }

int run_verify(const Config& cfg, const std::string& suite) {
  Rng rng(cfg.seed);
  if (suite == "relations") return report(cfg, "verify relations", {suite_relations(cfg.bound)});
  if (suite == "axioms") return report(cfg, "verify axioms", {suite_operad_axioms(rng, cfg.samples, cfg.bound)});
  if (suite == "presentation")
    return report(cfg, "verify presentation", {suite_presentation(cfg.edges, cfg.max_k)});
  if (suite == "dg-identities")
    return report(cfg, "verify dg-identities", {suite_dg_identities(rng, cfg.samples, cfg.window)});
  if (suite == "section") return report(cfg, "verify section", {suite_section(rng, cfg.samples / 4, cfg.window)});
  if (suite == "homology") return report(cfg, "verify homology", {suite_homology(!cfg.skip_framed_r3)});
  if (suite == "bv") return report(cfg, "verify bv", {suite_bv()});
  if (suite == "hochschild")
    return report(cfg, "verify hochschild", suite_hochschild(default_algebras(), rng, cfg.samples));
  if (suite == "action")
    return report(cfg, "verify action", suite_action(default_algebras(), rng, std::min(cfg.bound, 2), 3));
  throw UsageError("unknown suite '" + suite + "'");
}

int run_enumerate(const Config& cfg, const std::string& profile) {
  Profile p;
  try {
    p = Profile::parse(profile);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (profile_edges(p) > cfg.edges) throw UsageError("profile exceeds the edge bound (raise --edges)");
  auto xs = enumerate_cacti(p, cfg.framed);
  if (cfg.format == "count") {
    emit(cfg, std::to_string(xs.size()) + "\n");
    return kPass;
  }
  Json j;
  j["profile"] = p.str();
  j["framed"] = cfg.framed;
  j["count"] = xs.size();
  j["cacti"] = Json::array();
  for (const auto& x : xs) j["cacti"].push_back(cactus_to_json(x));
  emit(cfg, j.dump(2) + "\n");
  return kPass;
}

FramedCactus parse_object(const std::string& text) {
  try {
    return evaluate(*parse_term(text));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

int run_export(const Config& cfg, const std::string& object) {
  if (cfg.format == "dot") {
    emit(cfg, cactus_to_dot(parse_object(object), object));
    return kPass;
  }
  if (!cfg.format.empty() && cfg.format != "json") throw UsageError("export format must be json or dot");
  // A JSON file round trips through the reader; anything else is a term.
  std::ifstream probe(object);
  if (probe) {
    FramedCactus x = cactus_from_json(Json::parse(read_file(object)));
    emit(cfg, cactus_to_json(x).dump(2) + "\n");
    return kPass;
  }
  emit(cfg, cactus_to_json(parse_object(object)).dump(2) + "\n");
  return kPass;
}

int run_normalize(const Config& cfg, const std::string& text) {
  FramedCactus x = parse_object(text);
  auto nf = decompose(x);
  bool ok = isomorphic(evaluate(*nf), x);
  emit(cfg, print_term(*nf) + "\n");
  return ok ? kPass : kCounterexample;
}

int run_homology(const Config& cfg) {
  if (cfg.r < 0 || cfg.r > (cfg.framed ? 3 : 4)) throw UsageError("--r out of range (framed <= 3, unframed <= 4)");
  NondegComplex c(cfg.r, cfg.framed);
  if (cfg.format == "json")
    emit(cfg, homology_json(c).dump(2) + "\n");
  else
    emit(cfg, betti_csv(c));
  return kPass;
}

int run_hochschild(const Config& cfg, const std::string& dga_file, const std::string& check) {
  FiniteDGA a;
  try {
    a = FiniteDGA::from_json(read_file(dga_file));
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kCounterexample;
  }
  if (a.name.empty()) a.name = dga_file;
  Rng rng(cfg.seed);
  std::vector<SuiteResult> results;
  if (check == "all" || check == "identities") results = hochschild_suite(a, rng, cfg.samples);
  if (check == "all" || check == "action") {
    results.push_back(relation_invariance_suite(a, rng, 2, 3));
    results.push_back(element_action_suite(a, rng, 4, 6));
  }
  if (results.empty()) throw UsageError("--check must be all, identities or action");
  return report(cfg, "hochschild " + a.name, results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cactus operad workbench: exact enumeration, normal forms, homology and Hochschild checks"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* c) {
    c->add_option("--seed", cfg.seed, "random seed");
    c->add_option("--out", cfg.out, "write output to a file");
  };

  std::string profile;
  auto* en = app.add_subcommand("enumerate", "list the cacti of a profile k:l1,...,lr");
  en->add_option("profile", profile, "profile, e.g. 2:1,0")->required();
  en->add_flag("--framed", cfg.framed, "all framings instead of the canonical one");
  en->add_option("--edges", cfg.edges, "refuse profiles with more edges (default 6)");
  en->add_option("--format", cfg.format, "json (default) or count");
  common(en);

  std::string suite;
  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", suite, "relations, axioms, presentation, dg-identities, section, homology, bv, hochschild, action")
      ->required();
  ve->add_option("--bound", cfg.bound, "parameter bound for relations and axioms");
  ve->add_option("--edges", cfg.edges, "edge bound for the presentation suite");
  ve->add_option("--max-k", cfg.max_k, "minimum bound on k for the presentation suite");
  ve->add_option("--window", cfg.window, "componentwise window K");
  ve->add_option("--samples", cfg.samples, "random samples");
  ve->add_flag("--skip-framed-r3", cfg.skip_framed_r3, "omit the framed r = 3 homology computation");
  ve->add_option("--format", cfg.format, "text (default) or json");
  common(ve);

  auto* ho = app.add_subcommand("homology", "Betti table of the nondegenerate complex");
  ho->add_option("--r", cfg.r, "number of lobes");
  ho->add_flag("--framed", cfg.framed, "framed complex");
  ho->add_option("--format", cfg.format, "csv (default) or json with representatives");
  common(ho);

  std::string object;
  auto* ex = app.add_subcommand("export", "export a cactus given as a term (or a cactus JSON file)");
  ex->add_option("object", object, "term such as \"T[5]\" or a JSON file")->required();
  ex->add_option("--format", cfg.format, "json (default) or dot");
  common(ex);

  std::string term;
  auto* no = app.add_subcommand("normalize", "normal form of a term");
  no->add_option("term", term, "term, e.g. \"B[2,1,1] o1 Z[2]\"")->required();
  common(no);

  std::string dga_file, check = "all";
  auto* hh = app.add_subcommand("hochschild", "Hochschild identity suite on a DGA file");
  hh->add_option("--dga", dga_file, "DGA definition (JSON)")->required();
  hh->add_option("--check", check, "all, identities or action");
  hh->add_option("--samples", cfg.samples, "random cochains");
  hh->add_option("--format", cfg.format, "text (default) or json");
  common(hh);

  auto* bv = app.add_subcommand("bv-check", "Ger and BV relations with boundary witnesses");
  bv->add_option("--format", cfg.format, "text (default) or json");
  common(bv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*en) return run_enumerate(cfg, profile);
    if (*ve) return run_verify(cfg, suite);
    if (*ho) return run_homology(cfg);
    if (*ex) return run_export(cfg, object);
    if (*no) return run_normalize(cfg, term);
    if (*hh) return run_hochschild(cfg, dga_file, check);
    if (*bv) return report(cfg, "bv-check", {suite_bv()});
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
