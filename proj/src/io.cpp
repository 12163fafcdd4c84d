#include "cactop/io.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "cactop/decompose.hpp"

namespace cactop {

namespace {

template <class F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

std::map<int, int> int_map(const Json& j) {
  std::map<int, int> m;
  for (const auto& [k, v] : j.items()) m[std::stoi(k)] = v.get<int>();
  return m;
}

}  // namespace

Json graph_to_json(const RibbonGraph& g) {
  Json j;
  j["vertices"] = g.vertices();
  Json lambda = Json::object(), iota = Json::object(), next = Json::object();
  for (int f : g.flags()) {
    lambda[std::to_string(f)] = g.lambda(f);
    iota[std::to_string(f)] = g.iota(f);
    next[std::to_string(f)] = g.next(f);
  }
  j["lambda"] = lambda;
  j["iota"] = iota;
  j["next"] = next;
  return j;
}

RibbonGraph graph_from_json(const Json& j) {
  return wrap([&] {
    return RibbonGraph::from_maps(j.at("vertices").get<std::vector<int>>(), int_map(j.at("lambda")),
                                  int_map(j.at("iota")), int_map(j.at("next")));
  });
}

Json cactus_to_json(const FramedCactus& x) {
  Json j;
  j["profile"] = x.profile().str();
  j["graph"] = graph_to_json(x.graph());
  j["base_tail"] = x.base_tail();
  j["framing"] = x.shape.r() > 0 ? Json(x.framing) : Json::array();
  j["term"] = print_term(*decompose(x));
  return j;
}

FramedCactus cactus_from_json(const Json& j) {
  return wrap([&] {
    RibbonGraph g = graph_from_json(j.at("graph"));
    int t = j.at("base_tail").get<int>();
    auto framing = j.at("framing").get<std::vector<int>>();
    if (!g.has_flag(t)) throw std::invalid_argument("json: base tail is not a flag");
    for (int f : framing)
      if (!g.has_flag(f)) throw std::invalid_argument("json: framing flag is not a flag");
    FramedCactus raw = FramedCactus::from_graph(g, t, framing);
    return FramedCactus::make(DecoratedCactus::make(raw.graph(), raw.cycles(), t), framing);
  });
}

Json chain_to_json(const CactusChain& x) {
  Json j;
  j["r"] = x.r();
  j["terms"] = Json::array();
  for (const auto& [key, e] : x.terms()) j["terms"].push_back({{"coeff", to_string(e.coeff)}, {"cactus", cactus_to_json(e.cactus)}});
  return j;
}

CactusChain chain_from_json(const Json& j) {
  return wrap([&] {
    CactusChain out(j.at("r").get<int>());
    for (const auto& t : j.at("terms")) out.add(cactus_from_json(t.at("cactus")), parse_rational(t.at("coeff").get<std::string>()));
    return out;
  });
}

std::string cactus_to_dot(const FramedCactus& x, const std::string& name) {
  const RibbonGraph& g = x.graph();
  std::set<int> frames(x.framing.begin(), x.framing.end());
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  label=\"" << x.profile().str() << "  " << print_term(*decompose(x)) << "\";\n";
  os << "  node [shape=point, width=0.12];\n";
  for (int v : g.vertices()) os << "  v" << v << ";\n";
  for (int f : g.tails()) {
    os << "  t" << f << " [shape=circle, width=0.05, label=\"\"];\n";
    os << "  v" << g.lambda(f) << " -- t" << f << " [label=\"" << (f == x.base_tail() ? "t" : "") << "\""
       << (f == x.base_tail() ? ", penwidth=2.5" : "") << "];\n";
  }
  for (auto [f, h] : g.edges()) {
    int lobe = x.shape.lobe_of(f) == 0 ? x.shape.lobe_of(h) : x.shape.lobe_of(f);
    int lf = x.shape.lobe_of(f) == 0 ? h : f;
    os << "  v" << g.lambda(f) << " -- v" << g.lambda(h) << " [label=\"c" << lobe << "\"";
    if (frames.count(lf)) os << ", color=red, fontcolor=red";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string betti_csv(const NondegComplex& c) {
  std::ostringstream os;
  os << "degree,betti\n";
  for (auto [n, b] : c.betti()) os << n << "," << b << "\n";
  os << "total," << c.total_betti() << "\n";
  return os.str();
}

Json homology_json(const NondegComplex& c) {
  Json j;
  j["r"] = c.r();
  j["framed"] = c.framed();
  j["basis_size"] = c.basis_size();
  j["total"] = c.total_betti();
  Json betti = Json::object(), reps = Json::object();
  for (auto [n, b] : c.betti()) {
    betti[std::to_string(n)] = b;
    Json list = Json::array();
    for (const auto& z : c.representatives(n)) list.push_back(chain_to_json(z));
    reps[std::to_string(n)] = list;
  }
  j["betti"] = betti;
  j["representatives"] = reps;
  return j;
}

}  // namespace cactop
