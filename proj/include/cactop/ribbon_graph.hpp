#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cactop {

// A ribbon graph (V, F, lambda, iota, N). Flags and vertices are small
// non-negative integer ids; the maps are stored densely, indexed by flag id,
// with -1 marking ids that are not in use.
class RibbonGraph {
 public:
  struct Unchecked {};

  RibbonGraph() = default;
  RibbonGraph(std::vector<int> vertices, std::vector<int> lambda, std::vector<int> iota,
              std::vector<int> next, Unchecked);

  // Validating constructor; throws std::invalid_argument.
  static RibbonGraph from_maps(std::vector<int> vertices, const std::map<int, int>& lambda,
                               const std::map<int, int>& iota, const std::map<int, int>& next);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& flags() const { return flags_; }
  int flag_bound() const { return static_cast<int>(lambda_.size()); }
  int vertex_bound() const;

  bool has_flag(int f) const { return f >= 0 && f < flag_bound() && lambda_[f] >= 0; }
  bool has_vertex(int v) const;
  int lambda(int f) const { return lambda_[f]; }
  int iota(int f) const { return iota_[f]; }
  int next(int f) const { return next_[f]; }
  int prev(int f) const;
  bool is_tail(int f) const { return iota_[f] == f; }

  std::vector<int> flags_at(int v) const;  // N-order, starting at the smallest id
  int valence(int v) const { return static_cast<int>(flags_at(v).size()); }
  std::vector<int> tails() const;
  std::vector<std::pair<int, int>> edges() const;  // (f, iota f) with f < iota f
  int num_edges() const { return static_cast<int>(edges().size()); }

  // Orbits of N o iota; each starts at its smallest flag.
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> cycle_of(int f) const;  // orbit of N o iota starting at f

  bool connected() const;
  int euler_characteristic() const;  // #V - #E + #cycles
  int genus() const;                 // summed over connected components

  // Structural problems, empty if the tables define a ribbon graph.
  std::string check() const;

  friend bool operator==(const RibbonGraph&, const RibbonGraph&) = default;

 private:
  void rebuild_flag_list();

  std::vector<int> vertices_;
  std::vector<int> flags_;
  std::vector<int> lambda_, iota_, next_;
};

RibbonGraph remove_flag(const RibbonGraph& g, int f);
RibbonGraph remove_flags(const RibbonGraph& g, const std::vector<int>& fs);

// True when the listed edges form a forest in the underlying graph.
bool is_acyclic(const RibbonGraph& g, const std::vector<std::pair<int, int>>& edges);

// Contracts the edges one at a time. Each contraction introduces a fresh
// vertex id (one past the current maximum). If vertex_map is given it
// receives old vertex -> final vertex.
RibbonGraph contract_edges(const RibbonGraph& g, const std::vector<std::pair<int, int>>& edges,
                           std::map<int, int>* vertex_map = nullptr);

// Relabels flags and vertices to 0..n-1 preserving their order.
RibbonGraph compact(const RibbonGraph& g, std::map<int, int>* flag_map = nullptr,
                    std::map<int, int>* vertex_map = nullptr);

std::vector<int> canonical_form(const RibbonGraph& g);
bool isomorphic(const RibbonGraph& a, const RibbonGraph& b);

}  // namespace cactop
