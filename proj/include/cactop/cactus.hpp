#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactop/ribbon_graph.hpp"

namespace cactop {

// Arity profile (k : l_1, ..., l_r): k+1 tails, lobe i has l_i+1 flags.
struct Profile {
  int k = 0;
  std::vector<int> lobes;

  int r() const { return static_cast<int>(lobes.size()); }
  int degree() const;  // sum l_i - k
  std::string str() const;
  static Profile parse(const std::string& s);  // "k:l1,l2,..."
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

enum class Clause { Graph, Connected, Genus, Partition, OuterIncidence, BaseTail, IsolatedVertex, Framing };
const char* clause_name(Clause c);

struct Violation {
  Clause clause;
  std::string detail;
  std::string str() const;
};

class CactusError : public std::invalid_argument {
 public:
  explicit CactusError(Violation v) : std::invalid_argument(v.str()), violation(std::move(v)) {}
  Violation violation;
};

// Checks the decorated-cactus axioms for (graph, c_0..c_r, t). The cycles are
// given as flag lists; only their contents matter.
std::optional<Violation> validate(const RibbonGraph& g, const std::vector<std::vector<int>>& cycles,
                                  int base_tail);

// Decorated cactus. cycles[0] is c_0 and begins at the base tail; every cycle
// is listed in N o iota order.
struct DecoratedCactus {
  RibbonGraph graph;
  std::vector<std::vector<int>> cycles;
  int base_tail = 0;

  // Validating constructor; throws CactusError.
  static DecoratedCactus make(RibbonGraph g, const std::vector<std::vector<int>>& cycles, int base_tail);

  int r() const { return static_cast<int>(cycles.size()) - 1; }
  Profile profile() const;
  int lobe_of(int f) const;  // index of the cycle containing f
};

// Framed decorated cactus. Lobe cycles begin at their framing flag.
struct FramedCactus {
  DecoratedCactus shape;
  std::vector<int> framing;  // framing[i-1] = fr(c_i)

  // Validating constructor; throws CactusError.
  static FramedCactus make(DecoratedCactus d, std::vector<int> framing);
  // Builds cycles from the graph: c_0 from t, c_i from framing[i-1]. No checks.
  static FramedCactus from_graph(RibbonGraph g, int base_tail, const std::vector<int>& framing);

  const RibbonGraph& graph() const { return shape.graph; }
  const std::vector<std::vector<int>>& cycles() const { return shape.cycles; }
  int base_tail() const { return shape.base_tail; }
  int r() const { return shape.r(); }
  Profile profile() const { return shape.profile(); }
  int degree() const { return profile().degree(); }
};

// Flags of the dual tree path: fr(c_i) on the shortest path from c_i to lambda(t).
std::vector<int> canonical_framing(const DecoratedCactus& x);
FramedCactus with_canonical_framing(const DecoratedCactus& x);
bool has_canonical_framing(const FramedCactus& x);

// Edges of the dual tree: (lobe index, vertex) for every lobe flag.
struct DualTree {
  std::vector<int> vertices;
  int r = 0;
  std::vector<std::pair<int, int>> edges;  // flag order of c_1..c_r
  std::vector<int> edge_flags;
};
DualTree dual_tree(const DecoratedCactus& x);

// Composition x o_i y (1-based slot). Throws std::invalid_argument when the
// colours do not match.
FramedCactus compose(const FramedCactus& x, int i, const FramedCactus& y);

// Permutations are 1-based image lists: sigma[i-1] = sigma(i).
using Perm = std::vector<int>;
Perm perm_identity(int n);
Perm perm_compose(const Perm& s, const Perm& t);  // s o t
Perm perm_inverse(const Perm& s);
Perm perm_from_cycles(const std::string& cycles, int n);  // "(12)(34)" or "(1,10)"
std::string perm_to_cycles(const Perm& s);
bool perm_valid(const Perm& s);

// x^sigma: lobe i of the result is lobe sigma(i) of x.
FramedCactus sym_action(const FramedCactus& x, const Perm& sigma);

// Complete invariants. Two framed cacti are isomorphic iff their keys agree.
using CactusKey = std::vector<int>;
CactusKey cactus_key(const FramedCactus& x);
CactusKey cactus_key(const DecoratedCactus& x);
bool isomorphic(const FramedCactus& a, const FramedCactus& b);
bool isomorphic(const DecoratedCactus& a, const DecoratedCactus& b);

// Relabels ids densely, in BFS order from the base tail. Isomorphic inputs
// give identical outputs.
FramedCactus normalize_ids(const FramedCactus& x);

// Number of vertices which are neither (valence 4 on two lobes) nor
// (valence 3 on one lobe).
int d_invariant(const DecoratedCactus& x);
int lobes_at(const DecoratedCactus& x, int v);

// A vertex is free when it has valence 2 and carries no framing flag.
bool is_degenerate(const FramedCactus& x);

}  // namespace cactop
