#include "cactop/nondeg.hpp"

#include <stdexcept>

#include "cactop/decompose.hpp"
#include "cactop/enumerate.hpp"
#include "cactop/generators.hpp"
#include "cactop/section.hpp"

namespace cactop {

CactusChain project_nondeg(const CactusChain& x) {
  CactusChain out(x.r());
  for (const auto& [key, e] : x.terms())
    if (!is_degenerate(e.cactus)) out.add(e.cactus, e.coeff);
  return out;
}

CactusChain nondeg_differential(const CactusChain& x) { return project_nondeg(differential_inner(x)); }

CactusChain compose_nondeg(const CactusChain& x, int i, const CactusChain& y) {
  return project_nondeg(compose_k0(x, i, y));
}

int nondeg_edge_bound(int r, bool framed) {
  if (r == 0) return 0;
  return framed ? 3 * r - 1 : 2 * r - 1;
}

int euler_characteristic(const ChainComplexQ& c) {
  int chi = 0;
  for (int n : c.degrees()) chi += (n % 2 == 0 ? 1 : -1) * c.dim(n);
  return chi;
}

NondegComplex::NondegComplex(int r, bool framed) : r_(r), framed_(framed) {
  if (r < 0) throw std::invalid_argument("nondeg complex: r < 0");
  if (r == 0) {
    basis_[0].push_back(zeta(0));
  } else {
    const int bound = nondeg_edge_bound(r, framed);
    for (const auto& p : profiles_up_to(r, 0, bound))
      for (auto& x : enumerate_cacti(p, framed))
        if (!is_degenerate(x)) basis_[p.degree()].push_back(std::move(x));
  }
  std::map<int, std::vector<std::string>> names;
  for (auto& [n, xs] : basis_)
    for (size_t a = 0; a < xs.size(); ++a) {
      index_.emplace(cactus_key(xs[a]), std::make_pair(n, static_cast<int>(a)));
      names[n].push_back(print_term(*decompose(xs[a])));
    }
  std::map<int, SparseMatrix> d;
  for (auto& [n, xs] : basis_) {
    if (!basis_.count(n - 1)) continue;
    SparseMatrix m(static_cast<int>(basis_[n - 1].size()), static_cast<int>(xs.size()));
    for (size_t a = 0; a < xs.size(); ++a)
      m.columns[a] = to_vector(nondeg_differential(CactusChain::single(xs[a])), n - 1);
    d[n] = std::move(m);
  }
  complex_ = ChainComplexQ(std::move(names), std::move(d));
}

const std::vector<FramedCactus>& NondegComplex::basis(int degree) const {
  static const std::vector<FramedCactus> empty;
  auto it = basis_.find(degree);
  return it == basis_.end() ? empty : it->second;
}

int NondegComplex::basis_size() const {
  int n = 0;
  for (auto& [d, xs] : basis_) n += static_cast<int>(xs.size());
  return n;
}

QVec NondegComplex::to_vector(const CactusChain& x, int degree) const {
  QVec v;
  for (const auto& [key, e] : x.terms()) {
    auto it = index_.find(key);
    if (it == index_.end() || it->second.first != degree)
      throw std::invalid_argument("nondeg complex: chain leaves the basis in degree " + std::to_string(degree));
    v[it->second.second] = e.coeff;
  }
  return v;
}

CactusChain NondegComplex::from_vector(const QVec& v, int degree) const {
  CactusChain out(r_);
  const auto& xs = basis(degree);
  for (const auto& [i, c] : v) out.add(xs.at(i), c);
  return out;
}

std::vector<CactusChain> NondegComplex::representatives(int degree) const {
  std::vector<CactusChain> out;
  for (const auto& z : complex_.homology(degree).representatives) out.push_back(from_vector(z, degree));
  return out;
}

bool NondegComplex::is_cycle(const CactusChain& z) const { return nondeg_differential(z).empty(); }

std::optional<CactusChain> NondegComplex::boundary_witness(const CactusChain& z) const {
  if (z.empty()) return CactusChain(r_);
  int n = z.degree();
  auto w = complex_.boundary_witness(n, to_vector(z, n));
  if (!w) return std::nullopt;
  return from_vector(*w, n + 1);
}

}  // namespace cactop

namespace cactop {

CactusChain ger_u() { return CactusChain::single(zeta(0)); }
CactusChain ger_a() { return CactusChain::single(alpha(0, 0)); }
CactusChain ger_b() {
  auto b = CactusChain::single(beta(1, 1, 0));
  return -(b + sym_action(b, {2, 1}));
}
CactusChain bv_delta() { return CactusChain::single(twist(sigma_degeneracy(0, 0), 1, 1)); }

std::vector<RelationCheck> verify_bv_relations(bool include_bv) {
  std::map<std::pair<int, bool>, NondegComplex> complexes;
  auto complex_for = [&](int r, bool framed) -> const NondegComplex& {
    auto key = std::make_pair(r, framed);
    auto it = complexes.find(key);
    if (it == complexes.end()) it = complexes.emplace(key, NondegComplex(r, framed)).first;
    return it->second;
  };
  std::vector<RelationCheck> out;
  auto check = [&](const std::string& name, bool framed, const CactusChain& defect, int r) {
    RelationCheck c;
    c.name = name;
    c.r = r;
    c.framed = framed;
    c.defect = project_nondeg(defect);
    c.cycle = nondeg_differential(c.defect).empty();
    if (c.cycle) c.witness = complex_for(r, framed).boundary_witness(c.defect);
    out.push_back(std::move(c));
  };
  auto o = [](const CactusChain& x, int i, const CactusChain& y) { return compose_nondeg(x, i, y); };
  const auto u = ger_u(), a = ger_a(), b = ger_b(), D = bv_delta();
  const auto one = CactusChain::single(epsilon(0));
  const Perm c123 = perm_from_cycles("(123)", 3), c321 = perm_from_cycles("(321)", 3);

  // A generator is a cycle; the "defect" d(g) = 0 is checked as the relation.
  for (auto [name, g, r, framed] : std::vector<std::tuple<std::string, CactusChain, int, bool>>{
           {"u is a cycle", u, 0, false}, {"a is a cycle", a, 2, false}, {"b is a cycle", b, 2, false}}) {
    RelationCheck c;
    c.name = name;
    c.r = r;
    c.framed = framed;
    c.cycle = nondeg_differential(g).empty();
    if (c.cycle) c.witness = CactusChain(r);
    out.push_back(std::move(c));
  }
  check("(a) a^(12) = a", false, sym_action(a, {2, 1}) - a, 2);
  check("(a) a o1 a = a o2 a", false, o(a, 1, a) - o(a, 2, a), 3);
  check("(b) b^(12) = b", false, sym_action(b, {2, 1}) - b, 2);
  auto bb = o(b, 1, b);
  check("(b) Jacobi", false, bb + sym_action(bb, c123) + sym_action(bb, c321), 3);
  check("(ab) b o1 a = a o2 b + (a o1 b)^(23)", false,
        o(b, 1, a) - o(a, 2, b) - sym_action(o(a, 1, b), perm_from_cycles("(23)", 3)), 3);
  check("(u) a o1 u = 1", false, o(a, 1, u) - one, 1);
  check("(u) a o2 u = 1", false, o(a, 2, u) - one, 1);
  check("(u) b o1 u = 0", false, o(b, 1, u), 1);
  check("(u) b o2 u = 0", false, o(b, 2, u), 1);
  if (include_bv) {
    RelationCheck c;
    c.name = "Delta is a cycle";
    c.r = 1;
    c.framed = true;
    c.cycle = nondeg_differential(D).empty();
    if (c.cycle) c.witness = CactusChain(1);
    out.push_back(std::move(c));
    check("Delta o1 Delta = 0", true, o(D, 1, D), 1);
    check("b = Delta o1 a - a o1 Delta - a o2 Delta", true, b - (o(D, 1, a) - o(a, 1, D) - o(a, 2, D)), 2);
    check("Delta o1 u = 0", true, o(D, 1, u), 0);
  }
  return out;
}

}  // namespace cactop
