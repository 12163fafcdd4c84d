#include "cactop/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cactop/decompose.hpp"
#include "cactop/generators.hpp"

namespace cactop {

namespace {

int parity_sign(long long n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

CactusChain CactusChain::single(const FramedCactus& x, const Rational& c) {
  CactusChain out(x.r());
  out.add(x, c);
  return out;
}

void CactusChain::add(const FramedCactus& x, const Rational& c) {
  if (c == 0) return;
  if (r_ < 0) r_ = x.r();
  if (x.r() != r_) throw std::invalid_argument("chain: lobe count mismatch");
  auto key = cactus_key(x);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Entry{x, c});
  } else {
    it->second.coeff += c;
    if (it->second.coeff == 0) terms_.erase(it);
  }
}

void CactusChain::add(const CactusChain& y, const Rational& c) {
  if (c == 0) return;
  if (r_ < 0) r_ = y.r_;
  if (y.r_ >= 0 && y.r_ != r_) throw std::invalid_argument("chain: lobe count mismatch");
  for (const auto& [key, e] : y.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, Entry{e.cactus, c * e.coeff});
    } else {
      it->second.coeff += c * e.coeff;
      if (it->second.coeff == 0) terms_.erase(it);
    }
  }
}

Rational CactusChain::coeff(const FramedCactus& x) const {
  auto it = terms_.find(cactus_key(x));
  return it == terms_.end() ? Rational(0) : it->second.coeff;
}

CactusChain CactusChain::operator-() const { return Rational(-1) * *this; }

CactusChain operator+(CactusChain a, const CactusChain& b) {
  a.add(b, 1);
  return a;
}

CactusChain operator-(CactusChain a, const CactusChain& b) {
  a.add(b, -1);
  return a;
}

CactusChain operator*(const Rational& c, CactusChain a) {
  if (c == 0) return CactusChain(a.r_);
  for (auto& [key, e] : a.terms_) e.coeff *= c;
  return a;
}

bool operator==(const CactusChain& a, const CactusChain& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.coeff != ib->second.coeff) return false;
  return true;
}

CactusChain CactusChain::filter_k(int lo, int hi) const {
  CactusChain out(r_);
  for (const auto& [key, e] : terms_) {
    int k = e.cactus.profile().k;
    if (k >= lo && k <= hi) out.terms_.emplace(key, e);
  }
  return out;
}

CactusChain CactusChain::filter_degree(int d) const {
  CactusChain out(r_);
  for (const auto& [key, e] : terms_)
    if (e.cactus.degree() == d) out.terms_.emplace(key, e);
  return out;
}

bool CactusChain::homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->second.cactus.degree();
  for (const auto& [key, e] : terms_)
    if (e.cactus.degree() != d) return false;
  return true;
}

int CactusChain::degree() const {
  if (terms_.empty() || !homogeneous()) throw std::logic_error("chain: degree of an inhomogeneous chain");
  return terms_.begin()->second.cactus.degree();
}

bool CactusChain::unframed() const {
  for (const auto& [key, e] : terms_)
    if (!has_canonical_framing(e.cactus)) return false;
  return true;
}

std::string CactusChain::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, e] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(e.coeff) << "*[" << print_term(*decompose(e.cactus)) << "]";
  }
  return os.str();
}

CactusChain compose(const CactusChain& x, int i, const CactusChain& y) {
  CactusChain out(x.r() < 0 || y.r() < 0 ? -1 : x.r() + y.r() - 1);
  for (const auto& [kx, ex] : x.terms()) {
    const Profile px = ex.cactus.profile();
    if (i < 1 || i > px.r()) throw std::invalid_argument("chain compose: slot out of range");
    int after = 0;
    for (int a = i; a < px.r(); ++a) after += px.lobes[a];
    for (const auto& [ky, ey] : y.terms()) {
      const Profile py = ey.cactus.profile();
      if (py.k != px.lobes[i - 1]) continue;
      int sign = parity_sign(static_cast<long long>(py.degree()) * after);
      out.add(compose(ex.cactus, i, ey.cactus), ex.coeff * ey.coeff * sign);
    }
  }
  return out;
}

int sym_sign(const Profile& p, const Perm& sigma) {
  // Lobe a of the result is lobe sigma(a) of x.
  long long n = 0;
  for (int a = 0; a < p.r(); ++a)
    for (int b = a + 1; b < p.r(); ++b)
      if (sigma[a] > sigma[b]) n += static_cast<long long>(p.lobes[sigma[a] - 1]) * p.lobes[sigma[b] - 1];
  return parity_sign(n);
}

CactusChain sym_action(const CactusChain& x, const Perm& sigma) {
  if (x.r() >= 0 && static_cast<int>(sigma.size()) != x.r())
    throw std::invalid_argument("chain sym: arity mismatch");
  CactusChain out(x.r());
  for (const auto& [key, e] : x.terms())
    out.add(sym_action(e.cactus, sigma), e.coeff * sym_sign(e.cactus.profile(), sigma));
  return out;
}

CactusChain delta_chain(int k) {
  CactusChain out(1);
  for (int i = 0; i <= k; ++i) out.add(delta_face(k, i), parity_sign(i));
  return out;
}

CactusChain delta_tilde(int lo, int hi) {
  CactusChain out(1);
  for (int k = std::max(lo, 1); k <= hi; ++k) out.add(delta_chain(k));
  return out;
}

CactusChain epsilon_tilde(int lo, int hi) {
  CactusChain out(1);
  for (int k = std::max(lo, 0); k <= hi; ++k) out.add(epsilon(k), 1);
  return out;
}

CactusChain differential(const CactusChain& x) {
  CactusChain out(x.r());
  for (const auto& [key, e] : x.terms()) {
    auto single = CactusChain::single(e.cactus, e.coeff);
    out.add(compose(delta_chain(e.cactus.profile().k + 1), 1, single));
  }
  out.add(differential_inner(x));
  return out;
}

CactusChain differential_inner(const CactusChain& x) {
  CactusChain out(x.r());
  for (const auto& [key, e] : x.terms()) {
    const Profile p = e.cactus.profile();
    auto single = CactusChain::single(e.cactus, e.coeff);
    for (int j = 1; j <= p.r(); ++j)
      if (p.lobes[j - 1] >= 1) out.add(compose(single, j, delta_chain(p.lobes[j - 1])), -parity_sign(p.degree()));
  }
  return out;
}

CactusChain differential_inner_unfolded(const CactusChain& x) {
  CactusChain out(x.r());
  for (const auto& [key, e] : x.terms()) {
    const Profile p = e.cactus.profile();
    for (int j = 1; j <= p.r(); ++j) {
      int L = p.lobes[j - 1];
      if (L == 0) continue;
      long long after = 0;
      for (int a = j; a < p.r(); ++a) after += p.lobes[a];
      int s = parity_sign(p.degree() + 1 + after);
      for (int i = 0; i <= L; ++i) out.add(compose(e.cactus, j, delta_face(L, i)), e.coeff * s * parity_sign(i));
    }
  }
  return out;
}

CactusChain alpha_component(int k) {
  CactusChain out(2);
  for (int l = 0; l <= k; ++l) out.add(alpha(l, k - l), parity_sign(static_cast<long long>(l) * (k - l)));
  return out;
}

CactusChain beta_component(int k) {
  CactusChain out(2);
  for (int l = 1; l <= k + 1; ++l) {
    int m = k + 1 - l;
    for (int i = 1; i <= l; ++i) {
      auto b = beta(l, i, m);
      out.add(b, parity_sign(static_cast<long long>(i) * m + i));
      out.add(sym_action(b, Perm{2, 1}), parity_sign(static_cast<long long>(i + l) * m + i));
    }
  }
  return out;
}

CactusChain rho_component(int k) {
  CactusChain out(1);
  for (int i = 0; i <= k; ++i)
    out.add(twist(sigma_degeneracy(k, i), 1, k + 1 - i), parity_sign(static_cast<long long>(i + 1) * k));
  return out;
}

CactusChain element_alpha(int K) {
  CactusChain out(2);
  for (int k = 0; k <= K; ++k) out.add(alpha_component(k));
  return out;
}

CactusChain element_beta(int K) {
  CactusChain out(2);
  for (int k = 0; k <= K; ++k) out.add(beta_component(k));
  return out;
}

CactusChain element_rho(int K) {
  CactusChain out(1);
  for (int k = 0; k <= K; ++k) out.add(rho_component(k));
  return out;
}

CactusChain quotient_Q(const CactusChain& x) { return x.filter_k(0, 0); }

}  // namespace cactop
