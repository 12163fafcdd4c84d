#include "cactop/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cactop {

namespace {

int parity_sign(long long n) { return n % 2 == 0 ? 1 : -1; }

size_t ipow(int base, int e) {
  size_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<size_t>(base);
  return r;
}

bool vec_zero(const AVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::string vec_str(const FiniteDGA& a, const AVec& v) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < a.dim(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(v[i]) << "*" << a.names[i];
  }
  return first ? "0" : os.str();
}

// Inverse of a small square rational matrix; nullopt if singular.
std::optional<std::vector<std::vector<Rational>>> invert(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / m[c][c];
    for (int j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("dga json: coefficient must be an integer or a rational string");
}

}  // namespace

// ---------------------------------------------------------------- FiniteDGA

int FiniteDGA::index(const std::string& basis_name) const {
  for (int i = 0; i < dim(); ++i)
    if (names[i] == basis_name) return i;
  throw std::invalid_argument("dga: unknown basis element '" + basis_name + "'");
}

AVec FiniteDGA::basis_vector(int i) const {
  AVec v(dim(), 0);
  v[i] = 1;
  return v;
}

AVec FiniteDGA::multiply(const AVec& a, const AVec& b) const {
  AVec out(dim(), 0);
  for (int i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      Rational c = a[i] * b[j];
      for (int o = 0; o < dim(); ++o)
        if (product[i][j][o] != 0) out[o] += c * product[i][j][o];
    }
  }
  return out;
}

AVec FiniteDGA::d(const AVec& a) const {
  AVec out(dim(), 0);
  for (int j = 0; j < dim(); ++j) {
    if (a[j] == 0) continue;
    for (int o = 0; o < dim(); ++o)
      if (diff[j][o] != 0) out[o] += a[j] * diff[j][o];
  }
  return out;
}

std::optional<std::string> FiniteDGA::check() const {
  const int n = dim();
  if (n == 0) return "empty basis";
  if (static_cast<int>(degrees.size()) != n || static_cast<int>(diff.size()) != n ||
      static_cast<int>(product.size()) != n)
    return "table sizes do not match the basis";
  if (unit < 0 || unit >= n) return "unit out of range";
  if (degrees[unit] != 0) return "unit is not in degree 0";
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(diff[i].size()) != n || static_cast<int>(product[i].size()) != n)
      return "table sizes do not match the basis";
    for (int o = 0; o < n; ++o)
      if (diff[i][o] != 0 && degrees[o] != degrees[i] - 1) return "d(" + names[i] + ") has the wrong degree";
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(product[i][j].size()) != n) return "table sizes do not match the basis";
      for (int o = 0; o < n; ++o)
        if (product[i][j][o] != 0 && degrees[o] != degrees[i] + degrees[j])
          return names[i] + "*" + names[j] + " has the wrong degree";
    }
  }
  if (!trace.empty() && static_cast<int>(trace.size()) != n) return "trace has the wrong size";
  for (int i = 0; i < n; ++i) {
    AVec e = basis_vector(i);
    if (!vec_zero(d(d(e)))) return "d^2 != 0 on " + names[i];
    if (multiply(basis_vector(unit), e) != e || multiply(e, basis_vector(unit)) != e)
      return "unit fails on " + names[i];
    for (int j = 0; j < n; ++j) {
      AVec f = basis_vector(j);
      AVec lhs = d(multiply(e, f));
      AVec rhs = multiply(d(e), f);
      AVec t = multiply(e, d(f));
      for (int o = 0; o < n; ++o) rhs[o] += parity_sign(degrees[i]) * t[o];
      if (lhs != rhs) return "Leibniz fails on " + names[i] + ", " + names[j];
      for (int k = 0; k < n; ++k) {
        AVec g = basis_vector(k);
        if (multiply(multiply(e, f), g) != multiply(e, multiply(f, g)))
          return "associativity fails on " + names[i] + ", " + names[j] + ", " + names[k];
      }
    }
  }
  return std::nullopt;
}

bool FiniteDGA::frobenius() const {
  if (trace.empty() || check()) return false;
  const int n = dim();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int o = 0; o < n; ++o) g[i][j] += product[i][j][o] * trace[o];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g[i][j] != parity_sign(static_cast<long long>(degrees[i]) * degrees[j]) * g[j][i]) return false;
  for (int i = 0; i < n; ++i) {
    Rational t = 0;
    for (int o = 0; o < n; ++o) t += diff[i][o] * trace[o];
    if (t != 0) return false;
  }
  return invert(g).has_value();
}

FiniteDGA FiniteDGA::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("dga json: ") + e.what());
  }
  try {
    FiniteDGA a;
    a.name = j.value("name", "");
    for (const auto& b : j.at("basis")) {
      a.names.push_back(b.at("name").get<std::string>());
      a.degrees.push_back(b.at("degree").get<int>());
    }
    const int n = a.dim();
    a.diff.assign(n, AVec(n, 0));
    a.product.assign(n, std::vector<AVec>(n, AVec(n, 0)));
    a.unit = a.index(j.at("unit").get<std::string>());
    if (j.contains("differential"))
      for (const auto& [src, img] : j.at("differential").items())
        for (const auto& [dst, c] : img.items()) a.diff[a.index(src)][a.index(dst)] = json_rational(c);
    if (j.contains("product"))
      for (const auto& row : j.at("product")) {
        if (!row.is_array() || row.size() != 3) throw std::invalid_argument("dga json: product rows are [a, b, {c: coeff}]");
        int x = a.index(row[0].get<std::string>()), y = a.index(row[1].get<std::string>());
        for (const auto& [dst, c] : row[2].items()) a.product[x][y][a.index(dst)] = json_rational(c);
      }
    if (j.contains("trace")) {
      a.trace.assign(n, 0);
      for (const auto& [b, c] : j.at("trace").items()) a.trace[a.index(b)] = json_rational(c);
    }
    if (auto err = a.check()) throw std::invalid_argument("dga json: " + *err);
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("dga json: ") + e.what());
  }
}

std::string FiniteDGA::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["basis"] = nlohmann::ordered_json::array();
  for (int i = 0; i < dim(); ++i) j["basis"].push_back({{"name", names[i]}, {"degree", degrees[i]}});
  j["unit"] = names[unit];
  j["differential"] = nlohmann::ordered_json::object();
  for (int i = 0; i < dim(); ++i)
    for (int o = 0; o < dim(); ++o)
      if (diff[i][o] != 0) j["differential"][names[i]][names[o]] = to_string(diff[i][o]);
  j["product"] = nlohmann::ordered_json::array();
  for (int x = 0; x < dim(); ++x)
    for (int y = 0; y < dim(); ++y) {
      nlohmann::ordered_json img = nlohmann::ordered_json::object();
      for (int o = 0; o < dim(); ++o)
        if (product[x][y][o] != 0) img[names[o]] = to_string(product[x][y][o]);
      if (!img.empty()) j["product"].push_back({names[x], names[y], img});
    }
  if (!trace.empty()) {
    j["trace"] = nlohmann::ordered_json::object();
    for (int o = 0; o < dim(); ++o)
      if (trace[o] != 0) j["trace"][names[o]] = to_string(trace[o]);
  }
  return j.dump(2);
}

namespace {

FiniteDGA blank(std::string name, std::vector<std::string> names, std::vector<int> degrees) {
  FiniteDGA a;
  a.name = std::move(name);
  a.names = std::move(names);
  a.degrees = std::move(degrees);
  const int n = a.dim();
  a.diff.assign(n, AVec(n, 0));
  a.product.assign(n, std::vector<AVec>(n, AVec(n, 0)));
  for (int i = 0; i < n; ++i) {
    a.product[0][i][i] = 1;
    a.product[i][0][i] = 1;
  }
  return a;
}

}  // namespace

FiniteDGA dga_rationals() {
  FiniteDGA a = blank("Q", {"1"}, {0});
  a.trace = {1};
  return a;
}

FiniteDGA dga_dual_numbers() {
  FiniteDGA a = blank("dual-numbers", {"1", "x"}, {0, -2});
  a.trace = {0, 1};
  return a;
}

FiniteDGA dga_truncated() {
  FiniteDGA a = blank("truncated", {"1", "y", "x"}, {0, -1, -2});
  a.diff[1][2] = 1;
  return a;
}

// ---------------------------------------------------------------- MultiMap

MultiMap::MultiMap(int dim, int arity, int degree)
    : dim_(dim), arity_(arity), degree_(degree), inputs_(ipow(dim, arity)), data_(inputs_ * dim, 0) {}

std::vector<int> MultiMap::decode(size_t in) const {
  std::vector<int> args(arity_);
  for (int j = arity_ - 1; j >= 0; --j) {
    args[j] = static_cast<int>(in % dim_);
    in /= dim_;
  }
  return args;
}

size_t MultiMap::encode(const std::vector<int>& args) const {
  size_t in = 0;
  for (int v : args) in = in * dim_ + v;
  return in;
}

bool MultiMap::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

MultiMap& MultiMap::operator+=(const MultiMap& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.dim_ != dim_ || o.arity_ != arity_ || o.degree_ != degree_)
    throw std::invalid_argument("multilinear map: adding maps of different shape");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

MultiMap& MultiMap::operator*=(const Rational& c) {
  for (auto& q : data_) q *= c;
  return *this;
}

bool operator==(const MultiMap& a, const MultiMap& b) {
  bool za = a.is_zero(), zb = b.is_zero();
  if (za || zb) return za && zb;
  return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- EndOperad

EndOperad::EndOperad(FiniteDGA a) : a_(std::move(a)) {
  if (auto err = a_.check()) throw std::invalid_argument("invalid dga: " + *err);
}

int EndOperad::input_degree(size_t in, int arity) const {
  int s = 0;
  const int d = dim();
  for (int j = 0; j < arity; ++j) {
    s += a_.degrees[in % d];
    in /= d;
  }
  return s;
}

MultiMap EndOperad::zero(int arity, int degree) const { return MultiMap(dim(), arity, degree); }

MultiMap EndOperad::mu() const {
  MultiMap m = zero(2, 0);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int o = 0; o < dim(); ++o) m.at(static_cast<size_t>(i) * dim() + j, o) = a_.product[i][j][o];
  return m;
}

MultiMap EndOperad::unit() const {
  MultiMap m = zero(0, 0);
  m.at(0, a_.unit) = 1;
  return m;
}

MultiMap EndOperad::id() const {
  MultiMap m = zero(1, 0);
  for (int i = 0; i < dim(); ++i) m.at(i, i) = 1;
  return m;
}

MultiMap EndOperad::zeta(int k) const {
  if (k < 0) throw std::invalid_argument("zeta: negative arity");
  if (k == 0) return unit();
  MultiMap m = id();
  for (int j = 2; j <= k; ++j) m = compose(mu(), 1, m);
  return m;
}

MultiMap EndOperad::compose(const MultiMap& f, int i, const MultiMap& g) const {
  if (i < 1 || i > f.arity()) throw std::invalid_argument("operad compose: slot out of range");
  const int D = dim(), m = g.arity(), s = f.arity() - i;
  MultiMap out = zero(f.arity() + m - 1, f.degree() + g.degree());
  const size_t P = ipow(D, i - 1), Q = ipow(D, m), S = ipow(D, s);
  for (size_t p = 0; p < P; ++p) {
    const int sign = parity_sign(static_cast<long long>(g.degree()) * input_degree(p, i - 1));
    for (size_t q = 0; q < Q; ++q)
      for (int c = 0; c < D; ++c) {
        const Rational& gc = g.at(q, c);
        if (gc == 0) continue;
        for (size_t t = 0; t < S; ++t) {
          size_t fin = (p * D + c) * S + t, oin = (p * Q + q) * S + t;
          for (int o = 0; o < D; ++o) {
            const Rational& fv = f.at(fin, o);
            if (fv != 0) out.at(oin, o) += sign * gc * fv;
          }
        }
      }
  }
  return out;
}

MultiMap EndOperad::sym(const MultiMap& f, const Perm& sigma) const {
  const int n = f.arity();
  if (static_cast<int>(sigma.size()) != n || !perm_valid(sigma)) throw std::invalid_argument("operad sym: bad permutation");
  Perm inv = perm_inverse(sigma);
  MultiMap out = zero(n, f.degree());
  for (size_t in = 0; in < f.inputs(); ++in) {
    auto v = f.decode(in);
    std::vector<int> w(n);
    for (int a = 0; a < n; ++a) w[a] = v[inv[a] - 1];
    long long e = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (sigma[a] > sigma[b]) e += static_cast<long long>(a_.degrees[v[a]]) * a_.degrees[v[b]];
    size_t fin = f.encode(w);
    for (int o = 0; o < dim(); ++o) out.at(in, o) = parity_sign(e) * f.at(fin, o);
  }
  return out;
}

MultiMap EndOperad::differential(const MultiMap& f) const {
  const int D = dim(), n = f.arity();
  MultiMap out = zero(n, f.degree() - 1);
  const int fs = parity_sign(f.degree());
  for (size_t in = 0; in < f.inputs(); ++in) {
    for (int c = 0; c < D; ++c) {
      const Rational& fv = f.at(in, c);
      if (fv == 0) continue;
      for (int o = 0; o < D; ++o)
        if (a_.diff[c][o] != 0) out.at(in, o) += fv * a_.diff[c][o];
    }
    auto v = f.decode(in);
    int before = 0;
    for (int j = 0; j < n; ++j) {
      const int vj = v[j];
      for (int c = 0; c < D; ++c) {
        const Rational& dv = a_.diff[vj][c];
        if (dv == 0) continue;
        v[j] = c;
        size_t fin = f.encode(v);
        for (int o = 0; o < D; ++o) {
          const Rational& fv = f.at(fin, o);
          if (fv != 0) out.at(in, o) -= fs * parity_sign(before) * dv * fv;
        }
      }
      v[j] = vj;
      before += a_.degrees[vj];
    }
  }
  return out;
}

MultiMap EndOperad::random(Rng& rng, int arity, int degree) const {
  MultiMap out = zero(arity, degree);
  std::uniform_int_distribution<int> coin(0, 1), coef(-3, 3);
  for (size_t in = 0; in < out.inputs(); ++in) {
    const int target = input_degree(in, arity) + degree;
    for (int o = 0; o < dim(); ++o)
      if (a_.degrees[o] == target && coin(rng)) out.at(in, o) = coef(rng);
  }
  return out;
}

// ---------------------------------------------------------------- CyclicStructure

CyclicStructure::CyclicStructure(const EndOperad& e) : e_(e) {
  const FiniteDGA& a = e.algebra();
  if (!a.frobenius()) throw std::invalid_argument("cyclic structure: algebra has no Frobenius pairing");
  const int n = a.dim();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int o = 0; o < n; ++o) g[i][j] += a.product[i][j][o] * a.trace[o];
  gram_inv_ = *invert(g);
}

MultiMap CyclicStructure::tau(const MultiMap& f, int power) const {
  const int k = f.arity();
  if (k == 0) return f;
  power %= (k + 1);
  if (power < 0) power += k + 1;
  const FiniteDGA& a = e_.algebra();
  const int D = a.dim();
  MultiMap x = f;
  for (int rep = 0; rep < power; ++rep) {
    MultiMap out = e_.zero(k, f.degree());
    for (size_t in = 0; in < out.inputs(); ++in) {
      auto args = out.decode(in);  // a_1 .. a_k
      const int ak = args[k - 1];
      AVec rhs(D, 0);
      for (int a0 = 0; a0 < D; ++a0) {
        std::vector<int> xargs(k);
        xargs[0] = a0;
        for (int j = 1; j < k; ++j) xargs[j] = args[j - 1];
        size_t xin = x.encode(xargs);
        Rational pair = 0;
        for (int o = 0; o < D; ++o) {
          if (x.at(xin, o) == 0) continue;
          Rational g = 0;
          for (int t = 0; t < D; ++t) g += a.product[ak][o][t] * a.trace[t];
          pair += x.at(xin, o) * g;
        }
        if (pair == 0) continue;
        const int before = e_.input_degree(xin, k) + f.degree();
        rhs[a0] = parity_sign(static_cast<long long>(a.degrees[ak]) * before) * pair;
      }
      for (int c = 0; c < D; ++c) {
        Rational v = 0;
        for (int a0 = 0; a0 < D; ++a0) v += gram_inv_[c][a0] * rhs[a0];
        out.at(in, c) = v;
      }
    }
    x = std::move(out);
  }
  return x;
}

std::vector<std::string> CyclicStructure::check_axioms(Rng& rng, int max_arity, int trials) const {
  std::vector<std::string> bad;
  std::uniform_int_distribution<int> deg(-4, 2);
  auto arity = [&](int lo) { return std::uniform_int_distribution<int>(lo, max_arity)(rng); };
  auto note = [&](bool ok, const std::string& what) {
    if (!ok && std::find(bad.begin(), bad.end(), what) == bad.end()) bad.push_back(what);
  };
  note(tau(e_.id()) == e_.id(), "tau_1(1) = 1");
  note(tau(e_.mu()) == e_.mu(), "tau_2(mu) = mu");
  for (int t = 0; t < trials; ++t) {
    MultiMap f = e_.random(rng, arity(1), deg(rng));
    note(tau(f, f.arity() + 1) == f, "tau_k^{k+1} = id");
    note(tau(e_.differential(f)) == e_.differential(tau(f)), "tau is a chain map");
    MultiMap x = e_.random(rng, arity(2), deg(rng));
    MultiMap y = e_.random(rng, arity(0), deg(rng));
    int i = std::uniform_int_distribution<int>(2, x.arity())(rng);
    if (x.arity() + y.arity() - 1 >= 1)
      note(tau(e_.compose(x, i, y)) == e_.compose(tau(x), i - 1, y), "tau(x o_i y) = tau x o_{i-1} y");
    MultiMap u = e_.random(rng, arity(1), deg(rng));
    MultiMap v = e_.random(rng, arity(1), deg(rng));
    if (u.arity() + v.arity() - 1 >= 1) {
      MultiMap rhs = e_.compose(tau(v), v.arity(), tau(u));
      rhs *= parity_sign(static_cast<long long>(u.degree()) * v.degree());
      note(tau(e_.compose(u, 1, v)) == rhs, "tau(x o_1 y) = +- tau y o_l tau x");
    }
    MultiMap w = e_.random(rng, 0, deg(rng));
    if (u.arity() >= 2)
      note(tau(e_.compose(u, 1, w)) == e_.compose(tau(u, 2), u.arity(), w), "tau(x o_1 y) = tau^2 x o_k y for l = 0");
  }
  return bad;
}

// ---------------------------------------------------------------- Cochains

bool Cochain::is_zero() const {
  return std::all_of(comps.begin(), comps.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

void Cochain::add(int arity, const MultiMap& f, const Rational& c) {
  if (c == 0 || f.is_zero()) return;
  if (f.degree() != degree + arity) throw std::invalid_argument("cochain: component degree does not match");
  MultiMap g = f;
  g *= c;
  auto it = comps.find(arity);
  if (it == comps.end())
    comps.emplace(arity, std::move(g));
  else
    it->second += g;
}

bool operator==(const Cochain& a, const Cochain& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree != b.degree) return false;
  std::vector<int> ks;
  for (const auto& [k, f] : a.comps) ks.push_back(k);
  for (const auto& [k, f] : b.comps) ks.push_back(k);
  for (int k : ks) {
    auto ia = a.comps.find(k), ib = b.comps.find(k);
    bool za = ia == a.comps.end() || ia->second.is_zero();
    bool zb = ib == b.comps.end() || ib->second.is_zero();
    if (za || zb) {
      if (za != zb) return false;
      continue;
    }
    if (!(ia->second == ib->second)) return false;
  }
  return true;
}

Cochain Hochschild::zero(int degree) const { return Cochain{degree, {}}; }

Cochain Hochschild::unit_cochain() const {
  Cochain c = zero(0);
  c.add(0, e_.unit());
  return c;
}

Cochain Hochschild::random(Rng& rng, int degree, int max_arity) const {
  Cochain c = zero(degree);
  std::uniform_int_distribution<int> keep(0, 3);
  for (int k = 0; k <= max_arity; ++k)
    if (keep(rng) != 0) c.add(k, e_.random(rng, k, degree + k));
  return c;
}

Cochain Hochschild::sum(const Cochain& a, const Cochain& b, const Rational& cb) const {
  if (b.is_zero() || cb == 0) return a;
  if (a.is_zero()) return scaled(b, cb);
  if (a.degree != b.degree) throw std::invalid_argument("cochain: adding cochains of different degree");
  Cochain out = a;
  for (const auto& [k, f] : b.comps) out.add(k, f, cb);
  return out;
}

Cochain Hochschild::scaled(const Cochain& a, const Rational& c) const {
  Cochain out = zero(a.degree);
  for (const auto& [k, f] : a.comps) out.add(k, f, c);
  return out;
}

Cochain Hochschild::boundary(const Cochain& f) const {
  const FiniteDGA& A = e_.algebra();
  const int D = A.dim();
  Cochain out = zero(f.degree - 1);
  for (const auto& [q, g] : f.comps) {
    out.add(q, e_.differential(g));
    // delta_k(g) for g of arity k-1.
    const int k = q + 1, n = g.degree();
    MultiMap dg = e_.zero(k, n);
    for (size_t in = 0; in < dg.inputs(); ++in) {
      auto a = dg.decode(in);
      AVec acc(D, 0);
      auto value = [&](const std::vector<int>& args) {
        size_t gin = g.encode(args);
        AVec v(D);
        for (int o = 0; o < D; ++o) v[o] = g.at(gin, o);
        return v;
      };
      auto accumulate = [&](const AVec& v, int s) {
        for (int o = 0; o < D; ++o)
          if (v[o] != 0) acc[o] += s * v[o];
      };
      // i = 0: a_1 g(a_2..a_k)
      {
        std::vector<int> rest(a.begin() + 1, a.end());
        AVec v = A.multiply(A.basis_vector(a[0]), value(rest));
        accumulate(v, parity_sign(static_cast<long long>(A.degrees[a[0]]) * n));
      }
      for (int i = 1; i <= k - 1; ++i) {
        std::vector<int> args(a.begin(), a.begin() + i);
        args.insert(args.end(), a.begin() + i + 1, a.end());
        for (int c = 0; c < D; ++c) {
          const Rational& pc = A.product[a[i - 1]][a[i]][c];
          if (pc == 0) continue;
          args[i - 1] = c;
          AVec v = value(args);
          for (auto& x : v) x *= pc;
          accumulate(v, parity_sign(i));
        }
      }
      {
        std::vector<int> front(a.begin(), a.end() - 1);
        AVec v = A.multiply(value(front), A.basis_vector(a[k - 1]));
        accumulate(v, parity_sign(k));
      }
      for (int o = 0; o < D; ++o) dg.at(in, o) = acc[o];
    }
    out.add(k, dg, parity_sign(f.degree + k - 1));
  }
  return out;
}

Cochain Hochschild::boundary_operadic(const Cochain& x) const {
  Cochain out = zero(x.degree - 1);
  const MultiMap mu = e_.mu();
  for (const auto& [q, g] : x.comps) {
    out.add(q, e_.differential(g));
    const int k = q + 1;
    MultiMap s = e_.compose(mu, 2, g);
    for (int i = 1; i <= k - 1; ++i) {
      MultiMap t = e_.compose(g, i, mu);
      t *= parity_sign(i);
      s += t;
    }
    MultiMap last = e_.compose(mu, 1, g);
    last *= parity_sign(k);
    s += last;
    out.add(k, s, parity_sign(x.degree + k - 1));
  }
  return out;
}

Cochain Hochschild::cup(const Cochain& f, const Cochain& g) const {
  const FiniteDGA& A = e_.algebra();
  const int D = A.dim();
  Cochain out = zero(f.degree + g.degree);
  for (const auto& [l, fl] : f.comps)
    for (const auto& [m, gm] : g.comps) {
      MultiMap r = e_.zero(l + m, fl.degree() + gm.degree());
      const size_t M = ipow(D, m);
      for (size_t in = 0; in < r.inputs(); ++in) {
        size_t fin = in / M, gin = in % M;
        AVec u(D), v(D);
        for (int o = 0; o < D; ++o) {
          u[o] = fl.at(fin, o);
          v[o] = gm.at(gin, o);
        }
        if (vec_zero(u) || vec_zero(v)) continue;
        const long long e = static_cast<long long>(e_.input_degree(fin, l) + l) * (g.degree + m);
        AVec w = A.multiply(u, v);
        for (int o = 0; o < D; ++o) r.at(in, o) = parity_sign(e) * w[o];
      }
      out.add(l + m, r);
    }
  return out;
}

Cochain Hochschild::star(const Cochain& f, const Cochain& g) const {
  const int D = e_.dim();
  Cochain out = zero(f.degree + g.degree + 1);
  for (const auto& [l, fl] : f.comps)
    for (const auto& [m, gm] : g.comps)
      for (int i = 1; i <= l; ++i) {
        const int k = l + m - 1;
        MultiMap r = e_.zero(k, fl.degree() + gm.degree());
        for (size_t in = 0; in < r.inputs(); ++in) {
          auto a = r.decode(in);
          std::vector<int> inner(a.begin() + (i - 1), a.begin() + (i - 1 + m));
          size_t gin = gm.encode(inner);
          int before = 0;
          for (int j = 0; j < i - 1; ++j) before += e_.algebra().degrees[a[j]];
          const long long dagger =
              static_cast<long long>(g.degree + m) * (before + i - 1) + static_cast<long long>(g.degree + 1) * (l - i);
          std::vector<int> outer(a.begin(), a.begin() + (i - 1));
          outer.push_back(0);
          outer.insert(outer.end(), a.begin() + (i - 1 + m), a.end());
          for (int c = 0; c < D; ++c) {
            const Rational& gc = gm.at(gin, c);
            if (gc == 0) continue;
            outer[i - 1] = c;
            size_t fin = fl.encode(outer);
            for (int o = 0; o < D; ++o)
              if (fl.at(fin, o) != 0) r.at(in, o) += parity_sign(dagger) * gc * fl.at(fin, o);
          }
        }
        out.add(k, r);
      }
  return out;
}

Cochain Hochschild::bracket(const Cochain& f, const Cochain& g) const {
  return sum(star(f, g), star(g, f), -parity_sign(static_cast<long long>(f.degree + 1) * (g.degree + 1)));
}

Cochain Hochschild::bullet(const Cochain& x, const Cochain& y) const {
  Cochain out = zero(x.degree + y.degree);
  const MultiMap mu = e_.mu();
  for (const auto& [l, xl] : x.comps)
    for (const auto& [m, ym] : y.comps)
      out.add(l + m, e_.compose(e_.compose(mu, 1, xl), l + 1, ym), parity_sign(static_cast<long long>(l) * (y.degree + m)));
  return out;
}

Cochain Hochschild::star_operadic(const Cochain& x, const Cochain& y) const {
  Cochain out = zero(x.degree + y.degree + 1);
  for (const auto& [l, xl] : x.comps)
    for (const auto& [m, ym] : y.comps)
      for (int i = 1; i <= l; ++i) {
        long long e = static_cast<long long>(y.degree) * (l + 1) + static_cast<long long>(m) * (i + 1) + l + i;
        out.add(l + m - 1, e_.compose(xl, i, ym), parity_sign(e));
      }
  return out;
}

Cochain Hochschild::bracket_operadic(const Cochain& x, const Cochain& y) const {
  return sum(star_operadic(x, y), star_operadic(y, x),
             -parity_sign(static_cast<long long>(x.degree + 1) * (y.degree + 1)));
}

Cochain Hochschild::bv_delta(const Cochain& x, const CyclicStructure& tau) const {
  Cochain out = zero(x.degree + 1);
  const MultiMap eps = e_.unit();
  for (const auto& [n, xn] : x.comps) {
    if (n == 0) continue;
    const int k = n - 1;
    for (int i = 0; i <= k; ++i)
      out.add(k, e_.compose(tau.tau(xn, k + 1 - i), i + 1, eps), parity_sign(static_cast<long long>(k) * i + x.degree + 1));
  }
  return out;
}

// ---------------------------------------------------------------- suite

std::vector<SuiteResult> hochschild_suite(const FiniteDGA& a, Rng& rng, int samples, int max_arity) {
  std::vector<SuiteResult> out;
  auto result = [&](const std::string& name) -> SuiteResult& {
    for (auto& r : out)
      if (r.name == name) return r;
    out.push_back({name, 0, {}});
    return out.back();
  };
  auto check = [&](const std::string& name, bool ok, const std::function<std::string()>& detail) {
    auto& r = result(name);
    ++r.checks;
    if (!ok && r.failures.size() < 5) r.failures.push_back(detail());
  };
  {
    auto err = a.check();
    check("dga invariants", !err.has_value(), [&] { return *err; });
    if (err) return out;
  }
  EndOperad E(a);
  Hochschild H(E);
  const MultiMap mu = E.mu(), eps = E.unit(), one = E.id();
  check("endomorphism operad", E.compose(mu, 1, mu) == E.compose(mu, 2, mu), [] { return "mu o1 mu != mu o2 mu"; });
  check("endomorphism operad", E.compose(mu, 1, eps) == one, [] { return "mu o1 eps != 1"; });
  check("endomorphism operad", E.compose(mu, 2, eps) == one, [] { return "mu o2 eps != 1"; });

  std::unique_ptr<CyclicStructure> cyc;
  if (a.frobenius()) {
    cyc = std::make_unique<CyclicStructure>(E);
    for (const auto& v : cyc->check_axioms(rng, max_arity, std::max(1, samples / 4)))
      check("cyclic axioms", false, [&] { return v; });
    check("cyclic axioms", true, [] { return ""; });
  }

  std::uniform_int_distribution<int> deg(-3, 1), arity(0, max_arity);
  auto sgn = [](long long n) { return Rational(parity_sign(n)); };
  auto describe = [&](const char* what, const Cochain& f) {
    std::ostringstream os;
    os << what << " (degree " << f.degree << ", arities";
    for (const auto& [k, m] : f.comps) os << " " << k;
    os << ")";
    return os.str();
  };
  for (int s = 0; s + 2 < samples + 2; s += 3) {
    Cochain f = H.random(rng, deg(rng), max_arity);
    Cochain g = H.random(rng, deg(rng), max_arity);
    Cochain h = H.random(rng, deg(rng), max_arity);
    const int F = f.degree, G = g.degree;

    // Endomorphism operad axioms on components.
    {
      MultiMap x = E.random(rng, 1 + arity(rng) % std::max(1, max_arity), deg(rng));
      MultiMap y = E.random(rng, arity(rng), deg(rng));
      MultiMap z = E.random(rng, arity(rng), deg(rng));
      int i = std::uniform_int_distribution<int>(1, x.arity())(rng);
      check("endomorphism operad", E.compose(x, i, one) == x && E.compose(one, 1, x) == x, [] { return "unit law"; });
      if (y.arity() >= 1) {
        int j = std::uniform_int_distribution<int>(1, y.arity())(rng);
        check("endomorphism operad", E.compose(E.compose(x, i, y), i + j - 1, z) == E.compose(x, i, E.compose(y, j, z)),
              [] { return "sequential associativity"; });
      }
      MultiMap lhs = E.differential(E.compose(x, i, y));
      MultiMap rhs = E.compose(E.differential(x), i, y);
      MultiMap t = E.compose(x, i, E.differential(y));
      t *= parity_sign(x.degree());
      rhs += t;
      check("endomorphism operad", lhs == rhs, [] { return "Leibniz rule of the differential"; });
    }

    for (const Cochain* c : {&f, &g, &h}) {
      Cochain d = H.boundary(*c);
      check("boundary squares to zero", H.boundary(d).is_zero(), [&] { return describe("d^2 != 0", *c); });
      check("two-path agreement: boundary", d == H.boundary_operadic(*c),
            [&] { return describe("direct and operadic boundaries differ", *c); });
    }
    Cochain fg = H.cup(f, g);
    check("cup associativity", H.cup(fg, h) == H.cup(f, H.cup(g, h)), [&] { return describe("cup not associative", f); });
    check("cup unit", H.cup(H.unit_cochain(), f) == f && H.cup(f, H.unit_cochain()) == f,
          [&] { return describe("unit fails", f); });
    check("derivation over cup",
          H.boundary(fg) == H.sum(H.cup(H.boundary(f), g), H.cup(f, H.boundary(g)), sgn(F)),
          [&] { return describe("d(f g) != df g + (-1)^|f| f dg", f); });
    check("two-path agreement: cup", fg == H.bullet(f, g), [&] { return describe("bullet differs from cup", f); });

    Cochain b_fg = H.bracket(f, g);
    check("two-path agreement: star", H.star(f, g) == H.star_operadic(f, g),
          [&] { return describe("operadic star differs", f); });
    check("two-path agreement: bracket", b_fg == H.bracket_operadic(f, g),
          [&] { return describe("operadic bracket differs", f); });
    check("bracket antisymmetry", b_fg == H.scaled(H.bracket(g, f), -sgn(static_cast<long long>(F + 1) * (G + 1))),
          [&] { return describe("antisymmetry fails", f); });
    {
      Cochain lhs = H.bracket(f, H.bracket(g, h));
      Cochain rhs = H.sum(H.bracket(b_fg, h), H.bracket(g, H.bracket(f, h)), sgn(static_cast<long long>(F + 1) * (G + 1)));
      check("bracket Jacobi", lhs == rhs, [&] { return describe("Jacobi fails", f); });
    }
    check("derivation over bracket",
          H.boundary(b_fg) == H.sum(H.bracket(H.boundary(f), g), H.bracket(f, H.boundary(g)), sgn(F + 1)),
          [&] { return describe("d{f,g} != {df,g} + (-1)^{|f|+1}{f,dg}", f); });
    if (cyc) {
      for (const Cochain* c : {&f, &g, &h}) {
        Cochain lhs = H.bv_delta(H.boundary(*c), *cyc);
        Cochain rhs = H.scaled(H.boundary(H.bv_delta(*c, *cyc)), -1);
        check("BV operator anti-chain", lhs == rhs, [&] { return describe("Delta d != -d Delta", *c); });
      }
    }
  }
  return out;
}

}  // namespace cactop
