#include "cactop/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cactop {

void axpy(QVec& y, const Rational& a, const QVec& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    if (v == 0) continue;
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * v);
    } else {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

void SparseMatrix::add(int row, int col, const Rational& v) {
  if (row < 0 || row >= rows || col < 0 || col >= cols) throw std::out_of_range("SparseMatrix::add");
  Rational c = v;
  c.canonicalize();
  axpy(columns[col], 1, QVec{{row, c}});
}

QVec SparseMatrix::apply(const QVec& x) const {
  QVec y;
  for (const auto& [j, v] : x) {
    if (j < 0 || j >= cols) throw std::out_of_range("SparseMatrix::apply");
    axpy(y, v, columns[j]);
  }
  return y;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const QVec& c) { return c.empty(); });
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
  SparseMatrix c(a.rows, b.cols);
  for (int j = 0; j < b.cols; ++j) c.columns[j] = a.apply(b.columns[j]);
  return c;
}

namespace {

using ZVec = std::vector<std::pair<int, mpz_class>>;

// Integer vector proportional to x, with a positive scale s: out = s x.
ZVec to_integer(const QVec& x, mpz_class& s) {
  s = 1;
  for (const auto& [i, v] : x) s = lcm(s, mpz_class(v.get_den()));
  ZVec out;
  for (const auto& [i, v] : x) out.emplace_back(i, mpz_class(v.get_num() * (s / v.get_den())));
  return out;
}

// a x - b y
ZVec lincomb(const mpz_class& a, const ZVec& x, const mpz_class& b, const ZVec& y) {
  ZVec out;
  size_t p = 0, q = 0;
  while (p < x.size() || q < y.size()) {
    if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
      out.emplace_back(x[p].first, a * x[p].second);
      ++p;
    } else if (p == x.size() || y[q].first < x[p].first) {
      out.emplace_back(y[q].first, -b * y[q].second);
      ++q;
    } else {
      mpz_class v = a * x[p].second - b * y[q].second;
      if (v != 0) out.emplace_back(x[p].first, v);
      ++p;
      ++q;
    }
  }
  return out;
}

void remove_content(ZVec& x, ZVec& y) {
  mpz_class g = 0;
  for (auto& e : x) g = gcd(g, e.second);
  for (auto& e : y) g = gcd(g, e.second);
  if (g <= 1) return;
  for (auto& e : x) e.second /= g;
  for (auto& e : y) e.second /= g;
}

QVec to_rational(const ZVec& x, const mpz_class& s) {
  QVec out;
  for (const auto& [i, v] : x) {
    Rational q(v, s);
    q.canonicalize();
    out.emplace(i, q);
  }
  return out;
}

}  // namespace

ColumnReduction::ColumnReduction(const SparseMatrix& m) : rows_(m.rows) {
  reduced_.resize(m.cols);
  combo_.resize(m.cols);
  for (int j = 0; j < m.cols; ++j) {
    mpz_class s;
    ZVec r = to_integer(m.columns[j], s);
    ZVec v{{j, s}};
    while (!r.empty()) {
      auto it = pivot_.find(r.back().first);
      if (it == pivot_.end()) break;
      int p = it->second;
      mpz_class a = reduced_[p].back().second, b = r.back().second;
      mpz_class g = gcd(a, b);
      a /= g;
      b /= g;
      r = lincomb(a, r, b, reduced_[p]);
      v = lincomb(a, v, b, combo_[p]);
      remove_content(r, v);
    }
    if (r.empty()) {
      kernel_.push_back(to_rational(v, 1));
    } else {
      pivot_[r.back().first] = j;
      ++rank_;
    }
    reduced_[j] = std::move(r);
    combo_[j] = std::move(v);
  }
}

std::optional<QVec> ColumnReduction::solve(const QVec& y) const {
  mpz_class s;
  ZVec r = to_integer(y, s);
  ZVec w;
  while (!r.empty()) {
    auto it = pivot_.find(r.back().first);
    if (it == pivot_.end()) return std::nullopt;
    int p = it->second;
    mpz_class a = reduced_[p].back().second, b = r.back().second;
    mpz_class g = gcd(a, b);
    a /= g;
    b /= g;
    // Invariant: s y = m w + r.
    r = lincomb(a, r, b, reduced_[p]);
    w = lincomb(a, w, -b, combo_[p]);
    s *= a;
  }
  return to_rational(w, s);
}

bool ColumnReduction::in_span(const QVec& y) const { return solve(y).has_value(); }

ChainComplexQ::ChainComplexQ(std::map<int, std::vector<std::string>> basis, std::map<int, SparseMatrix> boundary)
    : basis_(std::move(basis)), d_(std::move(boundary)) {
  for (auto& [n, m] : d_) {
    if (m.cols != dim(n) || m.rows != dim(n - 1))
      throw std::invalid_argument("boundary in degree " + std::to_string(n) + " has the wrong shape");
    if (static_cast<int>(m.columns.size()) != m.cols) throw std::invalid_argument("malformed matrix");
  }
  for (auto& [n, m] : d_) {
    auto it = d_.find(n - 1);
    if (it != d_.end() && !multiply(it->second, m).is_zero())
      throw std::invalid_argument("d o d != 0 in degree " + std::to_string(n));
  }
}

int ChainComplexQ::dim(int n) const {
  auto it = basis_.find(n);
  return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& ChainComplexQ::basis(int n) const {
  static const std::vector<std::string> empty;
  auto it = basis_.find(n);
  return it == basis_.end() ? empty : it->second;
}

std::vector<int> ChainComplexQ::degrees() const {
  std::vector<int> out;
  for (auto& [n, b] : basis_)
    if (!b.empty()) out.push_back(n);
  return out;
}

SparseMatrix ChainComplexQ::d(int n) const {
  auto it = d_.find(n);
  if (it != d_.end()) return it->second;
  return SparseMatrix(dim(n - 1), dim(n));
}

const ColumnReduction& ChainComplexQ::reduction(int n) const {
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, ColumnReduction(d(n))).first;
  return it->second;
}

HomologyGroup ChainComplexQ::homology(int n) const {
  HomologyGroup h;
  const auto& dn = reduction(n);
  const auto& dn1 = reduction(n + 1);
  h.betti = dim(n) - dn.rank() - dn1.rank();
  // Extend the image of d_{n+1} by kernel vectors, one at a time.
  SparseMatrix span(dim(n), 0);
  for (const auto& col : d(n + 1).columns) {
    span.columns.push_back(col);
    ++span.cols;
  }
  int base_rank = dn1.rank();
  for (const auto& z : dn.kernel()) {
    if (static_cast<int>(h.representatives.size()) == h.betti) break;
    SparseMatrix trial = span;
    trial.columns.push_back(z);
    ++trial.cols;
    ColumnReduction red(trial);
    if (red.rank() > base_rank) {
      span = std::move(trial);
      base_rank = red.rank();
      h.representatives.push_back(z);
    }
  }
  if (static_cast<int>(h.representatives.size()) != h.betti)
    throw std::logic_error("homology: representative count does not match the Betti number");
  return h;
}

std::map<int, int> ChainComplexQ::betti() const {
  std::map<int, int> out;
  for (int n : degrees()) {
    int b = dim(n) - reduction(n).rank() - reduction(n + 1).rank();
    if (b) out[n] = b;
  }
  return out;
}

int ChainComplexQ::total_betti() const {
  int t = 0;
  for (auto [n, b] : betti()) t += b;
  return t;
}

bool ChainComplexQ::is_cycle(int n, const QVec& z) const { return d(n).apply(z).empty(); }

std::optional<QVec> ChainComplexQ::boundary_witness(int n, const QVec& z) const {
  if (z.empty()) return QVec{};
  return reduction(n + 1).solve(z);
}

ChainComplexQ DoubleComplexQ::total(int K) const {
  // Offsets of each column block inside T_N.
  std::map<int, std::vector<std::string>> basis;
  std::map<int, std::map<int, int>> offset;  // N -> k -> offset
  std::set<int> totals;
  for (auto& [k, c] : columns)
    if (k <= K)
      for (int n : c.degrees()) totals.insert(n - k);
  for (int N : totals)
    for (auto& [k, c] : columns) {
      if (k > K) continue;
      offset[N][k] = static_cast<int>(basis[N].size());
      for (const auto& name : c.basis(N + k)) basis[N].push_back(std::to_string(k) + "|" + name);
    }
  std::map<int, SparseMatrix> d;
  for (int N : totals) {
    int rows = static_cast<int>(basis[N - 1].size()), cols = static_cast<int>(basis[N].size());
    if (cols == 0 || rows == 0) continue;
    SparseMatrix m(rows, cols);
    for (auto& [k, c] : columns) {
      if (k > K || c.dim(N + k) == 0) continue;
      int src = offset[N][k];
      SparseMatrix v = c.d(N + k);
      if (offset.count(N - 1) && offset[N - 1].count(k))
        for (int j = 0; j < v.cols; ++j)
          for (auto& [i, x] : v.columns[j]) m.add(offset[N - 1][k] + i, src + j, x);
      auto dk = delta.find(k + 1);
      if (k + 1 <= K && dk != delta.end()) {
        auto mk = dk->second.find(N + k);
        if (mk != dk->second.end() && offset.count(N - 1) && offset[N - 1].count(k + 1))
          for (int j = 0; j < mk->second.cols; ++j)
            for (auto& [i, x] : mk->second.columns[j]) m.add(offset[N - 1][k + 1] + i, src + j, x);
      }
    }
    d[N] = std::move(m);
  }
  return ChainComplexQ(std::move(basis), std::move(d));
}

DoubleComplexQ from_cosimplicial(const std::map<int, ChainComplexQ>& columns,
                                 const std::map<int, std::vector<std::map<int, SparseMatrix>>>& cofaces) {
  DoubleComplexQ dc;
  dc.columns = columns;
  for (auto& [k, faces] : cofaces) {
    for (size_t i = 0; i < faces.size(); ++i)
      for (auto& [n, m] : faces[i]) {
        auto& target = dc.delta[k][n];
        if (target.cols == 0 && target.rows == 0) target = SparseMatrix(m.rows, m.cols);
        Rational sign = ((n + static_cast<int>(i)) % 2 == 0) ? 1 : -1;
        for (int j = 0; j < m.cols; ++j) axpy(target.columns[j], sign, m.columns[j]);
      }
  }
  return dc;
}

}  // namespace cactop
