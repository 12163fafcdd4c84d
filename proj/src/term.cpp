#include "cactop/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cactop/enumerate.hpp"
#include "cactop/generators.hpp"

namespace cactop {

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Term::Kind::Gen: return a.gen == b.gen && a.params == b.params && a.power == b.power;
    case Term::Kind::Comp: return a.slot == b.slot && *a.lhs == *b.lhs && *a.rhs == *b.rhs;
    case Term::Kind::Sym: return a.sigma == b.sigma && *a.lhs == *b.lhs;
  }
  return false;
}

namespace {

TermPtr make_gen(char g, std::vector<int> params, int power = 1) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Gen;
  t->gen = g;
  t->params = std::move(params);
  t->power = power;
  colors(*t);
  return t;
}

}  // namespace

TermPtr gen_B(int k, int i, int l) { return make_gen('B', {k, i, l}); }
TermPtr gen_Z(int k) { return make_gen('Z', {k}); }
TermPtr gen_T(int k, int power) { return make_gen('T', {k}, power); }
TermPtr gen_E(int k) { return make_gen('E', {k}); }

TermPtr comp(TermPtr lhs, int slot, TermPtr rhs) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Comp;
  t->lhs = std::move(lhs);
  t->rhs = std::move(rhs);
  t->slot = slot;
  colors(*t);
  return t;
}

TermPtr sym(TermPtr c, Perm sigma) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Sym;
  t->lhs = std::move(c);
  t->sigma = std::move(sigma);
  colors(*t);
  return t;
}

Colors colors(const Term& t) {
  auto bad = [](const std::string& m) { throw std::invalid_argument("ill-formed term: " + m); };
  switch (t.kind) {
    case Term::Kind::Gen: {
      const auto& p = t.params;
      if (t.power < 1 || (t.power != 1 && t.gen != 'T')) bad("only T may carry a power");
      if (t.gen == 'B') {
        if (p.size() != 3 || p[0] < 1 || p[1] < 1 || p[1] > p[0] || p[2] < 0) bad("B[k,i,l] needs 1<=i<=k, l>=0");
        return {p[0] + p[2] - 1, {p[0], p[2]}};
      }
      if (p.size() != 1 || p[0] < 0) bad(std::string(1, t.gen) + "[k] needs k >= 0");
      if (t.gen == 'Z') return {p[0], {}};
      if (t.gen == 'T') {
        if (p[0] < 1) bad("T[k] needs k >= 1");
        return {p[0], {p[0]}};
      }
      if (t.gen == 'E') return {p[0], {p[0]}};
      bad("unknown generator");
    }
    case Term::Kind::Comp: {
      Colors a = colors(*t.lhs), b = colors(*t.rhs);
      if (t.slot < 1 || t.slot > static_cast<int>(a.in.size())) bad("slot out of range");
      if (a.in[t.slot - 1] != b.out)
        bad("colour mismatch at o" + std::to_string(t.slot) + ": " + std::to_string(a.in[t.slot - 1]) +
            " vs " + std::to_string(b.out));
      Colors c{a.out, {}};
      c.in.insert(c.in.end(), a.in.begin(), a.in.begin() + t.slot - 1);
      c.in.insert(c.in.end(), b.in.begin(), b.in.end());
      c.in.insert(c.in.end(), a.in.begin() + t.slot, a.in.end());
      return c;
    }
    case Term::Kind::Sym: {
      Colors a = colors(*t.lhs);
      if (t.sigma.size() != a.in.size() || !perm_valid(t.sigma)) bad("permutation has the wrong size");
      Colors c{a.out, std::vector<int>(a.in.size())};
      for (size_t i = 0; i < a.in.size(); ++i) c.in[i] = a.in[t.sigma[i] - 1];
      return c;
    }
  }
  return {};
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& m) {
    throw std::invalid_argument("parse error at " + std::to_string(pos) + ": " + m + " in '" + s + "'");
  }
  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  int integer() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoi(s.substr(start, pos - start));
  }
  void expect(char c) {
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  TermPtr primary() {
    ws();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      TermPtr t = expr();
      ws();
      expect(')');
      return t;
    }
    if (pos >= s.size() || std::string("BZTE").find(s[pos]) == std::string::npos) fail("expected a generator");
    char g = s[pos++];
    expect('[');
    std::vector<int> params{integer()};
    while (pos < s.size() && s[pos] == ',') {
      ++pos;
      params.push_back(integer());
    }
    expect(']');
    int power = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      power = integer();
    }
    try {
      return make_gen(g, params, power);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  TermPtr unary() {
    TermPtr t = primary();
    while (true) {
      size_t save = pos;
      ws();
      if (pos + 1 < s.size() && s[pos] == 's' && s[pos + 1] == '(') {
        ++pos;
        size_t start = pos;
        while (pos < s.size() && s[pos] == '(') {
          auto close = s.find(')', pos);
          if (close == std::string::npos) fail("unterminated permutation");
          pos = close + 1;
        }
        int n = static_cast<int>(colors(*t).in.size());
        try {
          t = sym(t, perm_from_cycles(s.substr(start, pos - start), n));
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      } else {
        pos = save;
        return t;
      }
    }
  }

  TermPtr expr() {
    TermPtr t = unary();
    while (true) {
      size_t save = pos;
      ws();
      if (pos + 1 < s.size() && s[pos] == 'o' && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
        ++pos;
        int slot = integer();
        TermPtr rhs = unary();
        try {
          t = comp(t, slot, rhs);
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      } else {
        pos = save;
        return t;
      }
    }
  }
};

}  // namespace

TermPtr parse_term(const std::string& s) {
  Parser p{s};
  TermPtr t = p.expr();
  p.ws();
  if (p.pos != s.size()) p.fail("trailing input");
  return t;
}

std::string print_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Gen: {
      std::string out(1, t.gen);
      out += '[';
      for (size_t i = 0; i < t.params.size(); ++i) out += (i ? "," : "") + std::to_string(t.params[i]);
      out += ']';
      if (t.power != 1) out += '^' + std::to_string(t.power);
      return out;
    }
    case Term::Kind::Comp: {
      std::string r = print_term(*t.rhs);
      if (t.rhs->kind == Term::Kind::Comp) r = "(" + r + ")";
      return print_term(*t.lhs) + " o" + std::to_string(t.slot) + " " + r;
    }
    case Term::Kind::Sym: {
      std::string c = print_term(*t.lhs);
      if (t.lhs->kind == Term::Kind::Comp) c = "(" + c + ")";
      return c + " s" + perm_to_cycles(t.sigma);
    }
  }
  return {};
}

FramedCactus evaluate(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Gen:
      switch (t.gen) {
        case 'B': return beta(t.params[0], t.params[1], t.params[2]);
        case 'Z': return zeta(t.params[0]);
        case 'E': return epsilon(t.params[0]);
        default: {
          FramedCactus x = tau(t.params[0]);
          for (int n = 1; n < t.power; ++n) x = compose(x, 1, tau(t.params[0]));
          return x;
        }
      }
    case Term::Kind::Comp: return compose(evaluate(*t.lhs), t.slot, evaluate(*t.rhs));
    case Term::Kind::Sym: return sym_action(evaluate(*t.lhs), t.sigma);
  }
  return {};
}

std::vector<RelationInstance> relation_instances(int b) {
  std::vector<RelationInstance> out;
  auto add = [&](const char* fam, TermPtr l, TermPtr r) { out.push_back({fam, std::move(l), std::move(r)}); };
  for (int k = 1; k <= b; ++k)
    for (int i = 1; i <= k; ++i)
      for (int l = 0; l <= b; ++l)
        for (int m = 0; m <= b; ++m) {
          for (int j = 1; j < i && j <= b; ++j)
            add("beta-commute", comp(gen_B(k + l - 1, j, m), 1, gen_B(k, i, l)),
                sym(comp(gen_B(k + m - 1, i + m - 1, l), 1, gen_B(k, j, m)), Perm{1, 3, 2}));
          for (int j = i; j <= i + l - 1 && j <= b; ++j)
            add("beta-assoc", comp(gen_B(k + l - 1, j, m), 1, gen_B(k, i, l)),
                comp(gen_B(k, i, l + m - 1), 2, gen_B(l, j - i + 1, m)));
        }
  for (int l = 0; l <= b; ++l) add("beta-unit", comp(gen_B(1, 1, l), 1, gen_Z(1)), gen_E(l));
  for (int k = 1; k <= b; ++k)
    for (int i = 1; i <= k; ++i) add("beta-unit", comp(gen_B(k, i, 1), 2, gen_Z(1)), gen_E(k));
  for (int k = 1; k <= b; ++k)
    for (int i = 1; i <= k; ++i)
      for (int l = 0; l <= b; ++l)
        add("zeta-absorb", comp(comp(gen_B(k, i, l), 1, gen_Z(k)), 1, gen_Z(l)), gen_Z(k + l - 1));
  for (int k = 1; k <= b; ++k)
    for (int i = 1; i <= k; ++i)
      for (int l = 0; l <= b; ++l) {
        if (k + l - 1 < 1) continue;
        if (i > 1)
          add("tau-beta", comp(gen_T(k + l - 1), 1, gen_B(k, i, l)), comp(gen_B(k, i - 1, l), 1, gen_T(k)));
        else if (l >= 1)
          add("tau-beta", comp(gen_T(k + l - 1), 1, gen_B(k, 1, l)),
              comp(comp(sym(gen_B(l, l, k), Perm{2, 1}), 2, gen_T(l)), 1, gen_T(k)));
      }
  for (int k = 1; k <= b; ++k) {
    TermPtr p = gen_T(k);
    for (int n = 0; n < k; ++n) p = comp(p, 1, gen_T(k));
    add("tau-order", p, gen_E(k));
    add("tau-zeta", comp(gen_T(k), 1, gen_Z(k)), gen_Z(k));
  }
  return out;
}

std::vector<FramedCactus> enumerate_by_terms(const Profile& p, bool framed) {
  std::map<CactusKey, FramedCactus> found;
  auto record = [&](const FramedCactus& x) {
    if (x.profile() == p && (framed || has_canonical_framing(x))) found.emplace(cactus_key(x), x);
  };
  if (p.r() == 0) {
    record(zeta(p.k));
  }
  const int units = p.k + 1 + profile_edges(p);
  // Choose zeta sizes m_1 <= m_2 <= ... with sum (m+1) <= units.
  std::vector<int> ms;
  std::function<void(int, int)> choose_ms = [&](int lo, int budget) {
    std::vector<int> colours = p.lobes;
    colours.insert(colours.end(), ms.begin(), ms.end());
    const int rr = static_cast<int>(colours.size());
    if (rr >= 1) {
      std::vector<int> order(rr);
      std::iota(order.begin(), order.end(), 0);
      do {
        // Right-combed word with leaves colours[order[0]], colours[order[1]], ...
        std::vector<TermPtr> words;
        std::function<void(int, TermPtr, int)> grow = [&](int next, TermPtr w, int out) {
          if (next == rr) {
            words.push_back(w);
            return;
          }
          int n = colours[order[next]];
          for (int i = 1; i <= out; ++i) grow(next + 1, comp(gen_B(out, i, n), 1, w), out + n - 1);
        };
        grow(1, gen_E(colours[order[0]]), colours[order[0]]);
        Perm sigma(rr);
        for (int a = 0; a < rr; ++a) sigma[order[a]] = a + 1;
        for (auto& w : words) {
          TermPtr t = sym(w, sigma);
          for (int m : ms) t = comp(t, p.r() + 1, gen_Z(m));
          FramedCactus x;
          try {
            x = evaluate(*t);
          } catch (const std::invalid_argument&) {
            continue;
          }
          if (!framed) {
            record(x);
            continue;
          }
          std::vector<int> e(p.r(), 0);
          while (true) {
            FramedCactus y = x;
            for (int s = 0; s < p.r(); ++s) y = twist(y, s + 1, e[s]);
            record(y);
            int s = 0;
            while (s < p.r() && ++e[s] > p.lobes[s]) e[s++] = 0;
            if (s == p.r()) break;
          }
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
    for (int m = lo; m + 1 <= budget; ++m) {
      ms.push_back(m);
      choose_ms(m, budget - m - 1);
      ms.pop_back();
    }
  };
  choose_ms(0, units);
  std::vector<FramedCactus> out;
  for (auto& [k, x] : found) out.push_back(x);
  return out;
}

}  // namespace cactop
