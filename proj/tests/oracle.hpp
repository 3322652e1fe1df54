#pragma once

// Brute-force oracle for finite rings. Arithmetic is rebuilt from the
// RingSpec here; only the Element encoding is shared with the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "taufact/factorization.hpp"
#include "taufact/ring.hpp"
#include "taufact/tau.hpp"

namespace oracle {

using taufact::AssociateKind;
using taufact::Element;
using taufact::RingSpec;
using taufact::TauSpec;

struct Arith {
  std::vector<Element> elems;
  std::function<Element(const Element&, const Element&)> add, mul;
};

inline Arith arith(const RingSpec& s) {
  Arith a;
  switch (s.kind) {
    case RingSpec::Kind::ModInt: {
      std::int64_t n = s.n;
      for (std::int64_t v = 0; v < n; ++v) a.elems.emplace_back(v);
      a.add = [n](const Element& x, const Element& y) { return Element((x.value + y.value) % n); };
      a.mul = [n](const Element& x, const Element& y) { return Element((x.value * y.value) % n); };
      break;
    }
    case RingSpec::Kind::PolyQuot: {
      std::int64_t p = s.p;
      std::vector<std::int64_t> f = s.f;  // monic, low to high
      std::size_t d = f.size() - 1;
      std::vector<std::int64_t> c(d, 0);
      std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == d) {
          a.elems.push_back(Element::poly(c));
          return;
        }
        for (std::int64_t v = 0; v < p; ++v) {
          c[i] = v;
          fill(i + 1);
        }
      };
      fill(0);
      a.add = [p, d](const Element& x, const Element& y) {
        std::vector<std::int64_t> r(d);
        for (std::size_t i = 0; i < d; ++i) r[i] = (x.coeffs[i] + y.coeffs[i]) % p;
        return Element::poly(r);
      };
      a.mul = [p, d, f](const Element& x, const Element& y) {
        std::vector<std::int64_t> r(2 * d, 0);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) r[i + j] = (r[i + j] + x.coeffs[i] * y.coeffs[j]) % p;
        for (std::size_t k = r.size(); k-- > d;) {
          std::int64_t t = r[k];
          if (!t) continue;
          for (std::size_t i = 0; i <= d; ++i) r[k - d + i] = ((r[k - d + i] - t * f[i]) % p + p) % p;
        }
        r.resize(d);
        return Element::poly(r);
      };
      break;
    }
    case RingSpec::Kind::Product: {
      Arith l = arith(*s.left), r = arith(*s.right);
      for (const auto& x : l.elems)
        for (const auto& y : r.elems) a.elems.push_back(Element::pair(x, y));
      a.add = [l, r](const Element& x, const Element& y) {
        return Element::pair(l.add(x.parts[0], y.parts[0]), r.add(x.parts[1], y.parts[1]));
      };
      a.mul = [l, r](const Element& x, const Element& y) {
        return Element::pair(l.mul(x.parts[0], y.parts[0]), r.mul(x.parts[1], y.parts[1]));
      };
      break;
    }
    case RingSpec::Kind::Integers: throw std::invalid_argument("oracle: infinite ring");
  }
  std::sort(a.elems.begin(), a.elems.end());
  return a;
}

/// Index-based tables for one finite ring.
struct Ring {
  std::vector<Element> e;
  std::vector<std::vector<int>> mul, add;
  int zero = 0, one = 0;
  std::vector<bool> unit, regular;
  std::vector<int> units;
  std::vector<std::vector<bool>> divides;  // divides[b][a]: b | a

  explicit Ring(const RingSpec& s) {
    Arith a = arith(s);
    e = a.elems;
    int n = static_cast<int>(e.size());
    std::map<Element, int> at;
    for (int i = 0; i < n; ++i) at[e[i]] = i;
    mul.assign(n, std::vector<int>(n));
    add.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mul[i][j] = at.at(a.mul(e[i], e[j]));
        add[i][j] = at.at(a.add(e[i], e[j]));
      }
    for (int i = 0; i < n; ++i) {
      bool z = true, o = true;
      for (int j = 0; j < n; ++j) {
        z = z && add[i][j] == j;
        o = o && mul[i][j] == j;
      }
      if (z) zero = i;
      if (o) one = i;
    }
    unit.assign(n, false);
    regular.assign(n, false);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) unit[i] = unit[i] || mul[i][j] == one;
      bool zd = false;
      for (int j = 0; j < n; ++j) zd = zd || (j != zero && mul[i][j] == zero);
      regular[i] = i != zero && !zd;
      if (unit[i]) units.push_back(i);
    }
    std::sort(units.begin(), units.end(), [&](int x, int y) { return (x != one) < (y != one) || ((x != one) == (y != one) && x < y); });
    divides.assign(n, std::vector<bool>(n, false));
    for (int b = 0; b < n; ++b)
      for (int r = 0; r < n; ++r) divides[b][mul[r][b]] = true;
  }

  int size() const { return static_cast<int>(e.size()); }
  int index(const Element& x) const { return static_cast<int>(std::lower_bound(e.begin(), e.end(), x) - e.begin()); }
  bool sharp(int a) const { return a != zero && !unit[a]; }

  bool assoc(int a, int b) const { return divides[a][b] && divides[b][a]; }
  bool strong(int a, int b) const {
    for (int u : units)
      if (mul[u][b] == a) return true;
    return false;
  }
  bool very(int a, int b) const {
    if (a == zero && b == zero) return true;
    if (!assoc(a, b)) return false;
    for (int r = 0; r < size(); ++r) {
      if (mul[r][b] == a && !unit[r]) return false;
      if (mul[r][a] == b && !unit[r]) return false;
    }
    return true;
  }
  bool related(int a, int b, AssociateKind k) const {
    switch (k) {
      case AssociateKind::Associate: return assoc(a, b);
      case AssociateKind::StrongAssociate: return strong(a, b);
      case AssociateKind::VeryStrongAssociate: return very(a, b);
    }
    return false;
  }
  bool comaximal(int a, int b) const {
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y)
        if (add[mul[a][x]][mul[b][y]] == one) return true;
    return false;
  }

  bool tau(const TauSpec& t, int a, int b) const {
    switch (t.kind) {
      case TauSpec::Kind::Full: return true;
      case TauSpec::Kind::Empty: return false;
      case TauSpec::Kind::Subset: {
        auto in = [&](int x) { return std::find(t.subset.begin(), t.subset.end(), e[x]) != t.subset.end(); };
        return in(a) && in(b);
      }
      case TauSpec::Kind::Comaximal: return comaximal(a, b);
      case TauSpec::Kind::ZeroProduct: return mul[a][b] == zero;
      case TauSpec::Kind::Regular: return regular[a] && regular[b];
      case TauSpec::Kind::RegCap: return regular[a] && regular[b] && tau(*t.inner, a, b);
    }
    return false;
  }
};

using Multiset = std::vector<int>;  // sorted factor indices

/// Every tau-factorization of length <= L, keyed by target: for each
/// nondecreasing sequence over R# with all distinct positions tau-related,
/// every unit multiple of its product. The trivial factorization of 0 is
/// added by hand.
inline std::map<int, std::set<Multiset>> factorizations(const Ring& R, const TauSpec& t, int L) {
  std::vector<int> sharp;
  for (int i = 0; i < R.size(); ++i)
    if (R.sharp(i)) sharp.push_back(i);
  std::vector<std::vector<bool>> rel(R.size(), std::vector<bool>(R.size(), false));
  for (int a : sharp)
    for (int b : sharp) rel[a][b] = R.tau(t, a, b);
  std::map<int, std::set<Multiset>> out;
  Multiset cur;
  std::function<void(std::size_t, int)> go = [&](std::size_t from, int prod) {
    if (!cur.empty())
      for (int u : R.units) out[R.mul[u][prod]].insert(cur);
    if (static_cast<int>(cur.size()) == L) return;
    for (std::size_t k = from; k < sharp.size(); ++k) {
      int x = sharp[k];
      bool ok = true;
      for (int y : cur) ok = ok && rel[x][y];
      if (!ok) continue;
      cur.push_back(x);
      go(k, R.mul[prod][x]);
      cur.pop_back();
    }
  };
  go(0, R.one);
  out[R.zero].insert(Multiset{R.zero});
  return out;
}

/// Canonical key, built straight from the definitions: a factor's slot is
/// the least beta-related element, or the factor itself (flagged) when it is
/// not beta-related to itself.
inline taufact::CanonicalKey key(const Ring& R, const Multiset& m, AssociateKind beta) {
  taufact::CanonicalKey k;
  for (int x : m) {
    if (!R.related(x, x, beta)) {
      k.push_back({R.e[x], true});
      continue;
    }
    for (int y = 0; y < R.size(); ++y)
      if (R.related(x, y, beta)) {
        k.push_back({R.e[y], false});
        break;
      }
  }
  std::sort(k.begin(), k.end());
  return k;
}

/// The five irreducibility flags of a non-unit over factorizations of
/// length <= L.
inline std::array<bool, 5> flags(const Ring& R, int a, const std::set<Multiset>& fs) {
  bool irr = true, strong = true, m = true, unref = true;
  for (const auto& f : fs) {
    bool some = false, some_strong = false, all = true;
    for (int x : f) {
      some = some || R.assoc(a, x);
      some_strong = some_strong || R.strong(a, x);
      all = all && R.assoc(a, x);
    }
    irr = irr && some;
    strong = strong && some_strong;
    m = m && all;
    unref = unref && f.size() == 1;
  }
  return {irr, strong, m, unref, unref && R.very(a, a)};
}

/// U-partition conditions from the definition, over index sets.
inline bool u_valid(const Ring& R, const Multiset& ines, const Multiset& ess) {
  if (ess.empty()) return false;
  auto prod = [&](const Multiset& xs) {
    int p = R.one;
    for (int x : xs) p = R.mul[p][x];
    return p;
  };
  int pe = prod(ess);
  for (int x : ines)
    if (!R.assoc(R.mul[x][pe], pe)) return false;
  for (std::size_t j = 0; j < ess.size(); ++j) {
    Multiset rest;
    for (std::size_t k = 0; k < ess.size(); ++k)
      if (k != j) rest.push_back(ess[k]);
    int pr = prod(rest);
    if (R.assoc(R.mul[ess[j]][pr], pr)) return false;
  }
  return true;
}

// ---- integers ----

/// Factorization classes of a nonzero non-unit integer up to associates,
/// under a relation on absolute values, by divisor search.
inline std::set<std::vector<std::int64_t>> z_classes(std::int64_t a, const std::function<bool(std::int64_t, std::int64_t)>& rel) {
  a = a < 0 ? -a : a;
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> go = [&](std::int64_t rest, std::int64_t from) {
    if (rest == 1) {
      if (!cur.empty()) out.insert(cur);
      return;
    }
    for (std::int64_t d = from; d <= rest; ++d) {
      if (rest % d) continue;
      bool ok = true;
      for (auto y : cur) ok = ok && rel(d, y);
      if (!ok) continue;
      cur.push_back(d);
      go(rest / d, d);
      cur.pop_back();
    }
  };
  go(a, 2);
  return out;
}

}  // namespace oracle
