#include "taufact/properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "taufact/errors.hpp"
#include "taufact/text.hpp"
#include "taufact/ufactorization.hpp"

namespace taufact {

std::string to_string(PropertyKind k) {
  switch (k) {
    case PropertyKind::Atomic: return "atomic";
    case PropertyKind::ACCP: return "accp";
    case PropertyKind::BFR: return "bfr";
    case PropertyKind::FFR: return "ffr";
    case PropertyKind::WFFR: return "wffr";
    case PropertyKind::IdfRing: return "df";
    case PropertyKind::HFR: return "hfr";
    case PropertyKind::UFR: return "ufr";
  }
  return "?";
}

std::string to_string(Scope s) {
  switch (s) {
    case Scope::Plain: return "plain";
    case Scope::RegularElements: return "regular";
    case Scope::RegCapAll: return "regcap";
    case Scope::RegCapU: return "regcap-u";
  }
  return "?";
}

Scope parse_scope(std::string_view text) {
  for (auto s : kAllScopes)
    if (text == to_string(s)) return s;
  throw SpecError("unknown scope \"" + std::string(text) + "\" (expected plain, regular, regcap or regcap-u)");
}

bool PropertyId::takes_alpha() const {
  return kind == PropertyKind::Atomic || kind == PropertyKind::IdfRing || kind == PropertyKind::HFR ||
         kind == PropertyKind::UFR;
}

bool PropertyId::takes_beta() const {
  return kind == PropertyKind::FFR || kind == PropertyKind::WFFR || kind == PropertyKind::IdfRing ||
         kind == PropertyKind::UFR;
}

PropertyId PropertyId::normalized() const {
  PropertyId p = *this;
  if (!takes_alpha() || scope == Scope::RegularElements) p.alpha = IrreducibleKind::Irreducible;
  if (!takes_beta()) p.beta = AssociateKind::Associate;
  return p;
}

std::string to_string(const PropertyId& p) {
  std::string s = to_string(p.kind);
  std::vector<std::string> args;
  if (p.takes_alpha() && p.scope != Scope::RegularElements) args.push_back(to_string(p.alpha));
  if (p.takes_beta()) args.push_back(to_string(p.beta));
  if (!args.empty()) {
    s += "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i];
    s += ")";
  }
  return s + "@" + to_string(p.scope);
}

std::vector<PropertyId> all_properties(Scope s) {
  std::vector<PropertyId> out;
  for (auto k : {PropertyKind::Atomic, PropertyKind::ACCP, PropertyKind::BFR, PropertyKind::FFR, PropertyKind::WFFR,
                 PropertyKind::IdfRing, PropertyKind::HFR, PropertyKind::UFR}) {
    PropertyId base{k, IrreducibleKind::Irreducible, AssociateKind::Associate, s};
    std::vector<IrreducibleKind> alphas{IrreducibleKind::Irreducible};
    if (base.takes_alpha() && s != Scope::RegularElements)
      alphas.assign(std::begin(kAllIrreducibleKinds), std::end(kAllIrreducibleKinds));
    std::vector<AssociateKind> betas{AssociateKind::Associate};
    if (base.takes_beta()) betas.assign(std::begin(kAllAssociateKinds), std::end(kAllAssociateKinds));
    for (auto a : alphas)
      for (auto b : betas) out.push_back(PropertyId{k, a, b, s});
  }
  return out;
}

Rational Rational::of(std::int64_t n, std::int64_t d) {
  if (d == 0) throw PreconditionError("rational with zero denominator");
  if (d < 0) n = -n, d = -d;
  std::int64_t g = std::gcd(n, d);
  if (g > 1) n /= g, d /= g;
  return Rational{n, d};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(Elasticity::Kind k) {
  switch (k) {
    case Elasticity::Kind::Finite: return "finite";
    case Elasticity::Kind::Infinite: return "infinite";
    case Elasticity::Kind::UndefinedEmptyScope: return "undefined-empty-scope";
    case Elasticity::Kind::UnknownAtCap: return "unknown-at-cap";
  }
  return "?";
}

nlohmann::json to_json(const Elasticity& e) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& [x, r] : e.per_element)
    per.push_back({{"element", element_to_json(x)}, {"rho", r ? nlohmann::json(r->to_string()) : "infinite"}});
  nlohmann::json j{{"kind", to_string(e.kind)}, {"cap", e.cap}, {"scoped", e.scoped}, {"per_element", per}};
  if (e.kind == Elasticity::Kind::Finite) j["value"] = e.value.to_string();
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

// ----------------------------------------------------------------- Analyzer

namespace {

constexpr int kAlphaBits = 5;

std::uint32_t true_bit(IrreducibleKind k) { return 1u << static_cast<int>(k); }
std::uint32_t possible_bit(IrreducibleKind k) { return 1u << (kAlphaBits + static_cast<int>(k)); }

// Lengths of the alpha-factorizations of one element.
struct Span {
  Tri exists = Tri::Unknown;
  int min = 0;
  std::optional<int> max;
  bool unbounded = false;

  bool single_length() const { return exists == Tri::True && !unbounded && max && *max == min; }
};

struct Divisors {
  bool ok = true;
  std::vector<Element> all;         // tau-divisors
  std::vector<Element> nontrivial;  // factors of non-trivial factorizations
};

struct UData {
  bool exact = false;
  Unbounded unbounded = Unbounded::Unknown;
  std::optional<Pump> pump;
  std::vector<UFactorization> all;
};

}  // namespace

struct Analyzer::Impl {
  struct Rel {
    explicit Rel(TauRelation rel) : t(std::move(rel)) {}
    TauRelation t;
    std::map<Element, IrreducibilityProfile> prof;
    std::map<std::pair<Element, int>, FactorizationSet> fs;
    std::map<std::tuple<Element, int, bool>, Span> spans;
    std::map<Element, Divisors> divs;
    std::map<Element, std::optional<int>> height;
    std::map<std::pair<Element, bool>, UData> udata;
    std::map<Element, std::optional<int>> uheight;
  };

  Impl(const TauRelation& t, std::optional<std::vector<Element>> sc, int c)
      : R(t.ring()), cap(c), scoped(sc.has_value()), plain(t),
        regcap(TauRelation::build(TauSpec::reg_cap(t.spec()), t.ring())) {
    if (cap < 2) throw PreconditionError("cap must be >= 2");
    std::vector<Element> elems;
    if (sc) {
      for (const auto& x : *sc) {
        R.check_element(x);
        if (!R.finite() && R.is_zero(x)) throw PreconditionError("scope of an infinite ring may not contain 0");
        if (!R.is_unit(x)) elems.push_back(x);
      }
      std::sort(elems.begin(), elems.end());
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    } else {
      if (!R.finite()) throw UnsupportedError("properties of an infinite ring need an element scope");
      for (const auto& x : R.elements())
        if (!R.is_unit(x)) elems.push_back(x);
      std::sort(elems.begin(), elems.end());
    }
    // 0 last
    auto z = std::find(elems.begin(), elems.end(), R.zero());
    if (z != elems.end()) std::rotate(z, z + 1, elems.end());
    dom_all = elems;
    for (const auto& x : elems)
      if (R.is_regular(x)) dom_reg.push_back(x);
  }

  Ring R;
  int cap;
  bool scoped;
  Rel plain, regcap;
  std::vector<Element> dom_all, dom_reg;
  std::map<std::pair<PropertyId, Element>, Verdict> memo;
  std::map<PropertyId, Verdict> ring_memo;
  std::map<Element, Element> keys;
  std::map<std::pair<Element, int>, KeyPart> classes;
  std::map<Element, bool> self_very_;

  Rel& rel(Scope s) { return s == Scope::RegCapAll || s == Scope::RegCapU ? regcap : plain; }

  const std::vector<Element>& domain(Scope s) const { return s == Scope::RegularElements ? dom_reg : dom_all; }

  // Least element of the unit orbit; every cached per-element fact except
  // the factorization sets themselves depends on the orbit only.
  const Element& key(const Element& a) {
    auto it = keys.find(a);
    if (it != keys.end()) return it->second;
    Element best = a;
    for (const auto& u : R.units()) best = std::min(best, R.mul(u, a));
    return keys.emplace(a, best).first->second;
  }

  const IrreducibilityProfile& profile(Rel& r, const Element& a) {
    auto it = r.prof.find(a);
    if (it != r.prof.end()) return it->second;
    return r.prof.emplace(a, classify(r.t, a, cap)).first->second;
  }

  Tri flag(Rel& r, const Element& x, IrreducibleKind k) { return profile(r, key(x))[k]; }

  std::uint32_t tags(Rel& r, const Element& x) {
    std::uint32_t m = 0;
    for (auto k : kAllIrreducibleKinds) {
      Tri f = flag(r, x, k);
      if (f == Tri::True) m |= true_bit(k);
      if (f != Tri::False) m |= possible_bit(k);
    }
    return m;
  }

  const FactorizationSet& fs(Rel& r, const Element& a, AssociateKind beta) {
    auto k = std::make_pair(a, static_cast<int>(beta));
    auto it = r.fs.find(k);
    if (it != r.fs.end()) return it->second;
    auto set = enumerate_factorizations(r.t, a, beta, cap, [&](const Element& x) { return tags(r, x); });
    return r.fs.emplace(k, std::move(set)).first->second;
  }

  const Span& span(Rel& r, const Element& a0, IrreducibleKind alpha, bool strict) {
    const Element& a = key(a0);
    auto k = std::make_tuple(a, static_cast<int>(alpha), strict);
    auto it = r.spans.find(k);
    if (it != r.spans.end()) return it->second;
    auto ok = [&](const Element& x) {
      Tri f = flag(r, x, alpha);
      return strict ? f == Tri::True : f != Tri::False;
    };
    LengthInfo li = factorization_lengths(r.t, a, ok);
    Span s;
    if (li.exists != Tri::Unknown) {
      s.exists = li.exists;
      if (li.exists == Tri::True) {
        s.min = li.min_length.value_or(1);
        s.unbounded = li.unbounded == Unbounded::Yes;
        s.max = li.max_length;
      }
      if (R.is_zero(a) && ok(a)) {
        if (s.exists == Tri::True) {
          s.min = std::min(s.min, 1);
          if (s.max) s.max = std::max(*s.max, 1);
        } else {
          s.exists = Tri::True;
          s.min = 1;
          s.max = 1;
        }
      }
    }
    return r.spans.emplace(k, s).first->second;
  }

  // Every tau-related pair is regular (a is not) or multiplies to zero (a
  // is not zero).
  bool only_trivial(const Rel& r, const Element& a) const {
    return (r.t.regular_only() && !R.is_regular(a)) || (r.t.zero_product() && !R.is_zero(a));
  }

  const Divisors& divisors(Rel& r, const Element& a0) {
    const Element& a = key(a0);
    auto it = r.divs.find(a);
    if (it != r.divs.end()) return it->second;
    Divisors d;
    if (!R.has_finite_divisors(a)) {
      if (!only_trivial(r, a)) throw UnsupportedError("divisor set of " + format_element(a) + " is infinite");
      for (const auto& u : R.units()) d.all.push_back(R.mul(u, a));
      std::sort(d.all.begin(), d.all.end());
      d.all.erase(std::unique(d.all.begin(), d.all.end()), d.all.end());
      return r.divs.emplace(a, std::move(d)).first->second;
    }
    bool inv = r.t.unit_invariant();
    std::set<Element> seen;
    auto any = [](const Element&) { return true; };
    for (const auto& x : R.divisors(a)) {
      if (!R.in_r_sharp(x) || seen.count(x)) continue;
      std::vector<Element> orbit{x};
      if (inv) {
        for (const auto& u : R.units()) orbit.push_back(R.mul(u, x));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      }
      seen.insert(orbit.begin(), orbit.end());
      std::set<Element> members(orbit.begin(), orbit.end());
      LengthInfo li =
          factorization_lengths(r.t, a, any, [&](const Element& y) { return members.count(y) > 0; });
      if (li.exists == Tri::Unknown) {
        d.ok = false;
        continue;
      }
      if (li.exists == Tri::False) continue;
      d.all.insert(d.all.end(), orbit.begin(), orbit.end());
      if (li.unbounded == Unbounded::Yes || li.max_length.value_or(0) >= 2)
        d.nontrivial.insert(d.nontrivial.end(), orbit.begin(), orbit.end());
    }
    if (R.is_zero(a)) d.all.push_back(a);
    std::sort(d.all.begin(), d.all.end());
    std::sort(d.nontrivial.begin(), d.nontrivial.end());
    return r.divs.emplace(a, std::move(d)).first->second;
  }

  const KeyPart& class_key(const Element& x, AssociateKind beta) {
    auto k = std::make_pair(x, static_cast<int>(beta));
    auto it = classes.find(k);
    if (it != classes.end()) return it->second;
    return classes.emplace(k, class_of(R, x, x, beta)).first->second;
  }

  CanonicalKey block_key(const std::vector<Element>& xs, AssociateKind beta) {
    CanonicalKey k;
    for (const auto& x : xs) k.push_back(class_key(x, beta));
    std::sort(k.begin(), k.end());
    return k;
  }

  std::size_t class_count(const std::vector<Element>& xs, AssociateKind beta) {
    std::set<KeyPart> ks;
    for (const auto& x : xs) ks.insert(class_key(x, beta));
    return ks.size();
  }

  bool self_very(const Element& x) {
    auto it = self_very_.find(x);
    if (it != self_very_.end()) return it->second;
    return self_very_[x] = R.associated(x, x, AssociateKind::VeryStrongAssociate);
  }

  // The unit variants of f that differ up to very strong associates: only
  // factors that are not very strongly associate to themselves matter.
  std::vector<Factorization> very_variants(const Factorization& f) {
    std::set<std::vector<Element>> out{{}};
    for (const auto& x : f.factors) {
      std::vector<Element> choices{x};
      if (!self_very(x)) {
        for (const auto& u : R.units()) choices.push_back(R.mul(u, x));
        std::sort(choices.begin(), choices.end());
        choices.erase(std::unique(choices.begin(), choices.end()), choices.end());
      }
      std::set<std::vector<Element>> next;
      for (const auto& partial : out)
        for (const auto& c : choices) {
          auto v = partial;
          v.push_back(c);
          std::sort(v.begin(), v.end());
          next.insert(std::move(v));
        }
      out = std::move(next);
    }
    std::vector<Factorization> fs;
    for (const auto& v : out) fs.push_back(make_factorization(R, f.target, v));
    return fs;
  }

  // Longest chain (a) < (b1) < (b2) < ... with each term a tau-divisor of
  // the previous one.
  std::optional<int> height(Rel& r, const Element& a0) {
    const Element a = key(a0);
    auto it = r.height.find(a);
    if (it != r.height.end()) return it->second;
    const auto& d = divisors(r, a);
    std::optional<int> h;
    if (d.ok) {
      h = 0;
      for (const auto& b : d.all) {
        if (R.divides(a, b)) continue;
        auto hb = height(r, b);
        if (!hb) {
          h.reset();
          break;
        }
        h = std::max(*h, *hb + 1);
      }
    }
    r.height[a] = h;
    return h;
  }

  // raw: every unit variant up to very strong associates, not just the
  // strong associate class representatives.
  const UData& udata(Rel& r, const Element& a, bool raw) {
    auto k = std::make_pair(a, raw);
    auto it = r.udata.find(k);
    if (it != r.udata.end()) return it->second;
    const auto& set = fs(r, a, AssociateKind::StrongAssociate);
    UData u;
    u.unbounded = set.unbounded;
    u.pump = set.pump;
    u.exact = set.unbounded == Unbounded::No && set.max_length && *set.max_length <= cap;
    auto add = [&](const Factorization& f) {
      for (auto& p : u_partitions(R, f)) u.all.push_back(std::move(p));
    };
    if (!r.t.unit_invariant()) {
      for_each_factorization(r.t, a, cap, [&](const Factorization& f) {
        add(f);
        return true;
      });
    } else {
      for (const auto& item : set.items) {
        if (!raw) add(item.rep);
        else
          for (const auto& f : very_variants(item.rep)) add(f);
      }
    }
    return r.udata.emplace(k, std::move(u)).first->second;
  }

  const UData& udata_for(Rel& r, const Element& a, AssociateKind beta) {
    return udata(r, a, beta == AssociateKind::VeryStrongAssociate);
  }

  bool essential_alpha(Rel& r, const UFactorization& u, IrreducibleKind alpha, bool strict) {
    return std::all_of(u.essential.begin(), u.essential.end(), [&](const Element& x) {
      Tri f = flag(r, x, alpha);
      return strict ? f == Tri::True : f != Tri::False;
    });
  }

  std::optional<int> uheight(Rel& r, const Element& a0) {
    const Element a = key(a0);
    auto it = r.uheight.find(a);
    if (it != r.uheight.end()) return it->second;
    const auto& u = udata(r, a, false);
    std::optional<int> h;
    if (u.exact) {
      h = 0;
      std::set<Element> ess;
      for (const auto& f : u.all) ess.insert(f.essential.begin(), f.essential.end());
      for (const auto& b : ess) {
        if (R.divides(a, b)) continue;
        auto hb = uheight(r, b);
        if (!hb) {
          h.reset();
          break;
        }
        h = std::max(*h, *hb + 1);
      }
    }
    r.uheight[a] = h;
    return h;
  }

  Verdict base() const {
    Verdict v;
    v.cap = cap;
    v.scoped = scoped;
    return v;
  }

  Verdict holds(std::optional<std::int64_t> bound = std::nullopt) const {
    Verdict v = base();
    v.outcome = Outcome::Holds;
    v.bound = bound;
    return v;
  }

  Verdict fails(nlohmann::json w, std::string note = {}) const {
    Verdict v = base();
    v.outcome = Outcome::Fails;
    v.witness = std::move(w);
    v.note = std::move(note);
    return v;
  }

  Verdict unknown(std::string note) const {
    Verdict v = base();
    v.note = std::move(note);
    return v;
  }

  // Two alpha-factorizations of different lengths, when both are enumerated.
  nlohmann::json length_witness(Rel& r, const Element& a, IrreducibleKind alpha, const Span& s) {
    const auto& set = fs(r, a, AssociateKind::StrongAssociate);
    const FactorizationItem* first = nullptr;
    for (const auto& item : set.items) {
      if (!(item.tags & true_bit(alpha))) continue;
      if (!first) first = &item;
      else if (item.rep.length() != first->rep.length())
        return {{"element", element_to_json(a)},
                {"factorizations", {to_json(first->rep), to_json(item.rep)}}};
    }
    nlohmann::json j{{"element", element_to_json(a)}, {"min_length", s.min}};
    if (s.unbounded) j["max_length"] = "unbounded";
    else if (s.max) j["max_length"] = *s.max;
    return j;
  }

  Verdict eval(const PropertyId& p, const Element& a) {
    Rel& r = rel(p.scope);
    const IrreducibleKind alpha = p.alpha;
    const AssociateKind beta = p.beta;
    if (p.scope == Scope::RegCapU) return eval_u(r, p, a);
    switch (p.kind) {
      case PropertyKind::Atomic: {
        const Span& s = span(r, a, alpha, true);
        if (s.exists == Tri::True) return holds(s.min);
        if (span(r, a, alpha, false).exists == Tri::False)
          return fails({{"element", element_to_json(a)}}, "no factorization into " + to_string(alpha) + " factors");
        return unknown("irreducibility of some factor undecided");
      }
      case PropertyKind::ACCP: {
        auto h = height(r, a);
        return h ? holds(*h) : unknown("divisor search budget exhausted");
      }
      case PropertyKind::BFR: {
        const auto& set = fs(r, a, AssociateKind::StrongAssociate);
        if (set.unbounded == Unbounded::No) return holds(set.max_length.value_or(1));
        if (set.unbounded == Unbounded::Yes)
          return fails({{"element", element_to_json(a)}, {"pump", to_json(*set.pump)}});
        return unknown("boundedness search budget exhausted");
      }
      case PropertyKind::FFR: {
        const auto& set = fs(r, a, beta);
        if (set.unbounded == Unbounded::Yes)
          return fails({{"element", element_to_json(a)}, {"pump", to_json(*set.pump)}});
        if (set.unbounded == Unbounded::Unknown) return unknown("boundedness search budget exhausted");
        if (set.complete) return holds(static_cast<std::int64_t>(set.nontrivial_count()));
        Verdict v = holds();
        v.note = "lengths bounded by " + std::to_string(*set.max_length) + ", beyond the cap";
        return v;
      }
      case PropertyKind::WFFR: {
        const auto& d = divisors(r, a);
        if (!d.ok) return unknown("divisor search budget exhausted");
        return holds(static_cast<std::int64_t>(class_count(d.nontrivial, beta)));
      }
      case PropertyKind::IdfRing: {
        const auto& d = divisors(r, a);
        if (!d.ok) return unknown("divisor search budget exhausted");
        std::vector<Element> xs;
        for (const auto& x : d.all)
          if (flag(r, x, alpha) == Tri::True) xs.push_back(x);
        return holds(static_cast<std::int64_t>(class_count(xs, beta)));
      }
      case PropertyKind::HFR: {
        const Span& s = span(r, a, alpha, true);
        if (s.exists == Tri::True && !s.single_length()) return fails(length_witness(r, a, alpha, s));
        const Span& q = span(r, a, alpha, false);
        if (q.exists == Tri::False) return holds();
        if (q.single_length()) return holds(q.min);
        return unknown("irreducibility of some factor undecided");
      }
      case PropertyKind::UFR: {
        Verdict h = eval(PropertyId{PropertyKind::HFR, alpha, AssociateKind::Associate, p.scope}, a);
        if (!h.holds()) return h;
        const Span& q = span(r, a, alpha, false);
        if (q.exists == Tri::False) return holds(0);
        if (q.min > cap) return unknown("atomic length " + std::to_string(q.min) + " exceeds the cap");
        const auto& set = fs(r, a, beta);
        std::vector<const FactorizationItem*> sure, maybe;
        for (const auto& item : set.items) {
          if (item.tags & true_bit(alpha)) sure.push_back(&item);
          if (item.tags & possible_bit(alpha)) maybe.push_back(&item);
        }
        if (sure.size() >= 2)
          return fails({{"element", element_to_json(a)},
                        {"factorizations", {to_json(sure[0]->rep), to_json(sure[1]->rep)}}});
        if (maybe.size() <= 1) return holds(static_cast<std::int64_t>(maybe.size()));
        return unknown("irreducibility of some factor undecided");
      }
    }
    return unknown("unreachable");
  }

  Verdict eval_u(Rel& r, const PropertyId& p, const Element& a) {
    const IrreducibleKind alpha = p.alpha;
    const AssociateKind beta = p.beta;
    const UData& u = udata_for(r, a, beta);
    auto ukey = [&](const UFactorization& f) {
      return std::make_pair(block_key(f.inessential, beta), block_key(f.essential, beta));
    };
    auto essential_classes = [&](bool alpha_only) {
      std::vector<Element> xs;
      for (const auto& f : u.all)
        for (const auto& x : f.essential)
          if (!alpha_only || flag(r, x, alpha) == Tri::True) xs.push_back(x);
      return static_cast<std::int64_t>(class_count(xs, beta));
    };
    const std::string beyond = "factorizations longer than the cap exist";
    switch (p.kind) {
      case PropertyKind::Atomic: {
        for (const auto& f : u.all)
          if (essential_alpha(r, f, alpha, true)) return holds(static_cast<std::int64_t>(f.essential.size()));
        if (!u.exact) return unknown(beyond);
        for (const auto& f : u.all)
          if (essential_alpha(r, f, alpha, false)) return unknown("irreducibility of some factor undecided");
        return fails({{"element", element_to_json(a)}}, "no U-factorization with " + to_string(alpha) +
                                                               " essential divisors");
      }
      case PropertyKind::ACCP: {
        auto h = uheight(r, a);
        return h ? holds(*h) : unknown(beyond);
      }
      case PropertyKind::BFR: {
        if (u.exact) {
          std::size_t m = 0;
          for (const auto& f : u.all) m = std::max(m, f.essential.size());
          return holds(static_cast<std::int64_t>(m));
        }
        const auto& set = fs(r, a, AssociateKind::StrongAssociate);
        if (set.unbounded == Unbounded::No) return holds(*set.max_length);
        return unknown(beyond);
      }
      case PropertyKind::FFR: {
        if (u.exact) {
          std::set<std::pair<CanonicalKey, CanonicalKey>> ks;
          for (const auto& f : u.all) ks.insert(ukey(f));
          return holds(static_cast<std::int64_t>(ks.size()));
        }
        if (u.unbounded == Unbounded::Yes && u.pump) {
          bool every = true;
          for (int k = 1; k <= 2 && every; ++k) every = !u_partitions(R, u.pump->pumped(R, k)).empty();
          if (every)
            return fails({{"element", element_to_json(a)}, {"pump", to_json(*u.pump)}},
                         "every pumped factorization has a U-factorization");
        }
        if (u.unbounded == Unbounded::No) return holds();
        return unknown(beyond);
      }
      case PropertyKind::WFFR:
        if (!R.has_finite_divisors(a) && !only_trivial(r, a)) return unknown("divisor set is infinite");
        if (!u.exact) return holds();
        return holds(essential_classes(false));
      case PropertyKind::IdfRing:
        if (!R.has_finite_divisors(a) && !only_trivial(r, a)) return unknown("divisor set is infinite");
        if (!u.exact) return holds();
        return holds(essential_classes(true));
      case PropertyKind::HFR:
      case PropertyKind::UFR: {
        std::map<std::size_t, const UFactorization*> sizes;
        std::map<CanonicalKey, const UFactorization*> blocks;
        bool undecided = false;
        for (const auto& f : u.all) {
          if (essential_alpha(r, f, alpha, true)) {
            sizes.emplace(f.essential.size(), &f);
            blocks.emplace(block_key(f.essential, beta), &f);
          } else if (essential_alpha(r, f, alpha, false)) {
            undecided = true;
          }
        }
        if (sizes.size() >= 2)
          return fails({{"element", element_to_json(a)},
                        {"u_factorizations", {to_json(*sizes.begin()->second), to_json(*sizes.rbegin()->second)}}});
        if (p.kind == PropertyKind::UFR && blocks.size() >= 2)
          return fails({{"element", element_to_json(a)},
                        {"u_factorizations", {to_json(*blocks.begin()->second), to_json(*std::next(blocks.begin())->second)}}});
        if (!u.exact) return unknown(beyond);
        if (undecided) return unknown("irreducibility of some factor undecided");
        if (p.kind == PropertyKind::UFR) return holds(static_cast<std::int64_t>(blocks.size()));
        return sizes.empty() ? holds() : holds(static_cast<std::int64_t>(sizes.begin()->first));
      }
    }
    return unknown("unreachable");
  }

  Verdict safe_eval(const PropertyId& p, const Element& a) {
    try {
      return eval(p, a);
    } catch (const UnsupportedError& e) {
      return unknown(std::string("unsupported: ") + e.what());
    }
  }

  Verdict check_element(const PropertyId& p0, const Element& a) {
    PropertyId p = p0.normalized();
    const Element& k = key(a);
    auto mk = std::make_pair(p, k);
    auto it = memo.find(mk);
    if (it == memo.end()) it = memo.emplace(mk, safe_eval(p, k)).first;
    // Witnesses name concrete elements, so failures are recomputed.
    if (k == a || !it->second.fails()) return it->second;
    return safe_eval(p, a);
  }

  Verdict check(const PropertyId& p0) {
    PropertyId p = p0.normalized();
    auto it = ring_memo.find(p);
    if (it != ring_memo.end()) return it->second;
    Verdict v = aggregate(p);
    ring_memo.emplace(p, v);
    return v;
  }

  Verdict aggregate(const PropertyId& p) {
    std::optional<Verdict> atomic;
    if (p.kind == PropertyKind::HFR || p.kind == PropertyKind::UFR) {
      atomic = check(PropertyId{PropertyKind::Atomic, p.alpha, AssociateKind::Associate, p.scope});
      if (atomic->fails()) {
        Verdict v = *atomic;
        v.note = "not " + to_string(p.alpha) + "-atomic" + (v.note.empty() ? "" : ": " + v.note);
        return v;
      }
    }
    std::size_t undecided = 0;
    std::string first_note;
    std::optional<std::int64_t> bound = 0;
    for (const auto& a : domain(p.scope)) {
      Verdict e = check_element(p, a);
      if (e.fails()) {
        if (!e.witness.contains("element")) e.witness["element"] = element_to_json(a);
        return e;
      }
      if (!e.decided()) {
        if (!undecided++) first_note = format_element(a) + ": " + e.note;
        continue;
      }
      if (bound && e.bound) bound = std::max(*bound, *e.bound);
      else bound.reset();
    }
    if (atomic && !atomic->decided()) ++undecided;
    if (undecided) return unknown(std::to_string(undecided) + " undecided (" + first_note + ")");
    Verdict v = holds();
    if (p.kind != PropertyKind::Atomic && p.kind != PropertyKind::HFR) v.bound = bound;
    if (p.kind == PropertyKind::HFR) v.bound.reset();
    if (domain(p.scope).empty()) {
      v.bound.reset();
      v.note = "vacuous: empty scope";
    }
    return v;
  }

  Elasticity elasticity() {
    Elasticity e;
    e.cap = cap;
    e.scoped = scoped;
    const auto& dom = domain(Scope::RegularElements);
    if (dom.empty()) {
      e.kind = Elasticity::Kind::UndefinedEmptyScope;
      e.note = "no regular non-units in scope";
      return e;
    }
    bool infinite = false;
    std::size_t undecided = 0;
    for (const auto& a : dom) {
      try {
        const Span& s = span(plain, a, IrreducibleKind::Irreducible, true);
        const Span& q = span(plain, a, IrreducibleKind::Irreducible, false);
        if (q.exists == Tri::False) continue;
        if (s.exists != q.exists || s.min != q.min || s.max != q.max || s.unbounded != q.unbounded) {
          ++undecided;
          continue;
        }
        if (s.unbounded) {
          infinite = true;
          e.per_element.emplace_back(a, std::nullopt);
          continue;
        }
        Rational rho = Rational::of(*s.max, s.min);
        e.per_element.emplace_back(a, rho);
        if (e.per_element.size() == 1 || e.value < rho) e.value = rho;
      } catch (const UnsupportedError&) {
        ++undecided;
      }
    }
    if (infinite) e.kind = Elasticity::Kind::Infinite;
    else if (undecided) e.kind = Elasticity::Kind::UnknownAtCap;
    else if (e.per_element.empty()) e.kind = Elasticity::Kind::UndefinedEmptyScope;
    else e.kind = Elasticity::Kind::Finite;
    if (undecided) e.note = std::to_string(undecided) + " elements undecided";
    if (e.kind == Elasticity::Kind::UndefinedEmptyScope) e.note = "no element of the scope has an atomic factorization";
    return e;
  }
};

Analyzer::Analyzer(const TauRelation& t, std::optional<std::vector<Element>> scope, int cap)
    : impl_(std::make_shared<Impl>(t, std::move(scope), cap)) {}

const Ring& Analyzer::ring() const { return impl_->R; }
const TauRelation& Analyzer::relation(Scope s) const { return impl_->rel(s).t; }
int Analyzer::cap() const { return impl_->cap; }
bool Analyzer::scoped() const { return impl_->scoped; }
const std::vector<Element>& Analyzer::domain(Scope s) const { return impl_->domain(s); }
Verdict Analyzer::check(const PropertyId& p) { return impl_->check(p); }
Verdict Analyzer::check_element(const PropertyId& p, const Element& a) { return impl_->check_element(p, a); }
Elasticity Analyzer::elasticity() { return impl_->elasticity(); }

const IrreducibilityProfile& Analyzer::profile(Scope s, const Element& a) { return impl_->profile(impl_->rel(s), a); }

const FactorizationSet& Analyzer::factorizations(Scope s, const Element& a, AssociateKind beta) {
  return impl_->fs(impl_->rel(s), a, beta);
}

Verdict check_property(const TauRelation& t, const PropertyId& p, const std::optional<std::vector<Element>>& scope,
                       int cap) {
  return Analyzer(t, scope, cap).check(p);
}

Elasticity elasticity(const TauRelation& t, const std::optional<std::vector<Element>>& scope, int cap) {
  return Analyzer(t, scope, cap).elasticity();
}

}  // namespace taufact
