#include "taufact/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "taufact/errors.hpp"
#include "taufact/irreducibility.hpp"
#include "taufact/text.hpp"
#include "taufact/ufactorization.hpp"

namespace taufact {

std::string to_string(TheoremOutcome o) {
  switch (o) {
    case TheoremOutcome::Verified: return "verified";
    case TheoremOutcome::Inapplicable: return "inapplicable";
    case TheoremOutcome::Violated: return "violated";
    case TheoremOutcome::Skipped: return "skipped";
    case TheoremOutcome::Informational: return "informational";
  }
  return "?";
}

nlohmann::json to_json(const TheoremResult& r) {
  nlohmann::json j = {{"ring", r.ring},       {"tau", r.tau},   {"theorem", r.theorem}, {"instance", r.instance},
                      {"outcome", to_string(r.outcome)}, {"cap", r.cap}, {"scoped", r.scoped}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

void TheoremSummary::add(TheoremOutcome o) {
  switch (o) {
    case TheoremOutcome::Verified: ++verified; break;
    case TheoremOutcome::Inapplicable: ++inapplicable; break;
    case TheoremOutcome::Violated: ++violated; break;
    case TheoremOutcome::Skipped: ++skipped; break;
    case TheoremOutcome::Informational: ++informational; break;
  }
}

TheoremSummary& TheoremSummary::operator+=(const TheoremSummary& o) {
  verified += o.verified;
  inapplicable += o.inapplicable;
  violated += o.violated;
  skipped += o.skipped;
  informational += o.informational;
  return *this;
}

nlohmann::json to_json(const TheoremSummary& s) {
  return {{"verified", s.verified},
          {"inapplicable", s.inapplicable},
          {"violated", s.violated},
          {"skipped", s.skipped},
          {"informational", s.informational}};
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["corpus"] = r.corpus;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : r.entries) j["entries"].push_back(to_json(e));
  j["summary"] = to_json(r.summary);
  return j;
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = {
      "irreducible-hierarchy", "presimplifiable-collapse", "property-diagram",     "regular-chain",
      "regular-ffr-equivalence", "regular-atom-conditions", "treg-regular-atoms", "treg-zero-divisors",
      "treg-atomic",            "trivial-factorizations",  "treg-transfer",      "tau-to-regular",
      "regular-to-tau-regular", "u-bijection",             "treg-u-transfer",    "elasticity-law"};
  return names;
}

namespace {

using K = PropertyKind;
using I = IrreducibleKind;
using B = AssociateKind;

constexpr I kAlpha4[] = {I::Irreducible, I::Strong, I::M, I::Unrefinable};

PropertyId pid(K k, Scope s, I a = I::Irreducible, B b = B::Associate) { return PropertyId{k, a, b, s}; }

nlohmann::json brief(const Verdict& v) {
  nlohmann::json j = {{"outcome", to_string(v.outcome)}};
  if (!v.witness.is_null()) j["witness"] = v.witness;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Verdict conj(const Verdict& a, const Verdict& b) {
  if (a.fails()) return a;
  if (b.fails()) return b;
  if (a.holds() && b.holds()) return a;
  return a.decided() ? b : a;
}

Tri implication(Tri p, Tri q) {
  if (p == Tri::False || q == Tri::True) return Tri::True;
  if (p == Tri::True && q == Tri::False) return Tri::False;
  return Tri::Unknown;
}

std::string name(I a) { return to_string(a); }

class Harness {
 public:
  Harness(const CorpusEntry& e, Analyzer& A, const std::vector<std::string>& only)
      : e_(e), A_(A), R_(A.ring()), only_(only) {}

  std::vector<TheoremResult> run() {
    section("irreducible-hierarchy", [&] { hierarchy(); });
    section("presimplifiable-collapse", [&] { presimplifiable(); });
    section("property-diagram", [&] { diagram(); });
    section("regular-chain", [&] { regular_chain(); });
    section("regular-ffr-equivalence", [&] { regular_ffr(); });
    section("regular-atom-conditions", [&] { atom_conditions(); });
    section("treg-regular-atoms", [&] { treg_regular_atoms(); });
    section("treg-zero-divisors", [&] { treg_zero_divisors(); });
    section("treg-atomic", [&] { treg_atomic(); });
    section("trivial-factorizations", [&] { trivial_factorizations(); });
    section("treg-transfer", [&] { treg_transfer(); });
    section("tau-to-regular", [&] { tau_to_regular(); });
    section("regular-to-tau-regular", [&] { regular_to_tau_regular(); });
    section("u-bijection", [&] { u_bijection(); });
    section("treg-u-transfer", [&] { treg_u_transfer(); });
    section("elasticity-law", [&] { elasticity_law(); });
    return std::move(out_);
  }

 private:
  template <class F>
  void section(const std::string& th, F f) {
    if (!only_.empty() && std::find(only_.begin(), only_.end(), th) == only_.end()) return;
    theorem_ = th;
    f();
  }

  void add(std::string instance, TheoremOutcome o, std::string note = {}, nlohmann::json witness = nullptr) {
    TheoremResult r;
    r.ring = e_.ring_text();
    r.tau = e_.tau_text();
    r.theorem = theorem_;
    r.instance = std::move(instance);
    r.outcome = o;
    r.witness = std::move(witness);
    r.cap = A_.cap();
    r.scoped = A_.scoped();
    r.note = std::move(note);
    out_.push_back(std::move(r));
  }

  Verdict check(const PropertyId& p) { return A_.check(p); }

  // Refinability of tau, over the entry's scope.
  const Verdict& refinable() {
    if (!refinable_)
      refinable_ = check_tau_property(A_.relation(Scope::Plain), TauPropertyId{TauProperty::Refinable}, e_.scope, e_.cap);
    return *refinable_;
  }

  // Returns false (after recording the instance) when the refinability gate
  // is closed.
  bool gate(const std::string& instance) {
    const Verdict& r = refinable();
    if (r.holds()) return true;
    if (r.fails()) add(instance, TheoremOutcome::Inapplicable, "tau is not refinable", brief(r));
    else add(instance, TheoremOutcome::Skipped, "refinability undecided: " + r.note);
    return false;
  }

  void finish(const std::string& instance, TheoremOutcome o, bool informational, std::string note,
              nlohmann::json witness) {
    if (informational) {
      std::string tag = o == TheoremOutcome::Violated ? "contradicted" : o == TheoremOutcome::Skipped ? "undecided" : "consistent";
      if (note.rfind(tag + ": ", 0) == 0) note.erase(0, tag.size() + 2);
      add(instance, TheoremOutcome::Informational, tag + (note.empty() ? "" : ": " + note), std::move(witness));
      return;
    }
    if (o != TheoremOutcome::Violated && o != TheoremOutcome::Informational) witness = nullptr;
    add(instance, o, std::move(note), std::move(witness));
  }

  void implies(const std::string& lhs, const Verdict& p, const std::string& rhs, const Verdict& q, bool nabla,
               bool informational = false) {
    std::string instance = lhs + (nabla ? " =>[refinable] " : " => ") + rhs;
    if (nabla && !gate(instance)) return;
    nlohmann::json w = {{"antecedent", brief(p)}, {"consequent", brief(q)}};
    if (q.holds()) return finish(instance, TheoremOutcome::Verified, informational, {}, nullptr);
    if (p.fails()) return finish(instance, TheoremOutcome::Verified, informational, "antecedent fails", nullptr);
    if (p.holds() && q.fails()) return finish(instance, TheoremOutcome::Violated, informational, {}, w);
    finish(instance, TheoremOutcome::Skipped, informational, "undecided: " + (p.decided() ? q.note : p.note), nullptr);
  }

  void equivalent(const std::string& instance, const std::vector<std::pair<std::string, Verdict>>& vs, bool nabla,
                  bool informational = false) {
    if (nabla && !gate(instance)) return;
    bool any_holds = false, any_fails = false;
    std::string undecided;
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [label, v] : vs) {
      any_holds = any_holds || v.holds();
      any_fails = any_fails || v.fails();
      if (!v.decided() && undecided.empty()) undecided = label + ": " + v.note;
      w[label] = brief(v);
    }
    if (any_holds && any_fails) return finish(instance, TheoremOutcome::Violated, informational, {}, w);
    if (!undecided.empty()) return finish(instance, TheoremOutcome::Skipped, informational, "undecided: " + undecided, nullptr);
    finish(instance, TheoremOutcome::Verified, informational, any_holds ? "all hold" : "all fail", nullptr);
  }

  // Per-element law over `dom`; f returns False after filling the witness.
  void element_law(const std::string& instance, const std::vector<Element>& dom,
                   const std::function<Tri(const Element&, nlohmann::json&)>& f, bool informational = false) {
    std::size_t undecided = 0;
    std::string first;
    for (const auto& a : dom) {
      nlohmann::json w;
      Tri t;
      try {
        t = f(a, w);
      } catch (const UnsupportedError& ex) {
        t = Tri::Unknown;
        w = std::string("unsupported: ") + ex.what();
      }
      if (t == Tri::False) {
        nlohmann::json full = {{"element", element_to_json(a)}};
        if (!w.is_null()) full["detail"] = w;
        return finish(instance, TheoremOutcome::Violated, informational, {}, full);
      }
      if (t == Tri::Unknown && !undecided++) first = format_element(a) + (w.is_string() ? ": " + w.get<std::string>() : "");
    }
    if (undecided)
      return finish(instance, TheoremOutcome::Skipped, informational,
                    std::to_string(undecided) + " of " + std::to_string(dom.size()) + " elements undecided (" + first + ")",
                    nullptr);
    finish(instance, TheoremOutcome::Verified, informational,
           dom.empty() ? "vacuous: no elements" : std::to_string(dom.size()) + " elements", nullptr);
  }

  // Ring-level verdict assembled from per-element verdicts over the regular
  // scope.
  Verdict over_regular(const std::function<Verdict(const Element&)>& f) {
    Verdict v;
    v.cap = A_.cap();
    v.scoped = A_.scoped();
    std::size_t undecided = 0;
    std::int64_t bound = 0;
    for (const auto& a : A_.domain(Scope::RegularElements)) {
      Verdict x;
      try {
        x = f(a);
      } catch (const UnsupportedError& ex) {
        x.note = std::string("unsupported: ") + ex.what();
      }
      if (x.fails()) {
        if (!x.witness.is_object()) x.witness = nlohmann::json::object();
        x.witness["element"] = element_to_json(a);
        return x;
      }
      if (!x.decided()) {
        if (!undecided++) v.note = format_element(a) + ": " + x.note;
        continue;
      }
      if (x.bound) bound = std::max(bound, *x.bound);
    }
    if (undecided) {
      v.note = std::to_string(undecided) + " undecided (" + v.note + ")";
      return v;
    }
    v.outcome = Outcome::Holds;
    v.bound = bound;
    return v;
  }

  // ---- irreducibility ----

  void hierarchy() {
    const auto& dom = A_.domain(Scope::Plain);
    auto arrow = [&](I p, I q) {
      element_law(name(p) + " => " + name(q), dom, [&](const Element& a, nlohmann::json& w) {
        const auto& prof = A_.profile(Scope::Plain, a);
        Tri t = implication(prof[p], prof[q]);
        if (t == Tri::False) w = to_json(prof);
        return t;
      });
    };
    arrow(I::VeryStrong, I::Unrefinable);
    arrow(I::Unrefinable, I::Strong);
    arrow(I::Strong, I::Irreducible);
    arrow(I::Unrefinable, I::M);
    arrow(I::M, I::Irreducible);
    if (R_.predicates().strongly_associate) arrow(I::M, I::Strong);
    else add("m => strong", TheoremOutcome::Inapplicable, "ring is not strongly associate");
  }

  void presimplifiable() {
    std::string instance = "irreducible => every flavor (nonzero elements)";
    if (!R_.predicates().presimplifiable) return add(instance, TheoremOutcome::Inapplicable, "ring is not presimplifiable");
    std::vector<Element> dom;
    for (const auto& a : A_.domain(Scope::Plain))
      if (!R_.is_zero(a)) dom.push_back(a);
    element_law(instance, dom, [&](const Element& a, nlohmann::json& w) {
      const auto& prof = A_.profile(Scope::Plain, a);
      Tri all = Tri::True;
      for (I k : kAllIrreducibleKinds) {
        Tri t = implication(prof[I::Irreducible], prof[k]);
        if (t == Tri::False) {
          w = to_json(prof);
          return Tri::False;
        }
        if (t == Tri::Unknown) all = Tri::Unknown;
      }
      return all;
    });
  }

  // ---- plain tau diagram ----

  void diagram() {
    const Scope s = Scope::Plain;
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds)
        implies(to_string(pid(K::UFR, s, a, b)), check(pid(K::UFR, s, a, b)), to_string(pid(K::HFR, s, a)),
                check(pid(K::HFR, s, a)), false);
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds)
        implies(to_string(pid(K::UFR, s, a, b)), check(pid(K::UFR, s, a, b)), to_string(pid(K::FFR, s, I{}, b)),
                check(pid(K::FFR, s, I{}, b)), true);
    for (I a : kAllIrreducibleKinds)
      implies(to_string(pid(K::HFR, s, a)), check(pid(K::HFR, s, a)), to_string(pid(K::BFR, s)), check(pid(K::BFR, s)),
              true);
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds)
        implies(to_string(pid(K::HFR, s, a)), check(pid(K::HFR, s, a)), to_string(pid(K::FFR, s, I{}, b)),
                check(pid(K::FFR, s, I{}, b)), true, true);
    for (B b : kAllAssociateKinds) {
      auto ffr = pid(K::FFR, s, I{}, b);
      implies(to_string(ffr), check(ffr), to_string(pid(K::BFR, s)), check(pid(K::BFR, s)), false);
      implies(to_string(ffr), check(ffr), to_string(pid(K::WFFR, s, I{}, b)), check(pid(K::WFFR, s, I{}, b)), false);
    }
    implies(to_string(pid(K::BFR, s)), check(pid(K::BFR, s)), to_string(pid(K::ACCP, s)), check(pid(K::ACCP, s)), true);
    // Unrefinable and very strong atomicity are not reached from ACCP.
    for (I a : kAllIrreducibleKinds)
      implies(to_string(pid(K::ACCP, s)), check(pid(K::ACCP, s)), to_string(pid(K::Atomic, s, a)),
              check(pid(K::Atomic, s, a)), true, a == I::Unrefinable || a == I::VeryStrong);
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds) {
        auto wffr = pid(K::WFFR, s, I{}, b);
        auto df = pid(K::IdfRing, s, a, b);
        auto atomic = pid(K::Atomic, s, a);
        Verdict both = conj(check(atomic), check(df));
        std::string both_name = to_string(atomic) + " & " + to_string(df);
        implies(to_string(wffr), check(wffr), to_string(df), check(df), false);
        implies(to_string(wffr), check(wffr), both_name, both, true, a == I::Unrefinable || a == I::VeryStrong);
        implies(both_name, both, to_string(df), check(df), false);
      }
  }

  // ---- regular elements ----

  PropertyId r(K k) { return pid(k, Scope::RegularElements); }

  void regular_chain() {
    auto arrow = [&](K p, K q, bool nabla) { implies(to_string(r(p)), check(r(p)), to_string(r(q)), check(r(q)), nabla); };
    arrow(K::UFR, K::HFR, false);
    arrow(K::HFR, K::BFR, true);
    arrow(K::UFR, K::FFR, true);
    arrow(K::FFR, K::BFR, false);
    arrow(K::BFR, K::ACCP, true);
    arrow(K::ACCP, K::Atomic, true);
  }

  std::vector<Element> divisor_reps(const Element& a) {
    std::vector<Element> out;
    std::set<KeyPart> seen;
    for (const auto& d : R_.divisors(a))
      if (R_.in_r_sharp(d) && seen.insert(class_of(R_, d, a, B::Associate)).second) out.push_back(d);
    return out;
  }

  // Number of distinct principal ideals among xs.
  std::int64_t ideal_count(const std::vector<Element>& xs) {
    std::vector<Element> reps;
    for (const auto& x : xs) {
      bool found = false;
      for (const auto& y : reps)
        if (R_.divides(x, y) && R_.divides(y, x)) {
          found = true;
          break;
        }
      if (!found) reps.push_back(x);
    }
    return static_cast<std::int64_t>(reps.size());
  }

  static Verdict holds_with(std::int64_t bound) {
    Verdict v;
    v.outcome = Outcome::Holds;
    v.bound = bound;
    return v;
  }

  void regular_ffr() {
    const TauRelation& t = A_.relation(Scope::Plain);
    auto atomic = check(r(K::Atomic));
    // Atomic factorizations with bounded length are finite in number.
    Verdict finite_atomic = over_regular([&](const Element& a) {
      Verdict v;
      for (const auto& d : R_.divisors(a))
        if (R_.in_r_sharp(d) && A_.profile(Scope::Plain, d)[I::Irreducible] == Tri::Unknown) {
          v.note = "irreducibility of " + format_element(d) + " undecided";
          return v;
        }
      auto li = factorization_lengths(t, a, [&](const Element& x) {
        return A_.profile(Scope::Plain, x)[I::Irreducible] == Tri::True;
      });
      if (li.unbounded == Unbounded::Yes) {
        v.outcome = Outcome::Fails;
        v.witness = {{"reason", "atomic factorizations of unbounded length"}};
      } else if (li.unbounded == Unbounded::No) {
        return holds_with(li.max_length.value_or(0));
      }
      return v;
    });
    // Factors occurring in the enumerated factorizations of a.
    std::map<Element, std::vector<Element>> occurring;
    Verdict occ_classes = over_regular([&](const Element& a) {
      const auto& fs = A_.factorizations(Scope::Plain, a, B::Associate);
      if (!fs.complete) {
        Verdict v;
        v.note = "factorizations not exhausted at cap";
        return v;
      }
      std::vector<Element> found;
      std::set<KeyPart> classes;
      for (const auto& item : fs.items)
        for (const auto& x : item.rep.factors) {
          found.push_back(x);
          classes.insert(class_of(R_, x, a, B::Associate));
        }
      occurring[a] = found;
      return holds_with(static_cast<std::int64_t>(classes.size()));
    });
    Verdict occ_ideals = occ_classes;
    if (occ_classes.holds())
      occ_ideals = over_regular([&](const Element& a) { return holds_with(ideal_count(occurring[a])); });
    // Divisors d with d |tau a, by a search marking the unit orbit of d.
    std::map<Element, std::vector<Element>> dividing;
    std::map<Element, std::optional<std::vector<Element>>> by_orbit;
    auto least = [&](const Element& x) {
      Element m = x;
      for (const auto& u : R_.units()) m = std::min(m, R_.mul(u, x));
      return m;
    };
    Verdict div_classes = over_regular([&](const Element& a) {
      Element k = least(a);
      auto it = by_orbit.find(k);
      if (it == by_orbit.end()) {
        std::optional<std::vector<Element>> found{std::vector<Element>{}};
        std::set<Element> done;
        for (const auto& d : R_.divisors(k)) {
          if (!R_.in_r_sharp(d) || done.count(d)) continue;
          std::set<Element> orbit;
          for (const auto& u : R_.units()) orbit.insert(R_.mul(u, d));
          done.insert(orbit.begin(), orbit.end());
          auto li = factorization_lengths(t, k, [](const Element&) { return true; },
                                          [&](const Element& x) { return orbit.count(x) > 0; });
          if (li.exists == Tri::Unknown) {
            found.reset();
            break;
          }
          if (li.exists == Tri::True) found->insert(found->end(), orbit.begin(), orbit.end());
        }
        it = by_orbit.emplace(k, std::move(found)).first;
      }
      if (!it->second) return Verdict{};
      std::set<KeyPart> classes;
      for (const auto& d : *it->second) classes.insert(class_of(R_, d, a, B::Associate));
      dividing[a] = *it->second;
      return holds_with(static_cast<std::int64_t>(classes.size()));
    });
    Verdict div_ideals = div_classes;
    if (div_classes.holds())
      div_ideals = over_regular([&](const Element& a) { return holds_with(ideal_count(dividing[a])); });
    equivalent("eight conditions agree",
               {{"(1) " + to_string(r(K::FFR)), check(r(K::FFR))},
                {"(2) " + to_string(r(K::WFFR)), check(r(K::WFFR))},
                {"(3) atomic & idf", conj(atomic, check(r(K::IdfRing)))},
                {"(4) atomic & finitely many atomic factorizations", conj(atomic, finite_atomic)},
                {"(5) factor classes finite", occ_classes},
                {"(6) factor ideals finite", occ_ideals},
                {"(7) tau-divisor classes finite", div_classes},
                {"(8) tau-divisor ideals finite", div_ideals}},
               true);
  }

  void atom_conditions() {
    const TauRelation& t = A_.relation(Scope::Plain);
    element_law("five conditions agree", A_.domain(Scope::RegularElements), [&](const Element& a, nlohmann::json& w) {
      auto rep = tau_r_atom(t, a, A_.cap());
      bool has_true = false, has_false = false, unknown = false;
      for (Tri c : rep.conditions) {
        has_true = has_true || c == Tri::True;
        has_false = has_false || c == Tri::False;
        unknown = unknown || c == Tri::Unknown;
      }
      if (has_true && has_false) {
        w = to_json(rep);
        return Tri::False;
      }
      return unknown ? Tri::Unknown : Tri::True;
    });
  }

  // ---- tau_reg ----

  void treg_regular_atoms() {
    const TauRelation& t = A_.relation(Scope::Plain);
    element_law("regular atom <=> every tau_reg flavor", A_.domain(Scope::RegularElements),
                [&](const Element& a, nlohmann::json& w) {
                  auto rep = tau_r_atom(t, a, A_.cap());
                  const auto& prof = A_.profile(Scope::RegCapAll, a);
                  Tri atom = rep.is_atom();
                  if (atom == Tri::Unknown) return Tri::Unknown;
                  Tri res = Tri::True;
                  for (I k : kAllIrreducibleKinds) {
                    if (prof[k] == Tri::Unknown) res = Tri::Unknown;
                    else if (prof[k] != atom) {
                      w = {{"regular_atom", to_json(rep)}, {"tau_reg", to_json(prof)}};
                      return Tri::False;
                    }
                  }
                  return res;
                });
  }

  void treg_zero_divisors() {
    std::vector<Element> zd;
    for (const auto& a : A_.domain(Scope::RegCapAll))
      if (!R_.is_regular(a)) zd.push_back(a);
    for (I k : kAlpha4)
      element_law("zero-divisors are " + name(k), zd, [&](const Element& a, nlohmann::json& w) {
        const auto& prof = A_.profile(Scope::RegCapAll, a);
        if (prof[k] == Tri::False) w = to_json(prof);
        return prof[k];
      });
  }

  void treg_atomic() {
    std::vector<std::pair<std::string, Verdict>> vs = {{to_string(r(K::Atomic)), check(r(K::Atomic))}};
    for (I a : kAlpha4) {
      auto p = pid(K::Atomic, Scope::RegCapAll, a);
      vs.emplace_back(to_string(p), check(p));
    }
    equivalent("five atomicity notions agree", vs, false);
    auto very = pid(K::Atomic, Scope::RegCapAll, I::VeryStrong);
    equivalent(to_string(r(K::Atomic)) + " <=> " + to_string(very),
               {{to_string(r(K::Atomic)), check(r(K::Atomic))}, {to_string(very), check(very)}}, false, true);
  }

  void trivial_factorizations() {
    std::vector<Element> dom;
    for (const auto& a : A_.domain(Scope::Plain))
      if (!R_.is_zero(a)) dom.push_back(a);
    auto law = [&](B kind, bool informational) {
      element_law("unit multiples are " + to_string(kind) + "s", dom,
                  [&](const Element& a, nlohmann::json& w) {
                    const auto& us = R_.units();
                    for (const auto& l : us)
                      for (const auto& m : us) {
                        Element x = R_.mul(R_.inverse(l), a), y = R_.mul(R_.inverse(m), a);
                        if (!R_.associated(x, y, kind)) {
                          w = {{"lambda", element_to_json(l)}, {"mu", element_to_json(m)}};
                          return Tri::False;
                        }
                      }
                    return Tri::True;
                  },
                  informational);
    };
    law(B::Associate, false);
    law(B::StrongAssociate, false);
    law(B::VeryStrongAssociate, true);
  }

  void treg_transfer() {
    const Scope g = Scope::RegCapAll;
    auto pair = [&](const PropertyId& p, const PropertyId& q, bool informational) {
      equivalent(to_string(p) + " <=> " + to_string(q), {{to_string(p), check(p)}, {to_string(q), check(q)}}, false,
                 informational);
    };
    auto excluded = [](I a, B b) { return a == I::VeryStrong || b == B::VeryStrongAssociate; };
    pair(r(K::ACCP), pid(K::ACCP, g), false);
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds) pair(r(K::UFR), pid(K::UFR, g, a, b), excluded(a, b));
    for (I a : kAllIrreducibleKinds) pair(r(K::HFR), pid(K::HFR, g, a), excluded(a, B::Associate));
    pair(r(K::BFR), pid(K::BFR, g), false);
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds) pair(r(K::IdfRing), pid(K::IdfRing, g, a, b), excluded(a, b));
    Verdict r_both = conj(check(r(K::Atomic)), check(r(K::IdfRing)));
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds) {
        auto atomic = pid(K::Atomic, g, a);
        auto df = pid(K::IdfRing, g, a, b);
        equivalent(to_string(r(K::Atomic)) + " & " + to_string(r(K::IdfRing)) + " <=> " + to_string(atomic) + " & " +
                       to_string(df),
                   {{"regular", r_both}, {"tau_reg", conj(check(atomic), check(df))}}, false, excluded(a, b));
      }
    for (B b : kAllAssociateKinds) pair(r(K::WFFR), pid(K::WFFR, g, I{}, b), excluded(I{}, b));
    for (B b : kAllAssociateKinds) pair(r(K::FFR), pid(K::FFR, g, I{}, b), excluded(I{}, b));
  }

  void tau_to_regular() {
    const Scope s = Scope::Plain;
    auto arrow = [&](const PropertyId& p, const PropertyId& q) {
      implies(to_string(p), check(p), to_string(q), check(q), false);
    };
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds) arrow(pid(K::UFR, s, a, b), r(K::UFR));
    for (I a : kAllIrreducibleKinds) arrow(pid(K::HFR, s, a), r(K::HFR));
    for (B b : kAllAssociateKinds) arrow(pid(K::FFR, s, I{}, b), r(K::FFR));
    for (B b : kAllAssociateKinds) arrow(pid(K::WFFR, s, I{}, b), r(K::WFFR));
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds) arrow(pid(K::IdfRing, s, a, b), r(K::IdfRing));
    arrow(pid(K::BFR, s), r(K::BFR));
    arrow(pid(K::ACCP, s), r(K::ACCP));
    for (I a : kAllIrreducibleKinds) arrow(pid(K::Atomic, s, a), r(K::Atomic));
  }

  void regular_to_tau_regular() {
    const K kinds[] = {K::BFR, K::FFR, K::WFFR, K::ACCP};
    if (!A_.relation(Scope::Plain).regular_only()) {
      for (K k : kinds)
        add("regular " + to_string(k) + " => " + to_string(r(k)), TheoremOutcome::Inapplicable,
            "tau is not contained in Reg# x Reg#");
      return;
    }
    Analyzer reg(TauRelation::build(TauSpec::regular(), R_), e_.scope, A_.cap());
    for (K k : kinds)
      implies("regular " + to_string(r(k)), reg.check(r(k)), to_string(r(k)), check(r(k)), false);
  }

  // ---- U-factorizations ----

  void u_bijection() {
    const TauRelation& g = A_.relation(Scope::RegCapAll);
    const auto& dom = A_.domain(Scope::RegCapAll);
    auto over_factorizations = [&](const Element& a, const std::function<Tri(const Factorization&)>& f) {
      if (!R_.finite()) {
        for (const auto& item : A_.factorizations(Scope::RegCapAll, a, B::StrongAssociate).items)
          if (Tri t = f(item.rep); t != Tri::True) return t;
        return Tri::True;
      }
      Tri res = Tri::True;
      bool all = for_each_factorization(g, a, A_.cap(), [&](const Factorization& x) {
        res = f(x);
        return res == Tri::True;
      });
      return all ? Tri::True : res;
    };
    element_law("inessential blocks are empty", dom, [&](const Element& a, nlohmann::json& w) {
      return over_factorizations(a, [&](const Factorization& f) {
        for (const auto& u : u_partitions(R_, f))
          if (!u.inessential.empty() || !is_u_factorization(R_, u)) {
            w = to_json(u);
            return Tri::False;
          }
        return Tri::True;
      });
    });
    element_law("phi(phi_inverse(f)) = f", dom, [&](const Element& a, nlohmann::json& w) {
      return over_factorizations(a, [&](const Factorization& f) {
        try {
          if (phi(phi_inverse(R_, f)) == f) return Tri::True;
        } catch (const DomainError& ex) {
          w = {{"factorization", to_json(f)}, {"error", ex.what()}};
          return Tri::False;
        }
        w = to_json(f);
        return Tri::False;
      });
    });
    element_law("phi_inverse(phi(u)) = u", dom, [&](const Element& a, nlohmann::json& w) {
      return over_factorizations(a, [&](const Factorization& f) {
        for (const auto& u : u_partitions(R_, f)) {
          try {
            if (phi_inverse(R_, phi(u)) == u) continue;
          } catch (const DomainError& ex) {
            w = {{"u_factorization", to_json(u)}, {"error", ex.what()}};
            return Tri::False;
          }
          w = to_json(u);
          return Tri::False;
        }
        return Tri::True;
      });
    });
  }

  void treg_u_transfer() {
    const Scope g = Scope::RegCapAll, u = Scope::RegCapU;
    auto pair = [&](const PropertyId& p, const PropertyId& q) {
      equivalent(to_string(p) + " <=> " + to_string(q), {{to_string(p), check(p)}, {to_string(q), check(q)}}, false);
    };
    for (I a : kAllIrreducibleKinds) pair(pid(K::Atomic, u, a), pid(K::Atomic, g, a));
    pair(pid(K::ACCP, u), pid(K::ACCP, g));
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds) pair(pid(K::UFR, u, a, b), pid(K::UFR, g, a, b));
    for (I a : kAllIrreducibleKinds) pair(pid(K::HFR, u, a), pid(K::HFR, g, a));
    pair(pid(K::BFR, u), pid(K::BFR, g));
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds) pair(pid(K::IdfRing, u, a, b), pid(K::IdfRing, g, a, b));
    for (I a : kAllIrreducibleKinds)
      for (B b : kAllAssociateKinds) {
        auto ua = pid(K::Atomic, u, a), ud = pid(K::IdfRing, u, a, b);
        auto ga = pid(K::Atomic, g, a), gd = pid(K::IdfRing, g, a, b);
        equivalent(to_string(ua) + " & " + to_string(ud) + " <=> " + to_string(ga) + " & " + to_string(gd),
                   {{"u", conj(check(ua), check(ud))}, {"tau_reg", conj(check(ga), check(gd))}}, false);
      }
    for (B b : kAllAssociateKinds) pair(pid(K::WFFR, u, I{}, b), pid(K::WFFR, g, I{}, b));
    for (B b : kAllAssociateKinds) pair(pid(K::FFR, u, I{}, b), pid(K::FFR, g, I{}, b));
  }

  void elasticity_law() {
    std::string instance = to_string(r(K::HFR)) + " <=> " + to_string(r(K::Atomic)) + " & rho = 1";
    Elasticity el = A_.elasticity();
    if (A_.domain(Scope::RegularElements).empty())
      return add(instance, TheoremOutcome::Inapplicable, "elasticity undefined: no regular non-units in scope");
    Verdict rho;
    rho.cap = A_.cap();
    switch (el.kind) {
      case Elasticity::Kind::Finite:
        rho.outcome = el.value == Rational::of(1, 1) ? Outcome::Holds : Outcome::Fails;
        if (rho.fails()) rho.witness = {{"rho", el.value.to_string()}};
        break;
      case Elasticity::Kind::Infinite:
        rho.outcome = Outcome::Fails;
        rho.witness = {{"rho", "infinite"}};
        break;
      case Elasticity::Kind::UndefinedEmptyScope:
        rho.outcome = Outcome::Fails;
        rho.witness = {{"rho", "undefined"}};
        break;
      case Elasticity::Kind::UnknownAtCap: rho.note = el.note; break;
    }
    equivalent(instance, {{"hfr", check(r(K::HFR))}, {"atomic & rho = 1", conj(check(r(K::Atomic)), rho)}}, false);
  }

  const CorpusEntry& e_;
  Analyzer& A_;
  const Ring& R_;
  const std::vector<std::string>& only_;
  std::string theorem_;
  std::optional<Verdict> refinable_;
  std::vector<TheoremResult> out_;
};

}  // namespace

std::vector<TheoremResult> verify_entry(const CorpusEntry& e, Analyzer& A, const std::vector<std::string>& only) {
  for (const auto& n : only)
    if (std::find(theorem_names().begin(), theorem_names().end(), n) == theorem_names().end())
      throw SpecError("unknown theorem family '" + n + "'");
  return Harness(e, A, only).run();
}

std::vector<TheoremResult> verify_entry(const CorpusEntry& e, const std::vector<std::string>& only) {
  Ring R = Ring::build(e.ring);
  Analyzer A(TauRelation::build(e.tau, R), e.scope, e.cap);
  return verify_entry(e, A, only);
}

void for_each_entry(const Corpus& corpus, int jobs, const std::function<void(std::size_t)>& work) {
  std::size_t n = corpus.entries.size();
  std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : static_cast<std::size_t>(jobs), 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex m;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(m);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

TheoremReport verify_theorems(const Corpus& corpus, int jobs, const std::vector<std::string>& only) {
  std::vector<std::vector<TheoremResult>> parts(corpus.entries.size());
  for_each_entry(corpus, jobs, [&](std::size_t i) { parts[i] = verify_entry(corpus.entries[i], only); });
  TheoremReport rep;
  rep.corpus = corpus.metadata();
  for (auto& p : parts)
    for (auto& r : p) {
      rep.summary.add(r.outcome);
      rep.entries.push_back(std::move(r));
    }
  return rep;
}

}  // namespace taufact
