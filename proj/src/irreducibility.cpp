#include "taufact/irreducibility.hpp"

#include <algorithm>

#include "taufact/errors.hpp"
#include "taufact/text.hpp"

namespace taufact {

std::string to_string(IrreducibleKind k) {
  switch (k) {
    case IrreducibleKind::Irreducible: return "irreducible";
    case IrreducibleKind::Strong: return "strong";
    case IrreducibleKind::M: return "m";
    case IrreducibleKind::Unrefinable: return "unrefinable";
    case IrreducibleKind::VeryStrong: return "verystrong";
  }
  return "?";
}

namespace {

// "Every factorization of a has a factor in relation k with a": false on an
// enumerated counterexample, otherwise decided on the state graph.
Tri some_factor(const TauRelation& t, const FactorizationSet& fs, AssociateKind k) {
  const Ring& R = t.ring();
  const Element& a = fs.target;
  auto rel = [&](const Element& x) { return R.associated(a, x, k); };
  for (const auto& item : fs.items)
    if (std::none_of(item.rep.factors.begin(), item.rep.factors.end(), rel)) return Tri::False;
  Tri e = factorization_lengths(t, a, [&](const Element& x) { return !rel(x); }).exists;
  return e == Tri::Unknown ? e : tri(e == Tri::False);
}

Tri every_factor_associate(const TauRelation& t, const FactorizationSet& fs) {
  const Ring& R = t.ring();
  const Element& a = fs.target;
  auto rel = [&](const Element& x) { return R.associated(a, x, AssociateKind::Associate); };
  for (const auto& item : fs.items)
    if (!std::all_of(item.rep.factors.begin(), item.rep.factors.end(), rel)) return Tri::False;
  Tri e = factorization_lengths(t, a, [](const Element&) { return true; }, [&](const Element& x) { return !rel(x); })
              .exists;
  return e == Tri::Unknown ? e : tri(e == Tri::False);
}

Tri only_trivial(const FactorizationSet& fs) {
  if (fs.has_nontrivial() || fs.unbounded == Unbounded::Yes) return Tri::False;
  if (fs.unbounded == Unbounded::No) return tri(fs.max_length.value_or(0) <= 1);
  return Tri::Unknown;
}

}  // namespace

nlohmann::json to_json(const IrreducibilityProfile& p) {
  nlohmann::json flags;
  for (auto k : kAllIrreducibleKinds) flags[to_string(k)] = to_string(p[k]);
  return {{"element", element_to_json(p.element)}, {"flags", flags}, {"cap", p.cap}};
}

IrreducibilityProfile classify(const TauRelation& t, const FactorizationSet& fs) {
  const Ring& R = t.ring();
  const Element& a = fs.target;
  IrreducibilityProfile p;
  p.element = a;
  p.cap = fs.cap;
  auto& fl = p.flags;
  fl[0] = some_factor(t, fs, AssociateKind::Associate);
  fl[1] = some_factor(t, fs, AssociateKind::StrongAssociate);
  fl[2] = every_factor_associate(t, fs);
  fl[3] = only_trivial(fs);
  fl[4] = R.associated(a, a, AssociateKind::VeryStrongAssociate) ? fl[3] : Tri::False;
  return p;
}

IrreducibilityProfile classify(const TauRelation& t, const Element& a, int cap) {
  return classify(t, enumerate_factorizations(t, a, AssociateKind::StrongAssociate, cap));
}

bool RegularAtomReport::decided() const {
  return std::none_of(conditions.begin(), conditions.end(), [](Tri x) { return x == Tri::Unknown; });
}

nlohmann::json to_json(const RegularAtomReport& r) {
  auto c = nlohmann::json::array();
  for (auto x : r.conditions) c.push_back(to_string(x));
  return {{"element", element_to_json(r.element)}, {"is_atom", to_string(r.is_atom())}, {"conditions", c},
          {"cap", r.cap}};
}

RegularAtomReport tau_r_atom(const TauRelation& t, const Element& a, int cap) {
  const Ring& R = t.ring();
  R.check_element(a);
  if (R.is_unit(a) || !R.is_regular(a)) throw PreconditionError("tau_r_atom: " + format_element(a) + " is not a regular non-unit");
  auto fs = enumerate_factorizations(t, a, AssociateKind::StrongAssociate, cap);
  RegularAtomReport r;
  r.element = a;
  r.cap = cap;
  r.conditions[0] = some_factor(t, fs, AssociateKind::Associate);
  r.conditions[1] = some_factor(t, fs, AssociateKind::StrongAssociate);
  r.conditions[2] = every_factor_associate(t, fs);
  r.conditions[3] = only_trivial(fs);
  r.conditions[4] = R.associated(a, a, AssociateKind::VeryStrongAssociate)
                        ? some_factor(t, fs, AssociateKind::VeryStrongAssociate)
                        : Tri::False;
  return r;
}

}  // namespace taufact
