#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "taufact/factorization.hpp"
#include "taufact/irreducibility.hpp"
#include "taufact/outcome.hpp"
#include "taufact/tau.hpp"

namespace taufact {

enum class PropertyKind { Atomic, ACCP, BFR, FFR, WFFR, IdfRing, HFR, UFR };

/// Plain: tau over all non-units. RegularElements: tau over Reg(R)#.
/// RegCapAll: RegCap(tau) over all non-units. RegCapU: RegCap(tau), counted
/// on the essential divisors of U-factorizations.
enum class Scope { Plain, RegularElements, RegCapAll, RegCapU };

inline constexpr Scope kAllScopes[] = {Scope::Plain, Scope::RegularElements, Scope::RegCapAll, Scope::RegCapU};

std::string to_string(PropertyKind k);
std::string to_string(Scope s);
/// plain | regular | regcap | regcap-u. Throws SpecError.
Scope parse_scope(std::string_view text);

struct PropertyId {
  PropertyKind kind = PropertyKind::Atomic;
  IrreducibleKind alpha = IrreducibleKind::Irreducible;
  AssociateKind beta = AssociateKind::Associate;
  Scope scope = Scope::Plain;

  bool takes_alpha() const;
  bool takes_beta() const;
  /// Unused parameters reset; under RegularElements every alpha is the
  /// tau-r-atom notion, so alpha is reset there too.
  PropertyId normalized() const;

  friend auto operator<=>(const PropertyId& a, const PropertyId& b) = default;
};

std::string to_string(const PropertyId& p);

/// Every parameter choice for one scope, in a fixed order.
std::vector<PropertyId> all_properties(Scope s);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t n, std::int64_t d);
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
};

struct Elasticity {
  enum class Kind { Finite, Infinite, UndefinedEmptyScope, UnknownAtCap };

  Kind kind = Kind::UnknownAtCap;
  Rational value;
  /// nullopt for an element with unbounded atomic lengths.
  std::vector<std::pair<Element, std::optional<Rational>>> per_element;
  int cap = 0;
  bool scoped = false;
  std::string note;
};

std::string to_string(Elasticity::Kind k);
nlohmann::json to_json(const Elasticity& e);

/// Memoizing evaluator for one (ring, tau, scope, cap). Not thread-safe.
class Analyzer {
 public:
  /// Without `scope` the ring must be finite. Throws UnsupportedError
  /// otherwise and PreconditionError when an infinite-ring scope holds 0.
  Analyzer(const TauRelation& t, std::optional<std::vector<Element>> scope, int cap);

  const Ring& ring() const;
  const TauRelation& relation(Scope s) const;
  int cap() const;
  bool scoped() const;

  /// Elements quantified over, in element order with 0 last.
  const std::vector<Element>& domain(Scope s) const;

  Verdict check(const PropertyId& p);
  /// Per-element verdict; `a` must lie in domain(p.scope).
  Verdict check_element(const PropertyId& p, const Element& a);
  Elasticity elasticity();

  const IrreducibilityProfile& profile(Scope s, const Element& a);
  const FactorizationSet& factorizations(Scope s, const Element& a, AssociateKind beta);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

Verdict check_property(const TauRelation& t, const PropertyId& p,
                       const std::optional<std::vector<Element>>& scope = std::nullopt, int cap = 5);

Elasticity elasticity(const TauRelation& t, const std::optional<std::vector<Element>>& scope = std::nullopt,
                      int cap = 5);

}  // namespace taufact
