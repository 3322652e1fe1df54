#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taufact/outcome.hpp"
#include "taufact/ring.hpp"

namespace taufact {

/// Symmetric relation on R#, described structurally.
struct TauSpec {
  enum class Kind { Full, Empty, Subset, Comaximal, ZeroProduct, Regular, RegCap };

  Kind kind = Kind::Full;
  std::vector<Element> subset;          // Subset
  std::shared_ptr<const TauSpec> inner; // RegCap

  static TauSpec full() { return {}; }
  static TauSpec empty() { return of(Kind::Empty); }
  static TauSpec comaximal() { return of(Kind::Comaximal); }
  static TauSpec zero_product() { return of(Kind::ZeroProduct); }
  static TauSpec regular() { return of(Kind::Regular); }
  static TauSpec with_subset(std::vector<Element> s);
  static TauSpec reg_cap(TauSpec inner);

  /// Text form: full | empty | zero | comax | regular | subset[..] | regcap(..)
  std::string to_string() const;

  friend bool operator==(const TauSpec& a, const TauSpec& b);

 private:
  static TauSpec of(Kind k) {
    TauSpec s;
    s.kind = k;
    return s;
  }
};

/// Parses the text grammar; subset elements are read against `ring`.
TauSpec parse_tau_spec(const Ring& ring, std::string_view text);

class TauRelation {
 public:
  /// Throws SpecError if a Subset element is not in R#.
  static TauRelation build(const TauSpec& spec, const Ring& ring);

  const TauSpec& spec() const { return *spec_; }
  const Ring& ring() const { return ring_; }

  /// a, b are assumed to lie in R#.
  bool holds(const Element& a, const Element& b) const;

  /// holds(u a, b) == holds(a, b) for every unit u.
  bool unit_invariant() const { return unit_invariant_; }
  /// holds(a, b) <=> in_domain(a) && in_domain(b).
  bool uniform() const { return uniform_; }
  bool in_domain(const Element& a) const;
  /// holds(a, b) implies both regular.
  bool regular_only() const { return regular_only_; }
  bool zero_product() const { return spec_->kind == TauSpec::Kind::ZeroProduct; }

  std::string to_string() const { return spec_->to_string(); }

 private:
  TauRelation(std::shared_ptr<const TauSpec> spec, Ring ring) : spec_(std::move(spec)), ring_(std::move(ring)) {}
  bool holds_spec(const TauSpec& s, const Element& a, const Element& b) const;
  bool domain_spec(const TauSpec& s, const Element& a) const;

  std::shared_ptr<const TauSpec> spec_;
  Ring ring_;
  bool unit_invariant_ = true;
  bool uniform_ = false;
  bool regular_only_ = false;
};

enum class TauProperty { Multiplicative, Divisive, AssociatePreserving, Refinable, Combinable };

struct TauPropertyId {
  TauProperty kind = TauProperty::Multiplicative;
  AssociateKind assoc = AssociateKind::Associate;  // AssociatePreserving only
};

std::string to_string(const TauPropertyId& p);

/// Exhaustive over R# for finite rings, or over `scope` (marked scoped).
/// Refinable and Combinable quantify over factorizations of length <= cap.
/// Throws UnsupportedError for an infinite ring without scope.
Verdict check_tau_property(const TauRelation& t, TauPropertyId prop,
                           const std::optional<std::vector<Element>>& scope = std::nullopt, int cap = 5);

}  // namespace taufact
