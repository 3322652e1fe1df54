#pragma once

#include <array>
#include <string>

#include <json.hpp>

#include "taufact/factorization.hpp"
#include "taufact/outcome.hpp"

namespace taufact {

enum class IrreducibleKind { Irreducible = 0, Strong = 1, M = 2, Unrefinable = 3, VeryStrong = 4 };

inline constexpr IrreducibleKind kAllIrreducibleKinds[] = {IrreducibleKind::Irreducible, IrreducibleKind::Strong,
                                                           IrreducibleKind::M, IrreducibleKind::Unrefinable,
                                                           IrreducibleKind::VeryStrong};

std::string to_string(IrreducibleKind k);

struct IrreducibilityProfile {
  Element element;
  std::array<Tri, 5> flags{Tri::Unknown, Tri::Unknown, Tri::Unknown, Tri::Unknown, Tri::Unknown};
  int cap = 0;

  Tri operator[](IrreducibleKind k) const { return flags[static_cast<std::size_t>(k)]; }
};

nlohmann::json to_json(const IrreducibilityProfile& p);

/// A flag is false on an enumerated counterexample; otherwise it is decided
/// over factorizations of every length, and Unknown only when the search
/// budget runs out.
IrreducibilityProfile classify(const TauRelation& t, const Element& a, int cap);

/// Same, from an already enumerated set (beta must be StrongAssociate).
IrreducibilityProfile classify(const TauRelation& t, const FactorizationSet& fs);

/// The five conditions for a regular non-unit: ~ some factor, ~= some
/// factor, ~ every factor, only trivial factorizations, self very strong
/// and very strong to some factor.
struct RegularAtomReport {
  Element element;
  std::array<Tri, 5> conditions{Tri::Unknown, Tri::Unknown, Tri::Unknown, Tri::Unknown, Tri::Unknown};
  int cap = 0;

  Tri is_atom() const { return conditions[3]; }
  bool decided() const;
};

nlohmann::json to_json(const RegularAtomReport& r);

/// Throws PreconditionError unless a is a regular non-unit.
RegularAtomReport tau_r_atom(const TauRelation& t, const Element& a, int cap);

}  // namespace taufact
