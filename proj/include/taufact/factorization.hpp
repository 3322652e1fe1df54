#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "taufact/outcome.hpp"
#include "taufact/ring.hpp"
#include "taufact/tau.hpp"

namespace taufact {

/// target = unit * prod(factors). Factors are kept sorted.
struct Factorization {
  Element unit;
  std::vector<Element> factors;
  Element target;

  std::size_t length() const { return factors.size(); }
  bool trivial() const { return factors.size() == 1; }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

nlohmann::json to_json(const Factorization& f);

/// Sorts the factors and sets unit to the first unit with target = unit * prod.
/// Throws PreconditionError if no such unit exists.
Factorization make_factorization(const Ring& R, const Element& target, std::vector<Element> factors);

/// Independent re-check of every Factorization invariant: unit is a unit,
/// the product matches, factors are in R# (or the lone factor 0 of the
/// trivial factorization of 0) and pairwise tau-related.
bool is_tau_factorization(const TauRelation& t, const Factorization& f);

/// One factor's slot in a canonical key: the least element of its
/// beta-class, or the factor itself when `identity` (a factor that is not
/// very strongly associate to itself).
struct KeyPart {
  Element rep;
  bool identity = false;

  friend bool operator==(const KeyPart&, const KeyPart&) = default;
  friend auto operator<=>(const KeyPart&, const KeyPart&) = default;
};

using CanonicalKey = std::vector<KeyPart>;

nlohmann::json to_json(const CanonicalKey& k);

/// Least element of the beta-class of x among the divisors of `target`.
KeyPart class_of(const Ring& R, const Element& x, const Element& target, AssociateKind beta);

CanonicalKey canonicalize(const Ring& R, const Factorization& f, AssociateKind beta);

enum class Unbounded { No, Yes, Unknown };

std::string to_string(Unbounded u);

/// base with `word` inserted k times is a tau-factorization of base.target
/// for every k >= 0.
struct Pump {
  Factorization base;
  std::vector<Element> word;

  Factorization pumped(const Ring& R, int times) const;
};

nlohmann::json to_json(const Pump& p);

/// Per-factor bit mask; an item's tags are the OR over its members of the
/// AND over their factors. Must be invariant under unit multiples when the
/// relation is.
using FactorTagger = std::function<std::uint32_t(const Element&)>;

struct FactorizationItem {
  CanonicalKey key;
  Factorization rep;  // least member in element order
  std::uint32_t tags = 0;
};

struct FactorizationSet {
  Element target;
  AssociateKind beta = AssociateKind::Associate;
  int cap = 0;
  std::vector<FactorizationItem> items;  // sorted by key
  bool complete = false;
  Unbounded unbounded = Unbounded::Unknown;
  std::optional<Pump> pump;
  std::optional<int> max_length;  // set when unbounded == No

  std::size_t nontrivial_count() const;
  bool has_nontrivial() const { return nontrivial_count() > 0; }
};

nlohmann::json to_json(const FactorizationSet& s);

/// max(8, number of associate classes of non-unit divisors of a + 1).
int default_cap(const Ring& R, const Element& a);

/// All tau-factorizations of a with length <= cap up to rearrangement and
/// beta. Throws PreconditionError for a unit, for 0 in an infinite ring or
/// cap < 2, and UnsupportedError when a has infinitely many divisors and
/// non-trivial factorizations cannot be ruled out.
FactorizationSet enumerate_factorizations(const TauRelation& t, const Element& a, AssociateKind beta, int cap,
                                          const FactorTagger& tagger = {});

/// Every raw tau-factorization of a (sorted factor multiset, one unit) of
/// length <= cap, in lexicographic order. Stops when visit returns false;
/// returns false iff stopped.
bool for_each_factorization(const TauRelation& t, const Element& a, int cap,
                            const std::function<bool(const Factorization&)>& visit);

using ElementPredicate = std::function<bool(const Element&)>;

/// Length range of the tau-factorizations of a whose factors all satisfy
/// `allowed` and, when `marked` is set, at least one satisfies `marked`.
/// The trivial factorization of 0 is not counted. Exact with no length cap;
/// `exists` is Unknown only when the state budget runs out. Predicates must
/// be invariant under unit multiples when the relation is.
struct LengthInfo {
  Tri exists = Tri::Unknown;
  std::optional<int> min_length;
  std::optional<int> max_length;  // unset when unbounded or unknown
  Unbounded unbounded = Unbounded::Unknown;
};

LengthInfo factorization_lengths(const TauRelation& t, const Element& a, const ElementPredicate& allowed,
                                 const ElementPredicate& marked = {});

/// b occurs as a factor of some tau-factorization of a of length <= cap.
bool tau_divides(const TauRelation& t, const Element& b, const Element& a, int cap);

struct RefineRejection {
  Element first, second;  // a pair of positions that is not tau-related
};

/// Replaces factor `position` of f by the factors of sub. Throws
/// PreconditionError when sub.target differs from that factor.
std::variant<Factorization, RefineRejection> refine(const TauRelation& t, const Factorization& f, std::size_t position,
                                                    const Factorization& sub);

}  // namespace taufact
