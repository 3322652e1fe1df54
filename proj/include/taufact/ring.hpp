#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace taufact {

/// Canonical element encoding. Exactly one of the three fields is used,
/// according to the shape of the ring the element belongs to:
///   ModInt / Integers -> value
///   PolyQuot          -> coeffs (low to high, length deg f, entries in [0,p))
///   Product           -> parts (exactly two)
/// Structural equality is ring equality; the derived ordering is the
/// deterministic element order used everywhere (lexicographic on encodings).
struct Element {
  std::int64_t value = 0;
  std::vector<std::int64_t> coeffs;
  std::vector<Element> parts;

  Element() = default;
  explicit Element(std::int64_t v) : value(v) {}
  static Element poly(std::vector<std::int64_t> c) {
    Element e;
    e.coeffs = std::move(c);
    return e;
  }
  static Element pair(Element l, Element r) {
    Element e;
    e.parts.reserve(2);
    e.parts.push_back(std::move(l));
    e.parts.push_back(std::move(r));
    return e;
  }

  friend bool operator==(const Element&, const Element&) = default;
  // Integers order by magnitude, positive before negative: 0, 1, -1, 2, -2, ...
  // Residues are non-negative, so finite rings keep numeric order.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    auto mag = [](std::int64_t v) { return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v); };
    if (auto c = mag(a.value) <=> mag(b.value); c != 0) return c;
    if (auto c = (a.value < 0) <=> (b.value < 0); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(a.coeffs.begin(), a.coeffs.end(),
                                                        b.coeffs.begin(), b.coeffs.end());
        c != 0)
      return c;
    return std::lexicographical_compare_three_way(a.parts.begin(), a.parts.end(),
                                                  b.parts.begin(), b.parts.end());
  }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

enum class AssociateKind { Associate = 0, StrongAssociate = 1, VeryStrongAssociate = 2 };

inline constexpr AssociateKind kAllAssociateKinds[] = {
    AssociateKind::Associate, AssociateKind::StrongAssociate, AssociateKind::VeryStrongAssociate};

std::string to_string(AssociateKind k);

enum class ElementClass { Zero, Unit, ZeroDivisor, RegularNonUnit };

std::string to_string(ElementClass c);

/// Description of a commutative ring with identity.
struct RingSpec {
  enum class Kind { ModInt, Integers, PolyQuot, Product };

  Kind kind = Kind::Integers;
  std::int64_t n = 0;                 // ModInt modulus
  std::int64_t p = 0;                 // PolyQuot characteristic
  std::vector<std::int64_t> f;        // PolyQuot modulus, low to high, monic
  std::shared_ptr<const RingSpec> left, right;

  static RingSpec mod_int(std::int64_t n);
  static RingSpec integers();
  static RingSpec poly_quot(std::int64_t p, std::vector<std::int64_t> f);
  static RingSpec product(RingSpec l, RingSpec r);

  /// False iff Integers occurs anywhere in the spec.
  bool finite() const;
  /// Text form in the `Z | Zn(n) | GFq(p,[..]) | prod(A,B)` grammar.
  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);
};

/// The set {r : a = r b}. `All` only for a = b = 0. `Product` is a
/// componentwise description used when an infinite component is
/// unconstrained (e.g. (0,2) = r (0,1) in Z x Z).
class CofactorSet {
 public:
  enum class Kind { Finite, All, Product };

  static CofactorSet finite(std::vector<Element> elems, bool has_unit, bool all_units);
  static CofactorSet all();
  static CofactorSet product(CofactorSet l, CofactorSet r);

  Kind kind() const { return kind_; }
  const std::vector<Element>& elements() const { return elems_; }
  const CofactorSet& left() const { return *left_; }
  const CofactorSet& right() const { return *right_; }

  bool empty() const;
  /// Some member is a unit.
  bool has_unit() const { return has_unit_; }
  /// Every member is a unit (vacuously true when empty).
  bool all_units() const { return all_units_; }
  bool contains(const Element& r) const;

 private:
  Kind kind_ = Kind::Finite;
  std::vector<Element> elems_;
  std::shared_ptr<const CofactorSet> left_, right_;
  bool has_unit_ = false;
  bool all_units_ = true;
};

struct RingPredicates {
  bool presimplifiable = false;
  bool strongly_associate = false;
};

/// Immutable ring value. Cheap to copy (shared implementation).
class Ring {
 public:
  /// Validates the spec; throws SpecError naming the offending field.
  static Ring build(const RingSpec& spec);

  const RingSpec& spec() const;
  bool finite() const;
  /// Number of elements; throws UnsupportedError for infinite rings.
  std::uint64_t order() const;

  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element mul(const Element& a, const Element& b) const;

  /// True iff `a` is a canonical encoding of an element of this ring.
  bool contains(const Element& a) const;
  /// Throws PreconditionError when !contains(a).
  void check_element(const Element& a) const;

  /// All elements in lexicographic order; UnsupportedError if infinite.
  const std::vector<Element>& elements() const;
  /// Position of `a` in elements(); finite rings only.
  std::size_t index_of(const Element& a) const;

  ElementClass classify(const Element& a) const;
  bool is_zero(const Element& a) const { return a == zero(); }
  bool is_unit(const Element& a) const;
  bool is_zero_divisor(const Element& a) const;
  /// Non-zero-divisor (units included, zero excluded).
  bool is_regular(const Element& a) const;
  /// Nonzero non-unit.
  bool in_r_sharp(const Element& a) const { return !is_zero(a) && !is_unit(a); }

  /// U(R): the identity first, then the rest in element order. Finite for
  /// every supported ring.
  const std::vector<Element>& units() const;
  Element inverse(const Element& unit) const;
  /// First unit u (in units() order) with a = u * b, if any.
  std::optional<Element> unit_cofactor(const Element& a, const Element& b) const;

  /// All b with b | a, sorted. UnsupportedError when the set is infinite
  /// (zero in an infinite component).
  std::vector<Element> divisors(const Element& a) const;
  /// True iff the divisor set of `a` is finite.
  bool has_finite_divisors(const Element& a) const;
  bool divides(const Element& b, const Element& a) const;
  CofactorSet cofactors(const Element& a, const Element& b) const;
  bool associated(const Element& a, const Element& b, AssociateKind kind) const;
  /// (a) + (b) = R.
  bool comaximal(const Element& a, const Element& b) const;

  /// Exhaustive scan; UnsupportedError if infinite.
  RingPredicates predicates() const;

  const Ring& left() const;
  const Ring& right() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.spec() == b.spec(); }

  struct Impl;

 private:
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace taufact
