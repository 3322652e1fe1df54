#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "taufact/ring.hpp"
#include "taufact/tau.hpp"

namespace taufact {

/// Element scope of an infinite ring: every element whose components all
/// have absolute value in `abs_range`, plus the listed elements.
struct ScopeDesc {
  std::optional<std::pair<std::int64_t, std::int64_t>> abs_range;
  std::vector<std::string> elements;

  /// Throws SpecError on 0, on elements outside the ring and on an
  /// empty range lower bound.
  std::vector<Element> expand(const Ring& R) const;

  nlohmann::json to_json() const;
  static ScopeDesc from_json(const nlohmann::json& j);
};

struct InfiniteEntry {
  std::string ring;
  ScopeDesc scope;
};

struct CorpusSpec {
  std::optional<std::pair<int, int>> moduli;  // Zn(n), from..to
  int product_bound = 0;                      // Zn(a) x Zn(b), 2 <= a, b <= bound
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> polyquot;
  std::vector<int> field_products;            // Zn(q) x Zn(q)
  std::vector<std::string> rings;             // explicit finite rings
  std::vector<InfiniteEntry> infinite;
  std::vector<std::string> taus;
  int cap_finite = 5;
  int cap_infinite = 10;
  std::size_t budget = 20000;

  static CorpusSpec default_spec();

  /// Schema:
  ///   {schema: 1, moduli: {from, to}, product_bound, polyquot: [{p, f}],
  ///    field_products: [q], rings: ["Zn(6)" | {ring, scope}], scopes: {name: scope},
  ///    taus: [..], cap: N | {finite, infinite}, budget}
  /// A ring object's scope is an inline scope or the name of one in `scopes`.
  /// Throws SpecError.
  static CorpusSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct CorpusEntry {
  RingSpec ring;
  TauSpec tau;
  std::optional<std::vector<Element>> scope;
  nlohmann::json scope_desc;  // null for finite rings
  int cap = 5;
  /// Earlier tau specs of the same ring with the same relation on the
  /// sampled elements.
  std::vector<std::string> same_relation_as;

  std::string ring_text() const { return ring.to_string(); }
  std::string tau_text() const { return tau.to_string(); }
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::size_t ring_count = 0;
  std::size_t element_total = 0;
  std::vector<std::string> notes;

  nlohmann::json metadata() const;
};

/// Rings in generator order (moduli, products, polynomial quotients, field
/// products, explicit rings, infinite rings), repeats dropped, each crossed
/// with the tau list. Throws SpecError when the summed element count
/// (ring order or scope size) exceeds the budget.
Corpus generate_corpus(const CorpusSpec& spec);

/// "default" or a path to a corpus file; a catalog file is accepted and
/// its embedded corpus used.
CorpusSpec load_corpus_spec(const std::string& source);

}  // namespace taufact
