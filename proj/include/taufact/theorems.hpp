#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "taufact/corpus.hpp"
#include "taufact/properties.hpp"

namespace taufact {

/// Informational: computed for a parameter choice the statement does not
/// cover; never counted as a pass or a failure.
enum class TheoremOutcome { Verified, Inapplicable, Violated, Skipped, Informational };

std::string to_string(TheoremOutcome o);

struct TheoremResult {
  std::string ring;
  std::string tau;
  std::string theorem;
  std::string instance;
  TheoremOutcome outcome = TheoremOutcome::Skipped;
  nlohmann::json witness;  // null when absent
  int cap = 0;
  bool scoped = false;
  std::string note;
};

nlohmann::json to_json(const TheoremResult& r);

struct TheoremSummary {
  std::size_t verified = 0, inapplicable = 0, violated = 0, skipped = 0, informational = 0;

  void add(TheoremOutcome o);
  TheoremSummary& operator+=(const TheoremSummary& o);
  friend bool operator==(const TheoremSummary&, const TheoremSummary&) = default;
};

nlohmann::json to_json(const TheoremSummary& s);

/// Theorem families, in report order.
const std::vector<std::string>& theorem_names();

/// Every theorem instance for one corpus entry. `only`, when non-empty,
/// restricts to the named families.
std::vector<TheoremResult> verify_entry(const CorpusEntry& e, Analyzer& A, const std::vector<std::string>& only = {});
std::vector<TheoremResult> verify_entry(const CorpusEntry& e, const std::vector<std::string>& only = {});

struct TheoremReport {
  nlohmann::json corpus;  // corpus metadata
  std::vector<TheoremResult> entries;
  TheoremSummary summary;
};

nlohmann::json to_json(const TheoremReport& r);

/// Runs the entries on up to `jobs` threads; the report order is the corpus
/// order regardless of scheduling.
TheoremReport verify_theorems(const Corpus& corpus, int jobs = 1, const std::vector<std::string>& only = {});

/// Parallel map over corpus entries with the same ordering guarantee.
void for_each_entry(const Corpus& corpus, int jobs, const std::function<void(std::size_t)>& work);

}  // namespace taufact
