#pragma once

#include <json.hpp>

#include "taufact/corpus.hpp"
#include "taufact/properties.hpp"
#include "taufact/theorems.hpp"

namespace taufact {

/// One (ring, tau) record: element classifications over the plain domain,
/// the property vector for every scope, elasticity and theorem results.
nlohmann::json catalog_entry(const CorpusEntry& e);

/// {schema: 1, corpus: <spec>, metadata, entries: [...], summary}. The
/// embedded spec regenerates the same corpus, so the file can be passed back
/// as a corpus source.
nlohmann::json build_catalog(const CorpusSpec& spec, int jobs = 1);

/// Reads the summary object of a report or catalog. Throws SpecError.
TheoremSummary summary_from_json(const nlohmann::json& j);

}  // namespace taufact
