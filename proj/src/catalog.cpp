#include "taufact/catalog.hpp"

#include "taufact/errors.hpp"
#include "taufact/irreducibility.hpp"
#include "taufact/text.hpp"

namespace taufact {

namespace {

nlohmann::json classify_row(Analyzer& A, const Element& a) {
  const Ring& R = A.ring();
  nlohmann::json row{{"element", element_to_json(a)}, {"class", to_string(R.classify(a))}};
  try {
    row["flags"] = to_json(A.profile(Scope::Plain, a))["flags"];
  } catch (const UnsupportedError& e) {
    row["unsupported"] = e.what();
  }
  return row;
}

}  // namespace

nlohmann::json catalog_entry(const CorpusEntry& e) {
  Ring R = Ring::build(e.ring);
  Analyzer A(TauRelation::build(e.tau, R), e.scope, e.cap);
  nlohmann::json j{{"ring", e.ring_text()}, {"tau", e.tau_text()}, {"cap", e.cap}, {"scoped", A.scoped()}};
  if (!e.scope_desc.is_null()) j["scope"] = e.scope_desc;
  if (!e.same_relation_as.empty()) j["same_relation_as"] = e.same_relation_as;

  auto elements = nlohmann::json::array();
  for (const auto& a : A.domain(Scope::Plain)) elements.push_back(classify_row(A, a));
  j["elements"] = std::move(elements);

  nlohmann::json props = nlohmann::json::object();
  for (auto s : kAllScopes)
    for (const auto& p : all_properties(s)) props[to_string(p)] = to_json(A.check(p));
  j["properties"] = std::move(props);
  j["elasticity"] = to_json(A.elasticity());

  TheoremSummary sum;
  auto theorems = nlohmann::json::array();
  for (const auto& r : verify_entry(e, A)) {
    sum.add(r.outcome);
    theorems.push_back(to_json(r));
  }
  j["theorems"] = std::move(theorems);
  j["summary"] = to_json(sum);
  return j;
}

nlohmann::json build_catalog(const CorpusSpec& spec, int jobs) {
  Corpus corpus = generate_corpus(spec);
  std::vector<nlohmann::json> parts(corpus.entries.size());
  for_each_entry(corpus, jobs, [&](std::size_t i) { parts[i] = catalog_entry(corpus.entries[i]); });
  TheoremSummary total;
  auto entries = nlohmann::json::array();
  for (auto& p : parts) {
    total += summary_from_json(p);
    entries.push_back(std::move(p));
  }
  return {{"schema", 1},
          {"corpus", spec.to_json()},
          {"metadata", corpus.metadata()},
          {"entries", std::move(entries)},
          {"summary", to_json(total)}};
}

TheoremSummary summary_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("summary") || !j["summary"].is_object())
    throw SpecError("summary: missing 'summary' object");
  const auto& s = j["summary"];
  TheoremSummary out;
  auto get = [&](const char* k) -> std::size_t {
    if (!s.contains(k) || !s[k].is_number_unsigned()) throw SpecError(std::string("summary: bad field '") + k + "'");
    return s[k].get<std::size_t>();
  };
  out.verified = get("verified");
  out.inapplicable = get("inapplicable");
  out.violated = get("violated");
  out.skipped = get("skipped");
  out.informational = get("informational");
  return out;
}

}  // namespace taufact
