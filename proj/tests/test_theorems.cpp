#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "taufact/catalog.hpp"
#include "taufact/errors.hpp"
#include "taufact/theorems.hpp"

using namespace taufact;
using nlohmann::json;

namespace {

CorpusSpec small_spec() {
  return CorpusSpec::from_json(json::parse(R"j({
    "schema": 1,
    "rings": ["Zn(6)", "prod(Zn(3),Zn(3))", {"ring": "prod(Z,Z)", "scope": {"abs_range": [1, 4]}}],
    "taus": ["full", "regcap(full)"]
  })j"));
}

std::vector<const TheoremResult*> pick(const TheoremReport& r, const std::string& ring, const std::string& tau,
                                       const std::string& family) {
  std::vector<const TheoremResult*> out;
  for (const auto& e : r.entries)
    if (e.ring == ring && e.tau == tau && e.theorem == family) out.push_back(&e);
  return out;
}

}  // namespace

TEST_CASE("small corpus has no violations") {
  Corpus c = generate_corpus(small_spec());
  auto r = verify_theorems(c, 1);
  CHECK(r.summary.violated == 0);
  CHECK(r.summary.skipped == 0);
  CHECK(r.summary.verified > 0);

  TheoremSummary again;
  for (const auto& e : r.entries) again.add(e.outcome);
  CHECK(again == r.summary);

  auto h = pick(r, "Zn(6)", "full", "irreducible-hierarchy");
  REQUIRE(h.size() == 6);
  for (auto* e : h) {
    CHECK(e->outcome == TheoremOutcome::Verified);
    CHECK(e->note == "4 elements");
  }
  auto zd = pick(r, "prod(Zn(3),Zn(3))", "regcap(full)", "treg-zero-divisors");
  REQUIRE_FALSE(zd.empty());
  for (auto* e : zd) CHECK(e->outcome == TheoremOutcome::Verified);
  auto ut = pick(r, "prod(Z,Z)", "regcap(full)", "treg-u-transfer");
  REQUIRE_FALSE(ut.empty());
  for (auto* e : ut) CHECK(e->outcome == TheoremOutcome::Verified);
}

TEST_CASE("report order does not depend on the thread count") {
  Corpus c = generate_corpus(small_spec());
  auto one = to_json(verify_theorems(c, 1)).dump();
  auto three = to_json(verify_theorems(c, 3)).dump();
  CHECK(one == three);
}

TEST_CASE("family filter") {
  Corpus c = generate_corpus(small_spec());
  auto r = verify_theorems(c, 1, {"u-bijection"});
  REQUIRE_FALSE(r.entries.empty());
  for (const auto& e : r.entries) CHECK(e.theorem == "u-bijection");
  CHECK_THROWS_AS(verify_theorems(c, 1, {"no-such-family"}), SpecError);
  CHECK(theorem_names().size() == 16);
}

TEST_CASE("summary arithmetic") {
  TheoremSummary a, b;
  a.add(TheoremOutcome::Verified);
  a.add(TheoremOutcome::Violated);
  b.add(TheoremOutcome::Informational);
  b.add(TheoremOutcome::Skipped);
  b.add(TheoremOutcome::Verified);
  TheoremSummary ab = a, ba = b;
  ab += b;
  ba += a;
  CHECK(ab == ba);
  CHECK(ab.verified == 2);
  CHECK(ab.informational == 1);
  CHECK(summary_from_json(json{{"summary", to_json(ab)}}) == ab);
  CHECK_THROWS_AS(summary_from_json(json{{"summary", {{"verified", 1}}}}), SpecError);
}

TEST_CASE("catalog round trip") {
  CorpusSpec spec = CorpusSpec::from_json(json::parse(R"j({
    "schema": 1, "rings": ["Zn(4)", "Zn(6)", {"ring": "Z", "scope": {"abs_range": [2, 12]}}], "taus": ["full", "comax"]
  })j"));
  json cat = build_catalog(spec, 2);
  CHECK(cat["schema"] == 1);
  REQUIRE(cat["entries"].size() == 6);
  const json& z6 = cat["entries"][2];
  CHECK(z6["ring"] == "Zn(6)");
  CHECK(z6["properties"]["ffr(associate)@plain"]["outcome"] == "fails");
  CHECK(z6["properties"]["wffr(associate)@plain"]["outcome"] == "holds");

  std::string path = "test_theorems_catalog.json";
  {
    std::ofstream out(path);
    out << cat.dump(2);
  }
  auto r = verify_theorems(generate_corpus(load_corpus_spec(path)), 1);
  CHECK(r.summary == summary_from_json(cat));
  std::remove(path.c_str());
}
