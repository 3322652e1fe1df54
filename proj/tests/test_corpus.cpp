#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "taufact/corpus.hpp"
#include "taufact/errors.hpp"
#include "taufact/text.hpp"

using namespace taufact;
using nlohmann::json;

TEST_CASE("default corpus") {
  Corpus c = generate_corpus(CorpusSpec::default_spec());
  // 23 moduli, 25 products, 2 quotients, F_7 x F_7, Z and Z x Z; F_3 x F_3
  // and F_5 x F_5 already occur among the products.
  CHECK(c.ring_count == 23 + 25 + 2 + 1 + 2);
  CHECK(c.entries.size() == 7 * c.ring_count);
  auto meta = c.metadata();
  CHECK(meta["entries"] == c.entries.size());
  CHECK(meta["rings"] == c.ring_count);
  CHECK(meta["elements"] == c.element_total);
  bool dedup = false;
  for (const auto& n : c.notes) dedup = dedup || n.find("prod(Zn(3),Zn(3)) listed more than once") != std::string::npos;
  CHECK(dedup);

  const CorpusEntry* zz = nullptr;
  for (const auto& e : c.entries)
    if (e.ring_text() == "prod(Z,Z)" && e.tau_text() == "full") zz = &e;
  REQUIRE(zz);
  REQUIRE(zz->scope);
  CHECK(zz->scope->size() == 40 * 40 + 10);
  CHECK(zz->cap == 10);
  for (const auto& x : *zz->scope) CHECK_FALSE(x == Element::pair(Element(0), Element(0)));

  // Extensionally equal relations are kept and noted.
  for (const auto& e : c.entries)
    if (e.ring_text() == "prod(Zn(3),Zn(3))" && e.tau_text() == "regcap(full)") {
      REQUIRE_FALSE(e.same_relation_as.empty());
      CHECK(e.same_relation_as.front() == "empty");
    }
}

TEST_CASE("corpus determinism") {
  auto a = generate_corpus(CorpusSpec::default_spec()), b = generate_corpus(CorpusSpec::default_spec());
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].ring_text() == b.entries[i].ring_text());
    CHECK(a.entries[i].tau_text() == b.entries[i].tau_text());
    CHECK(a.entries[i].scope == b.entries[i].scope);
  }
}

TEST_CASE("empty and custom corpora") {
  Corpus empty = generate_corpus(CorpusSpec::from_json(json{{"schema", 1}}));
  CHECK(empty.entries.empty());
  CHECK(empty.ring_count == 0);

  json j = json::parse(R"j({
    "schema": 1,
    "rings": ["Zn(6)", {"ring": "Z", "scope": "small"}, {"ring": "prod(Z,Zn(2))", "scope": {"abs_range": [1, 3]}}],
    "scopes": {"small": {"abs_range": [2, 5], "elements": ["12"]}},
    "taus": ["full", "comax"],
    "cap": {"finite": 4, "infinite": 8},
    "budget": 100
  })j");
  CorpusSpec s = CorpusSpec::from_json(j);
  Corpus c = generate_corpus(s);
  CHECK(c.ring_count == 3);
  REQUIRE(c.entries.size() == 6);
  CHECK(c.entries[0].cap == 4);
  CHECK(c.entries[2].cap == 8);
  REQUIRE(c.entries[2].scope);
  CHECK(c.entries[2].scope->size() == 9);
  CHECK(c.entries[4].scope->size() == 6 * 2);
  CHECK(c.element_total == 6 + 9 + 12);

  // to_json round trip regenerates the same corpus.
  Corpus again = generate_corpus(CorpusSpec::from_json(s.to_json()));
  REQUIRE(again.entries.size() == c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i) CHECK(again.entries[i].scope == c.entries[i].scope);
}

TEST_CASE("corpus errors") {
  auto bad = [](const char* text) { return CorpusSpec::from_json(json::parse(text)); };
  CHECK_THROWS_AS(bad(R"j({"taus": ["full"]})j"), SpecError);
  CHECK_THROWS_AS(bad(R"j({"schema": 2})j"), SpecError);
  CHECK_THROWS_WITH_AS(bad(R"j({"schema": 1, "colour": 3})j"), doctest::Contains("colour"), SpecError);
  CHECK_THROWS_AS(bad(R"j({"schema": 1, "rings": [{"ring": "Z"}]})j"), SpecError);
  CHECK_THROWS_AS(bad(R"j({"schema": 1, "rings": [{"ring": "Z", "scope": "nope"}]})j"), SpecError);
  CHECK_THROWS_AS(bad(R"j({"schema": 1, "cap": 1})j"), SpecError);

  auto gen = [&](const char* text) { return generate_corpus(bad(text)); };
  CHECK_THROWS_WITH_AS(gen(R"j({"schema": 1, "rings": [{"ring": "Z", "scope": {"elements": ["0", "2"]}}], "taus": ["full"]})j"),
                       doctest::Contains("0 is not allowed"), SpecError);
  CHECK_THROWS_AS(gen(R"j({"schema": 1, "rings": [{"ring": "Z", "scope": {"abs_range": [0, 4]}}], "taus": ["full"]})j"),
                  SpecError);
  CHECK_THROWS_WITH_AS(gen(R"j({"schema": 1, "moduli": {"from": 2, "to": 30}, "taus": ["full"], "budget": 50})j"),
                       doctest::Contains("Zn("), SpecError);
  CHECK_THROWS_AS(gen(R"j({"schema": 1, "rings": ["Zn(1)"], "taus": ["full"]})j"), SpecError);
  CHECK_THROWS_AS(gen(R"j({"schema": 1, "rings": ["Zn(6)"], "taus": ["fill"]})j"), SpecError);
  CHECK_THROWS_AS(gen(R"j({"schema": 1, "rings": ["Z"], "taus": ["full"]})j"), SpecError);
}

TEST_CASE("corpus files") {
  CHECK_THROWS_AS(load_corpus_spec("/nonexistent/corpus.json"), SpecError);
  std::string path = "test_corpus_tmp.json";
  {
    std::ofstream out(path);
    out << "{\"schema\": 1, \"rings\": [\"Zn(4)\"],";
  }
  CHECK_THROWS_WITH_AS(load_corpus_spec(path), doctest::Contains("parse error"), SpecError);
  {
    std::ofstream out(path);
    out << json{{"schema", 1}, {"rings", json::array({"Zn(4)"})}, {"taus", json::array({"full"})}}.dump();
  }
  CHECK(generate_corpus(load_corpus_spec(path)).entries.size() == 1);
  {
    std::ofstream out(path);
    out << json{{"schema", 1}, {"corpus", CorpusSpec::default_spec().to_json()}, {"entries", json::array()}}.dump();
  }
  CHECK(generate_corpus(load_corpus_spec(path)).entries.size() == 371);
  std::remove(path.c_str());
}
