#include "taufact/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>

#include "taufact/errors.hpp"
#include "taufact/text.hpp"

namespace taufact {

namespace {

// Integer components range over +-[lo, hi], finite components over every
// element.
std::vector<Element> box(const Ring& R, std::int64_t lo, std::int64_t hi) {
  const RingSpec& s = R.spec();
  if (s.kind == RingSpec::Kind::Integers) {
    std::vector<Element> out;
    for (std::int64_t k = lo; k <= hi; ++k) {
      if (k == 0) continue;
      out.emplace_back(k);
      out.emplace_back(-k);
    }
    if (lo == 0) out.emplace_back(0);
    return out;
  }
  if (s.kind == RingSpec::Kind::Product) {
    std::vector<Element> out;
    auto ls = box(R.left(), lo, hi), rs = box(R.right(), lo, hi);
    for (const auto& l : ls)
      for (const auto& r : rs) out.push_back(Element::pair(l, r));
    return out;
  }
  return R.elements();
}

std::vector<std::int64_t> int_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw SpecError(std::string(what) + ": expected an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SpecError(std::string(what) + ": expected an array of integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

int int_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw SpecError(std::string("corpus: missing integer '") + key + "'");
  return j[key].get<int>();
}

std::string describe(const RingSpec& r, const TauSpec* t) {
  return r.to_string() + (t ? " / " + t->to_string() : "");
}

}  // namespace

std::vector<Element> ScopeDesc::expand(const Ring& R) const {
  std::vector<Element> out;
  if (abs_range) {
    auto [lo, hi] = *abs_range;
    if (lo < 1) throw SpecError("scope: abs_range lower bound must be >= 1 (0 is not allowed in an infinite scope)");
    if (hi >= lo) out = box(R, lo, hi);
  }
  for (const auto& text : elements) out.push_back(parse_element(R, text));
  for (const auto& x : out)
    if (R.is_zero(x)) throw SpecError("scope: 0 is not allowed in the scope of an infinite ring");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json ScopeDesc::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  if (abs_range) j["abs_range"] = {abs_range->first, abs_range->second};
  if (!elements.empty()) j["elements"] = elements;
  return j;
}

ScopeDesc ScopeDesc::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SpecError("scope: expected an object");
  ScopeDesc d;
  for (const auto& [k, v] : j.items()) {
    if (k == "abs_range") {
      auto r = int_list(v, "scope.abs_range");
      if (r.size() != 2) throw SpecError("scope.abs_range: expected [lo, hi]");
      d.abs_range = std::make_pair(r[0], r[1]);
    } else if (k == "elements") {
      if (!v.is_array()) throw SpecError("scope.elements: expected an array");
      for (const auto& e : v) d.elements.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    } else {
      throw SpecError("scope: unknown field '" + k + "'");
    }
  }
  return d;
}

CorpusSpec CorpusSpec::default_spec() {
  CorpusSpec s;
  s.moduli = std::make_pair(2, 24);
  s.product_bound = 6;
  s.polyquot = {{2, {1, 1, 1}}, {2, {0, 0, 1}}};
  s.field_products = {3, 5, 7};
  ScopeDesc z;
  z.abs_range = std::make_pair(1, 60);
  ScopeDesc zz;
  zz.abs_range = std::make_pair(1, 20);
  for (int a : {1, 2, 3, 4, 6}) {
    zz.elements.push_back("(" + std::to_string(a) + ",0)");
    zz.elements.push_back("(0," + std::to_string(a) + ")");
  }
  s.infinite = {{"Z", z}, {"prod(Z,Z)", zz}};
  s.taus = {"full", "empty", "zero", "comax", "regular", "regcap(full)", "regcap(comax)"};
  return s;
}

CorpusSpec CorpusSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SpecError("corpus: expected a JSON object");
  if (!j.contains("schema") || j["schema"] != 1) throw SpecError("corpus: unsupported or missing schema (expected 1)");
  CorpusSpec s;
  s.taus.clear();
  std::map<std::string, ScopeDesc> named;
  if (j.contains("scopes")) {
    if (!j["scopes"].is_object()) throw SpecError("corpus.scopes: expected an object");
    for (const auto& [k, v] : j["scopes"].items()) named[k] = ScopeDesc::from_json(v);
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "schema" || k == "scopes") continue;
    if (k == "moduli") {
      if (!v.is_object()) throw SpecError("corpus.moduli: expected {from, to}");
      s.moduli = std::make_pair(int_field(v, "from"), int_field(v, "to"));
    } else if (k == "product_bound") {
      if (!v.is_number_integer()) throw SpecError("corpus.product_bound: expected an integer");
      s.product_bound = v.get<int>();
    } else if (k == "polyquot") {
      if (!v.is_array()) throw SpecError("corpus.polyquot: expected an array");
      for (const auto& e : v) {
        if (!e.is_object() || !e.contains("f")) throw SpecError("corpus.polyquot: expected {p, f}");
        s.polyquot.emplace_back(int_field(e, "p"), int_list(e["f"], "corpus.polyquot.f"));
      }
    } else if (k == "field_products") {
      for (auto q : int_list(v, "corpus.field_products")) s.field_products.push_back(static_cast<int>(q));
    } else if (k == "rings") {
      if (!v.is_array()) throw SpecError("corpus.rings: expected an array");
      for (const auto& e : v) {
        if (e.is_string()) {
          s.rings.push_back(e.get<std::string>());
          continue;
        }
        if (!e.is_object() || !e.contains("ring") || !e["ring"].is_string())
          throw SpecError("corpus.rings: expected a ring string or {ring, scope}");
        InfiniteEntry ie;
        ie.ring = e["ring"].get<std::string>();
        if (!e.contains("scope")) throw SpecError("corpus.rings: " + ie.ring + " needs a scope");
        const auto& sc = e["scope"];
        if (sc.is_string()) {
          auto it = named.find(sc.get<std::string>());
          if (it == named.end()) throw SpecError("corpus.rings: unknown scope '" + sc.get<std::string>() + "'");
          ie.scope = it->second;
        } else {
          ie.scope = ScopeDesc::from_json(sc);
        }
        s.infinite.push_back(std::move(ie));
      }
    } else if (k == "taus") {
      if (!v.is_array()) throw SpecError("corpus.taus: expected an array of strings");
      for (const auto& t : v) {
        if (!t.is_string()) throw SpecError("corpus.taus: expected an array of strings");
        s.taus.push_back(t.get<std::string>());
      }
    } else if (k == "cap") {
      if (v.is_number_integer()) {
        s.cap_finite = s.cap_infinite = v.get<int>();
      } else if (v.is_object()) {
        if (v.contains("finite")) s.cap_finite = int_field(v, "finite");
        if (v.contains("infinite")) s.cap_infinite = int_field(v, "infinite");
      } else {
        throw SpecError("corpus.cap: expected an integer or {finite, infinite}");
      }
    } else if (k == "budget") {
      if (!v.is_number_unsigned()) throw SpecError("corpus.budget: expected a non-negative integer");
      s.budget = v.get<std::size_t>();
    } else {
      throw SpecError("corpus: unknown field '" + k + "'");
    }
  }
  if (s.cap_finite < 2 || s.cap_infinite < 2) throw SpecError("corpus.cap: must be >= 2");
  return s;
}

nlohmann::json CorpusSpec::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  if (moduli) j["moduli"] = {{"from", moduli->first}, {"to", moduli->second}};
  if (product_bound) j["product_bound"] = product_bound;
  if (!polyquot.empty()) {
    j["polyquot"] = nlohmann::json::array();
    for (const auto& [p, f] : polyquot) j["polyquot"].push_back({{"p", p}, {"f", f}});
  }
  if (!field_products.empty()) j["field_products"] = field_products;
  j["rings"] = nlohmann::json::array();
  for (const auto& r : rings) j["rings"].push_back(r);
  for (const auto& e : infinite) j["rings"].push_back({{"ring", e.ring}, {"scope", e.scope.to_json()}});
  j["taus"] = taus;
  j["cap"] = {{"finite", cap_finite}, {"infinite", cap_infinite}};
  j["budget"] = budget;
  return j;
}

nlohmann::json Corpus::metadata() const {
  return {{"rings", ring_count}, {"entries", entries.size()}, {"elements", element_total}, {"notes", notes}};
}

Corpus generate_corpus(const CorpusSpec& spec) {
  struct RingItem {
    RingSpec spec;
    std::optional<ScopeDesc> scope;
  };
  std::vector<RingItem> items;
  auto zn = [](std::int64_t n) { return RingSpec::mod_int(n); };
  if (spec.moduli)
    for (int n = spec.moduli->first; n <= spec.moduli->second; ++n) items.push_back({zn(n), {}});
  for (int a = 2; a <= spec.product_bound; ++a)
    for (int b = 2; b <= spec.product_bound; ++b) items.push_back({RingSpec::product(zn(a), zn(b)), {}});
  for (const auto& [p, f] : spec.polyquot) items.push_back({RingSpec::poly_quot(p, f), {}});
  for (int q : spec.field_products) items.push_back({RingSpec::product(zn(q), zn(q)), {}});
  for (const auto& r : spec.rings) {
    RingSpec rs = parse_ring_spec(r);
    if (!rs.finite()) throw SpecError("corpus.rings: infinite ring " + r + " needs a scope");
    items.push_back({rs, {}});
  }
  for (const auto& e : spec.infinite) {
    RingSpec rs = parse_ring_spec(e.ring);
    items.push_back({rs, rs.finite() ? std::nullopt : std::optional<ScopeDesc>(e.scope)});
  }

  Corpus c;
  std::vector<RingSpec> seen;
  for (const auto& item : items) {
    if (std::find(seen.begin(), seen.end(), item.spec) != seen.end()) {
      c.notes.push_back("ring " + item.spec.to_string() + " listed more than once; kept the first");
      continue;
    }
    seen.push_back(item.spec);
    Ring R = Ring::build(item.spec);
    std::optional<std::vector<Element>> scope;
    std::vector<Element> sample;
    std::size_t size = 0;
    if (item.scope) {
      scope = item.scope->expand(R);
      size = scope->size();
      for (const auto& x : *scope)
        if (R.in_r_sharp(x)) sample.push_back(x);
    } else {
      if (R.order() > spec.budget) throw SpecError("corpus: budget exceeded by " + describe(item.spec, nullptr));
      size = R.order();
      for (const auto& x : R.elements())
        if (R.in_r_sharp(x)) sample.push_back(x);
    }
    c.element_total += size;
    if (c.element_total > spec.budget)
      throw SpecError("corpus: budget of " + std::to_string(spec.budget) + " elements exceeded by " +
                      describe(item.spec, nullptr) + " (" + std::to_string(size) + " elements)");
    ++c.ring_count;

    std::vector<std::pair<TauSpec, std::vector<bool>>> taus;
    for (const auto& text : spec.taus) {
      TauSpec ts = parse_tau_spec(R, text);
      if (std::any_of(taus.begin(), taus.end(), [&](const auto& p) { return p.first == ts; })) {
        c.notes.push_back("tau " + ts.to_string() + " listed more than once for " + item.spec.to_string());
        continue;
      }
      TauRelation t = TauRelation::build(ts, R);
      std::vector<bool> table;
      table.reserve(sample.size() * sample.size());
      for (const auto& a : sample)
        for (const auto& b : sample) table.push_back(t.holds(a, b));
      CorpusEntry e;
      e.ring = item.spec;
      e.tau = ts;
      e.scope = scope;
      if (item.scope) e.scope_desc = item.scope->to_json();
      e.cap = item.spec.finite() ? spec.cap_finite : spec.cap_infinite;
      for (const auto& [other, tab] : taus)
        if (tab == table) e.same_relation_as.push_back(other.to_string());
      if (!e.same_relation_as.empty())
        c.notes.push_back(item.spec.to_string() + ": " + ts.to_string() + " equals " + e.same_relation_as.front() +
                          (item.scope ? " on the scope" : ""));
      taus.emplace_back(ts, std::move(table));
      c.entries.push_back(std::move(e));
    }
  }
  return c;
}

CorpusSpec load_corpus_spec(const std::string& source) {
  if (source == "default") return CorpusSpec::default_spec();
  std::ifstream in(source);
  if (!in) throw SpecError("corpus: cannot open " + source);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError("corpus: " + source + ": " + e.what());
  }
  if (j.is_object() && j.contains("corpus") && j.contains("entries")) return CorpusSpec::from_json(j["corpus"]);
  return CorpusSpec::from_json(j);
}

}  // namespace taufact
