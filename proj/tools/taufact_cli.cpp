// taufact: command-line front end. JSON on stdout, --pretty for tables.
//
// Exit status: 0 ok, 1 usage or spec error, 2 a theorem was violated,
// 3 a search ran out of cap or budget (only with --strict).

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taufact/catalog.hpp"
#include "taufact/corpus.hpp"
#include "taufact/errors.hpp"
#include "taufact/factorization.hpp"
#include "taufact/irreducibility.hpp"
#include "taufact/properties.hpp"
#include "taufact/text.hpp"
#include "taufact/theorems.hpp"
#include "taufact/ufactorization.hpp"

using namespace taufact;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kViolated = 2, kCapExhausted = 3 };

struct Options {
  bool pretty = false;
  bool strict = false;
  std::string ring, tau, element;
  int cap = 0;
  std::string beta = "associate";
  std::string scope = "all";
  std::string range;
  std::vector<std::string> samples;
  std::string corpus = "default";
  std::string out;
  int jobs = 1;
  std::vector<std::string> only;
};

class Table {
 public:
  explicit Table(std::vector<std::string> head) { rows_.push_back(std::move(head)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> w;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (w.size() <= i) w.push_back(0);
        w[i] = std::max(w[i], r[i].size());
      }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& r = rows_[k];
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << r[i];
        if (i + 1 < r.size()) os << std::string(w[i] - r[i].size() + 2, ' ');
      }
      os << '\n';
      if (k == 0) {
        std::size_t total = 0;
        for (auto x : w) total += x + 2;
        os << std::string(total - 2, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string product_text(const Factorization& f) {
  std::string s = format_element(f.unit);
  for (const auto& x : f.factors) s += " * " + format_element(x);
  return s;
}

AssociateKind parse_beta(const std::string& s) {
  for (auto k : kAllAssociateKinds)
    if (s == to_string(k)) return k;
  throw SpecError("unknown beta \"" + s + "\" (expected associate, strong or verystrong)");
}

struct Target {
  Ring ring;
  TauRelation tau;
  Element element;
};

Target target(const Options& o, bool need_element) {
  Ring R = Ring::build(parse_ring_spec(o.ring));
  TauRelation t = TauRelation::build(parse_tau_spec(R, o.tau), R);
  Element a = need_element ? parse_element(R, o.element) : R.zero();
  return {R, t, a};
}

int element_cap(const Options& o, const Ring& R, const Element& a) { return o.cap > 0 ? o.cap : default_cap(R, a); }

json head(const Target& t) { return {{"ring", t.ring.spec().to_string()}, {"tau", t.tau.to_string()}}; }

void emit(const Options& o, const json& j, const std::function<void(std::ostream&)>& pretty) {
  if (o.pretty) pretty(std::cout);
  else std::cout << j.dump(2) << '\n';
}

int cmd_classify(const Options& o) {
  Target t = target(o, true);
  int cap = element_cap(o, t.ring, t.element);
  auto p = classify(t.tau, t.element, cap);
  json j = head(t);
  j["element"] = element_to_json(t.element);
  j["class"] = to_string(t.ring.classify(t.element));
  j["profile"] = to_json(p);
  bool unknown = std::count(p.flags.begin(), p.flags.end(), Tri::Unknown) > 0;
  emit(o, j, [&](std::ostream& os) {
    os << o.ring << ", tau = " << o.tau << ", element " << format_element(t.element) << " ("
       << to_string(t.ring.classify(t.element)) << ", cap " << cap << ")\n";
    Table tb({"kind", "flag"});
    for (auto k : kAllIrreducibleKinds) tb.add({to_string(k), to_string(p[k])});
    tb.print(os);
  });
  return o.strict && unknown ? kCapExhausted : kOk;
}

int cmd_factorizations(const Options& o) {
  Target t = target(o, true);
  int cap = element_cap(o, t.ring, t.element);
  auto fs = enumerate_factorizations(t.tau, t.element, parse_beta(o.beta), cap);
  json j = head(t);
  j["factorizations"] = to_json(fs);
  emit(o, j, [&](std::ostream& os) {
    os << format_element(t.element) << ": " << fs.items.size() << " class(es) up to " << to_string(fs.beta)
       << ", cap " << cap << (fs.complete ? "" : ", incomplete") << ", unbounded " << to_string(fs.unbounded)
       << '\n';
    Table tb({"length", "key", "factorization"});
    for (const auto& it : fs.items)
      tb.add({std::to_string(it.rep.length()), to_json(it.key).dump(), product_text(it.rep)});
    tb.print(os);
    if (fs.pump) os << "pump: " << to_json(*fs.pump).dump() << '\n';
  });
  return o.strict && !fs.complete ? kCapExhausted : kOk;
}

int cmd_ufact(const Options& o) {
  Target t = target(o, true);
  int cap = element_cap(o, t.ring, t.element);
  auto fs = enumerate_factorizations(t.tau, t.element, AssociateKind::Associate, cap);
  json list = json::array();
  std::vector<std::pair<Factorization, std::vector<UFactorization>>> rows;
  for (const auto& it : fs.items) {
    auto us = u_partitions(t.ring, it.rep);
    json ju = json::array();
    for (const auto& u : us) ju.push_back(to_json(u));
    list.push_back({{"factorization", to_json(it.rep)}, {"u_factorizations", ju}});
    rows.emplace_back(it.rep, std::move(us));
  }
  json j = head(t);
  j["element"] = element_to_json(t.element);
  j["cap"] = cap;
  j["complete"] = fs.complete;
  j["items"] = list;
  emit(o, j, [&](std::ostream& os) {
    Table tb({"factorization", "u-factorization"});
    for (const auto& [f, us] : rows) {
      bool first = true;
      for (const auto& u : us) {
        std::string s = format_element(u.unit);
        for (const auto& x : u.inessential) s += " * " + format_element(x);
        s += " * ceil(";
        for (std::size_t i = 0; i < u.essential.size(); ++i) s += (i ? " * " : "") + format_element(u.essential[i]);
        s += ")";
        tb.add({first ? product_text(f) : "", s});
        first = false;
      }
    }
    tb.print(os);
  });
  return o.strict && !fs.complete ? kCapExhausted : kOk;
}

std::optional<std::vector<Element>> element_scope(const Options& o, const Ring& R) {
  if (o.range.empty() && o.samples.empty()) return std::nullopt;
  ScopeDesc d;
  if (!o.range.empty()) {
    auto colon = o.range.find(':');
    if (colon == std::string::npos) throw SpecError("--range expects LO:HI, got \"" + o.range + "\"");
    try {
      d.abs_range = {std::stoll(o.range.substr(0, colon)), std::stoll(o.range.substr(colon + 1))};
    } catch (const std::exception&) {
      throw SpecError("--range expects integers LO:HI, got \"" + o.range + "\"");
    }
  }
  d.elements = o.samples;
  return d.expand(R);
}

int cmd_properties(const Options& o) {
  Target t = target(o, false);
  auto scope = element_scope(o, t.ring);
  if (!t.ring.finite() && !scope)
    throw SpecError("infinite ring " + o.ring + " needs an element scope (--range LO:HI and/or --sample E)");
  std::vector<Scope> scopes;
  if (o.scope == "all") scopes.assign(std::begin(kAllScopes), std::end(kAllScopes));
  else scopes.push_back(parse_scope(o.scope));
  int cap = o.cap > 0 ? o.cap : (t.ring.finite() ? 5 : 10);
  Analyzer A(t.tau, scope, cap);
  json props = json::object();
  bool unknown = false;
  Table tb({"property", "outcome", "bound", "note"});
  for (auto s : scopes)
    for (const auto& p : all_properties(s)) {
      Verdict v = A.check(p);
      unknown |= !v.decided();
      props[to_string(p)] = to_json(v);
      tb.add({to_string(p), to_string(v.outcome), v.bound ? std::to_string(*v.bound) : "", v.note});
    }
  json j = head(t);
  j["cap"] = cap;
  j["scoped"] = A.scoped();
  j["properties"] = props;
  Elasticity el = A.elasticity();
  j["elasticity"] = to_json(el);
  emit(o, j, [&](std::ostream& os) {
    tb.print(os);
    os << "elasticity: " << to_string(el.kind);
    if (el.kind == Elasticity::Kind::Finite) os << " " << el.value.to_string();
    os << '\n';
  });
  return o.strict && unknown ? kCapExhausted : kOk;
}

void print_summary(std::ostream& os, const TheoremSummary& s) {
  Table tb({"verified", "inapplicable", "violated", "skipped", "informational"});
  tb.add({std::to_string(s.verified), std::to_string(s.inapplicable), std::to_string(s.violated),
          std::to_string(s.skipped), std::to_string(s.informational)});
  tb.print(os);
}

int status(const Options& o, const TheoremSummary& s) {
  if (s.violated) return kViolated;
  return o.strict && s.skipped ? kCapExhausted : kOk;
}

int cmd_verify(const Options& o) {
  Corpus corpus = generate_corpus(load_corpus_spec(o.corpus));
  TheoremReport rep = verify_theorems(corpus, o.jobs, o.only);
  emit(o, to_json(rep), [&](std::ostream& os) {
    os << corpus.entries.size() << " entries, " << corpus.ring_count << " rings, " << corpus.element_total
       << " elements\n";
    std::map<std::string, TheoremSummary> fam;
    for (const auto& r : rep.entries) fam[r.theorem].add(r.outcome);
    Table tb({"theorem", "verified", "inapplicable", "violated", "skipped", "informational"});
    for (const auto& n : theorem_names()) {
      if (!fam.count(n)) continue;
      const auto& s = fam[n];
      tb.add({n, std::to_string(s.verified), std::to_string(s.inapplicable), std::to_string(s.violated),
              std::to_string(s.skipped), std::to_string(s.informational)});
    }
    tb.print(os);
    os << '\n';
    print_summary(os, rep.summary);
    for (const auto& r : rep.entries)
      if (r.outcome == TheoremOutcome::Violated)
        os << "VIOLATED " << r.ring << " " << r.tau << " " << r.theorem << " " << r.instance << " "
           << r.witness.dump() << '\n';
  });
  return status(o, rep.summary);
}

int cmd_catalog(const Options& o) {
  json cat = build_catalog(load_corpus_spec(o.corpus), o.jobs);
  std::ofstream out(o.out);
  if (!out) throw SpecError("cannot write " + o.out);
  out << cat.dump(2) << '\n';
  out.close();
  if (!out) throw SpecError("cannot write " + o.out);
  TheoremSummary s = summary_from_json(cat);
  json j{{"schema", 1}, {"out", o.out}, {"metadata", cat["metadata"]}, {"summary", cat["summary"]}};
  emit(o, j, [&](std::ostream& os) {
    os << "wrote " << o.out << " (" << cat["entries"].size() << " entries)\n";
    print_summary(os, s);
  });
  return status(o, s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"taufact: tau-factorization in commutative rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "human-readable tables instead of JSON");
  app.add_flag("--strict", o.strict, "exit 3 when a search runs out of cap");

  auto element_args = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "Z | Zn(n) | GFq(p,[f0,..]) | prod(A,B)")->required();
    sub->add_option("--tau", o.tau, "full | empty | zero | comax | regular | subset[..] | regcap(..)")->required();
    sub->add_option("--element", o.element, "element, e.g. 12, (2,0), [1,1]")->required();
    sub->add_option("--cap", o.cap, "factorization length cap")->check(CLI::Range(2, 64));
  };
  auto* classify_cmd = app.add_subcommand("classify", "irreducibility profile of an element");
  element_args(classify_cmd);
  auto* fact_cmd = app.add_subcommand("factorizations", "tau-factorizations up to rearrangement and beta");
  element_args(fact_cmd);
  fact_cmd->add_option("--beta", o.beta, "associate | strong | verystrong");
  auto* ufact_cmd = app.add_subcommand("ufact", "U-factorizations of every tau-factorization");
  element_args(ufact_cmd);

  auto* prop_cmd = app.add_subcommand("properties", "ring-level factorization properties");
  prop_cmd->add_option("--ring", o.ring)->required();
  prop_cmd->add_option("--tau", o.tau)->required();
  prop_cmd->add_option("--scope", o.scope, "plain | regular | regcap | regcap-u | all");
  prop_cmd->add_option("--range", o.range, "infinite rings: components with |x| in LO:HI");
  prop_cmd->add_option("--sample", o.samples, "infinite rings: extra scope element (repeatable)");
  prop_cmd->add_option("--cap", o.cap)->check(CLI::Range(2, 64));

  auto* verify_cmd = app.add_subcommand("verify", "check every theorem over a corpus");
  verify_cmd->add_option("--corpus", o.corpus, "corpus file, catalog file or 'default'");
  verify_cmd->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256));
  verify_cmd->add_option("--only", o.only, "restrict to a theorem family (repeatable)");

  auto* catalog_cmd = app.add_subcommand("catalog", "write a JSON catalog of a corpus");
  catalog_cmd->add_option("--corpus", o.corpus, "corpus file or 'default'");
  catalog_cmd->add_option("--out", o.out, "output file")->required();
  catalog_cmd->add_option("--jobs", o.jobs)->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*fact_cmd) return cmd_factorizations(o);
    if (*ufact_cmd) return cmd_ufact(o);
    if (*prop_cmd) return cmd_properties(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*catalog_cmd) return cmd_catalog(o);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
