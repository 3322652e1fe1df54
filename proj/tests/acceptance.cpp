// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracle.hpp"
#include "support.hpp"
#include "taufact/factorization.hpp"
#include "taufact/irreducibility.hpp"
#include "taufact/properties.hpp"
#include "taufact/text.hpp"
#include "taufact/theorems.hpp"

using namespace taufact;

namespace {

using K = PropertyKind;
using I = IrreducibleKind;
using B = AssociateKind;

struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool c, const std::string& what) {
    if (!c && ok) why << what;
    ok = ok && c;
  }
};

int failures = 0;

void run(int id, const char* name, const std::function<void(Check&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %d %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, name, secs, c.ok ? "" : ": ",
              c.why.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

Ring ring(const char* s) { return Ring::build(parse_ring_spec(s)); }
TauRelation tau(const Ring& R, const char* s) { return TauRelation::build(parse_tau_spec(R, s), R); }
PropertyId pid(K k, Scope s = Scope::Plain, I a = I::Irreducible, B b = B::Associate) { return {k, a, b, s}; }

std::set<CanonicalKey> keys(const FactorizationSet& s) {
  std::set<CanonicalKey> out;
  for (const auto& it : s.items) out.insert(it.key);
  return out;
}

void families(Check& c, const TheoremReport& r, std::initializer_list<const char*> names, std::size_t min_verified) {
  for (const char* n : names) {
    std::size_t verified = 0, violated = 0;
    for (const auto& e : r.entries) {
      if (e.theorem != n) continue;
      verified += e.outcome == TheoremOutcome::Verified;
      if (e.outcome == TheoremOutcome::Violated) {
        if (violated++ == 0) c.expect(false, std::string(n) + " violated at " + e.ring + " / " + e.tau + " / " + e.instance);
      }
    }
    c.expect(verified >= min_verified, std::string(n) + " has too few verified instances");
  }
}

}  // namespace

int main() {
  Corpus corpus = generate_corpus(CorpusSpec::default_spec());
  TheoremReport report;
  std::string first_dump;

  run(1, "oracle equivalence on finite rings up to 36 elements", [&](Check& c) {
    std::size_t compared = 0;
    for (const auto& spec : test_support::finite_corpus_rings(36)) {
      Ring R = Ring::build(spec);
      oracle::Ring O(spec);
      for (const auto& ts : test_support::default_taus()) {
        auto t = TauRelation::build(ts, R);
        auto all = oracle::factorizations(O, ts, 5);
        for (int a = 0; a < O.size(); ++a) {
          if (O.unit[a]) continue;
          for (auto beta : kAllAssociateKinds) {
            std::set<CanonicalKey> want;
            for (const auto& m : all[a]) want.insert(oracle::key(O, m, beta));
            bool same = keys(enumerate_factorizations(t, O.e[a], beta, 5)) == want;
            c.expect(same, spec.to_string() + " " + ts.to_string() + " at " + format_element(O.e[a]));
            ++compared;
          }
        }
      }
    }
    c.expect(compared > 0, "nothing compared");
  });

  run(2, "irreducibility hierarchy over the default corpus", [&](Check& c) {
    report = verify_theorems(corpus, 1);
    first_dump = to_json(report).dump(2);
    families(c, report, {"irreducible-hierarchy"}, 6 * 300);
  });

  run(3, "regular atom conditions on Z and Z x Z", [&](Check& c) {
    families(c, report, {"regular-atom-conditions"}, 1);
    std::size_t tested = 0;
    for (const char* r : {"Z", "prod(Z,Z)"}) {
      for (const auto& e : corpus.entries) {
        if (e.ring_text() != r || e.tau_text() != "full") continue;
        Ring R = Ring::build(e.ring);
        auto t = TauRelation::build(e.tau, R);
        for (const auto& a : *e.scope) {
          if (!R.in_r_sharp(a) || !R.is_regular(a)) continue;
          auto rep = tau_r_atom(t, a, e.cap);
          bool agree = rep.decided();
          for (auto x : rep.conditions) agree = agree && x == rep.is_atom();
          c.expect(agree, std::string(r) + " at " + format_element(a));
          ++tested;
        }
      }
    }
    c.expect(tested >= 500, "only " + std::to_string(tested) + " regular non-units");
  });

  run(4, "regular finite-factorization equivalence", [&](Check& c) {
    families(c, report, {"regular-ffr-equivalence"}, 1);
  });

  run(5, "tau_reg transfer families", [&](Check& c) {
    families(c, report, {"treg-regular-atoms", "treg-zero-divisors", "treg-atomic", "treg-transfer"}, 1);
  });

  run(6, "U-factorization bijection", [&](Check& c) {
    families(c, report, {"u-bijection", "treg-u-transfer"}, 1);
  });

  run(7, "F_q x F_q under regcap(full)", [&](Check& c) {
    for (int q : {3, 5, 7}) {
      std::string rs = "prod(Zn(" + std::to_string(q) + "),Zn(" + std::to_string(q) + "))";
      Ring R = ring(rs.c_str());
      auto t = tau(R, "regcap(full)");
      Analyzer A(t, std::nullopt, 5);
      c.expect(A.domain(Scope::RegularElements).empty(), rs + ": regular non-units exist");
      for (auto a : kAllIrreducibleKinds)
        for (auto b : kAllAssociateKinds) {
          auto v = A.check(pid(K::UFR, Scope::RegularElements, a, b));
          c.expect(v.holds() && v.note.find("vacuous") != std::string::npos, rs + ": r-UFR not vacuous");
        }
      Element e10 = Element::pair(Element(1), Element(0));
      auto p = classify(t, e10, 5);
      c.expect(p[I::Unrefinable] == Tri::True, rs + ": (1,0) not unrefinable");
      c.expect(p[I::VeryStrong] == Tri::False, rs + ": (1,0) very strong");

      std::vector<Factorization> triv;
      for (int mu = 1; mu < q; ++mu) {
        std::int64_t inv = 1;
        while (inv * mu % q != 1) ++inv;
        Factorization f{Element::pair(Element(inv), Element(1)), {Element::pair(Element(mu), Element(0))}, e10};
        c.expect(is_tau_factorization(t, f), rs + ": bad trivial factorization");
        triv.push_back(f);
      }
      c.expect(static_cast<int>(triv.size()) == q - 1, rs + ": count");
      for (std::size_t i = 0; i < triv.size(); ++i)
        for (std::size_t j = i + 1; j < triv.size(); ++j) {
          c.expect(canonicalize(R, triv[i], B::VeryStrongAssociate) != canonicalize(R, triv[j], B::VeryStrongAssociate),
                   rs + ": very strongly associate pair");
          c.expect(canonicalize(R, triv[i], B::StrongAssociate) == canonicalize(R, triv[j], B::StrongAssociate),
                   rs + ": not strongly associate");
        }
      c.expect(enumerate_factorizations(t, e10, B::VeryStrongAssociate, 5).items.size() == static_cast<std::size_t>(q - 1),
               rs + ": very strong class count");
      c.expect(enumerate_factorizations(t, e10, B::StrongAssociate, 5).items.size() == 1, rs + ": strong class count");
    }
  });

  run(8, "Z_6 strictness witnesses", [&](Check& c) {
    Ring z6 = ring("Zn(6)");
    auto t = tau(z6, "full");
    Analyzer A(t, std::nullopt, 5);
    c.expect(A.check(pid(K::WFFR)).holds(), "WFFR");
    auto ffr = A.check(pid(K::FFR));
    c.expect(ffr.fails() && ffr.witness["pump"]["word"] == nlohmann::json::array({4}), "FFR pump");
    auto p = classify(t, Element(2), 8);
    c.expect(p[I::Irreducible] == Tri::True && p[I::Strong] == Tri::True && p[I::M] == Tri::True, "2 flags");
    c.expect(p[I::Unrefinable] == Tri::False && p[I::VeryStrong] == Tri::False, "2 negative flags");
  });

  run(9, "integers with the full relation", [&](Check& c) {
    Ring Z = ring("Z");
    auto t = tau(Z, "full");
    auto fs = enumerate_factorizations(t, Element(12), B::Associate, 10);
    std::set<std::vector<std::int64_t>> got;
    for (const auto& it : fs.items) {
      std::vector<std::int64_t> v;
      for (const auto& k : it.key) v.push_back(k.rep.value);
      got.insert(v);
    }
    c.expect(got == std::set<std::vector<std::int64_t>>{{12}, {2, 6}, {3, 4}, {2, 2, 3}}, "classes of 12");
    std::vector<Element> scope;
    for (int i = 2; i <= 100; ++i) scope.emplace_back(i);
    Analyzer A(t, scope, 10);
    auto el = A.elasticity();
    c.expect(el.kind == Elasticity::Kind::Finite && el.value == Rational::of(1, 1), "elasticity");
    for (auto a : kAllIrreducibleKinds) c.expect(A.check(pid(K::UFR, Scope::Plain, a)).holds(), "UFR");
  });

  run(10, "deterministic reports", [&](Check& c) {
    c.expect(to_json(verify_theorems(corpus, 1)).dump(2) == first_dump, "reports differ");
  });

  return failures ? 1 : 0;
}
