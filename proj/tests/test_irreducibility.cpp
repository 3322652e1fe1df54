#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "support.hpp"
#include "taufact/errors.hpp"
#include "taufact/irreducibility.hpp"
#include "taufact/text.hpp"

using namespace taufact;

namespace {

Ring ring(const char* s) { return Ring::build(parse_ring_spec(s)); }
TauRelation tau(const Ring& R, const char* s) { return TauRelation::build(parse_tau_spec(R, s), R); }
Element el(const Ring& R, const char* s) { return parse_element(R, s); }

using I = IrreducibleKind;

void check_hierarchy(const IrreducibilityProfile& p, bool strongly_associate) {
  auto arrow = [&](I a, I b) {
    if (p[a] == Tri::True && p[b] != Tri::Unknown) CHECK(p[b] == Tri::True);
  };
  arrow(I::VeryStrong, I::Unrefinable);
  arrow(I::Unrefinable, I::Strong);
  arrow(I::Strong, I::Irreducible);
  arrow(I::M, I::Irreducible);
  if (strongly_associate) arrow(I::M, I::Strong);
}

}  // namespace

TEST_CASE("profiles from the definitions") {
  Ring z6 = ring("Zn(6)");
  auto p = classify(tau(z6, "full"), el(z6, "2"), 8);
  CHECK(p[I::Irreducible] == Tri::True);
  CHECK(p[I::Strong] == Tri::True);
  CHECK(p[I::M] == Tri::True);
  CHECK(p[I::Unrefinable] == Tri::False);
  CHECK(p[I::VeryStrong] == Tri::False);

  // No nontrivial zero-product factorization of 2 exists, but 2 = 4 * 2.
  auto z = classify(tau(z6, "zero"), el(z6, "2"), 8);
  CHECK(z[I::Irreducible] == Tri::True);
  CHECK(z[I::Strong] == Tri::True);
  CHECK(z[I::M] == Tri::True);
  CHECK(z[I::Unrefinable] == Tri::True);
  CHECK(z[I::VeryStrong] == Tri::False);

  Ring f3 = ring("prod(Zn(3),Zn(3))");
  auto e = classify(tau(f3, "regcap(full)"), el(f3, "(1,0)"), 8);
  CHECK(e[I::Unrefinable] == Tri::True);
  CHECK(e[I::VeryStrong] == Tri::False);
}

TEST_CASE("regular atom conditions") {
  Ring zz = ring("prod(Z,Z)");
  auto a = tau_r_atom(tau(zz, "full"), el(zz, "(2,1)"), 10);
  CHECK(a.is_atom() == Tri::True);
  for (auto c : a.conditions) CHECK(c == Tri::True);
  auto b = tau_r_atom(tau(zz, "full"), el(zz, "(4,1)"), 10);
  CHECK(b.is_atom() == Tri::False);
  for (auto c : b.conditions) CHECK(c == Tri::False);
  Ring Z = ring("Z");
  CHECK(tau_r_atom(tau(Z, "full"), el(Z, "7"), 10).is_atom() == Tri::True);
  CHECK_THROWS_AS(tau_r_atom(tau(zz, "full"), el(zz, "(0,1)"), 10), PreconditionError);
  CHECK_THROWS_AS(tau_r_atom(tau(Z, "full"), el(Z, "-1"), 10), PreconditionError);
}

TEST_CASE("flags agree with the oracle on small rings") {
  for (const auto& spec : test_support::finite_corpus_rings(16)) {
    Ring R = Ring::build(spec);
    oracle::Ring O(spec);
    bool sa = R.predicates().strongly_associate;
    for (const auto& ts : test_support::default_taus()) {
      CAPTURE(spec.to_string());
      CAPTURE(ts.to_string());
      auto t = TauRelation::build(ts, R);
      auto all = oracle::factorizations(O, ts, 6);
      for (int a = 0; a < O.size(); ++a) {
        if (O.unit[a]) continue;
        CAPTURE(format_element(O.e[a]));
        auto p = classify(t, O.e[a], 6);
        auto want = oracle::flags(O, a, all[a]);
        for (int f = 0; f < 5; ++f) {
          REQUIRE(p.flags[f] != Tri::Unknown);
          CHECK((p.flags[f] == Tri::True) == want[f]);
        }
        check_hierarchy(p, sa);
      }
    }
  }
}

TEST_CASE("hierarchy on random integer pairs") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::int64_t> d(-30, 30);
  Ring zz = ring("prod(Z,Z)");
  for (const char* ts : {"full", "comax", "regular", "regcap(comax)", "zero"}) {
    auto t = tau(zz, ts);
    for (int it = 0; it < 40; ++it) {
      Element a = Element::pair(Element(d(rng)), Element(d(rng)));
      if (!zz.in_r_sharp(a) || !zz.is_regular(a)) continue;
      auto p = classify(t, a, 10);
      check_hierarchy(p, true);
      auto r = tau_r_atom(t, a, 10);
      if (r.decided())
        for (auto c : r.conditions) CHECK(c == r.is_atom());
    }
  }
}
