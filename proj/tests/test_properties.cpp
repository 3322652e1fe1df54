#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "taufact/errors.hpp"
#include "taufact/irreducibility.hpp"
#include "taufact/properties.hpp"
#include "taufact/text.hpp"

using namespace taufact;

namespace {

Ring ring(const char* s) { return Ring::build(parse_ring_spec(s)); }
TauRelation tau(const Ring& R, const char* s) { return TauRelation::build(parse_tau_spec(R, s), R); }

using K = PropertyKind;
using I = IrreducibleKind;
using B = AssociateKind;

PropertyId pid(K k, Scope s = Scope::Plain, I a = I::Irreducible, B b = B::Associate) { return {k, a, b, s}; }

std::vector<Element> box(std::int64_t lo, std::int64_t hi, bool negatives) {
  std::vector<Element> out;
  for (std::int64_t a = lo; a <= hi; ++a)
    for (std::int64_t b = lo; b <= hi; ++b)
      for (int sa = 0; sa < (negatives ? 2 : 1); ++sa)
        for (int sb = 0; sb < (negatives ? 2 : 1); ++sb)
          out.push_back(Element::pair(Element(sa ? -a : a), Element(sb ? -b : b)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Z_6 full: weakly finite but not finite factorization") {
  Ring z6 = ring("Zn(6)");
  Analyzer A(tau(z6, "full"), std::nullopt, 5);
  auto ffr = A.check(pid(K::FFR));
  REQUIRE(ffr.fails());
  CHECK(ffr.witness["pump"]["word"] == nlohmann::json::array({4}));
  CHECK(A.check(pid(K::WFFR)).holds());
  CHECK(A.check(pid(K::BFR)).fails());
  CHECK(A.check(pid(K::Atomic)).holds());
  auto el = A.elasticity();
  CHECK(el.kind == Elasticity::Kind::UndefinedEmptyScope);
  CHECK_FALSE(A.scoped());
}

TEST_CASE("integers behave like a UFD on a scope") {
  Ring Z = ring("Z");
  std::vector<Element> scope;
  for (int i = 2; i <= 100; ++i) scope.emplace_back(i);
  Analyzer A(tau(Z, "full"), scope, 10);
  CHECK(A.scoped());
  for (auto a : kAllIrreducibleKinds) {
    CHECK(A.check(pid(K::UFR, Scope::Plain, a, B::Associate)).holds());
    CHECK(A.check(pid(K::HFR, Scope::Plain, a)).holds());
  }
  CHECK(A.check(pid(K::BFR)).holds());
  CHECK(A.check(pid(K::ACCP)).holds());
  auto el = A.elasticity();
  CHECK(el.kind == Elasticity::Kind::Finite);
  CHECK(el.value == Rational::of(1, 1));
  CHECK(el.scoped);
  CHECK(el.per_element.size() == scope.size());
}

TEST_CASE("Z x Z full on regular elements") {
  Ring zz = ring("prod(Z,Z)");
  Analyzer A(tau(zz, "full"), box(1, 30, true), 10);
  for (auto a : kAllIrreducibleKinds) CHECK(A.check(pid(K::UFR, Scope::RegularElements, a, B::Associate)).holds());
  Analyzer P(tau(zz, "full"), box(2, 20, false), 10);
  auto el = P.elasticity();
  CHECK(el.kind == Elasticity::Kind::Finite);
  CHECK(el.value == Rational::of(1, 1));
}

TEST_CASE("scope errors") {
  Ring Z = ring("Z");
  CHECK_THROWS_AS(Analyzer(tau(Z, "full"), std::nullopt, 5), UnsupportedError);
  CHECK_THROWS_AS(Analyzer(tau(Z, "full"), std::vector<Element>{Element(0), Element(2)}, 5), PreconditionError);
  CHECK_THROWS_AS(check_property(tau(Z, "full"), pid(K::BFR)), UnsupportedError);
  CHECK_THROWS_AS(parse_scope("everything"), SpecError);
  CHECK(parse_scope("regcap-u") == Scope::RegCapU);
}

TEST_CASE("property ids") {
  CHECK(to_string(pid(K::UFR, Scope::RegCapU, I::M, B::StrongAssociate)) == "ufr(m,strong)@regcap-u");
  CHECK(pid(K::BFR, Scope::Plain, I::M, B::StrongAssociate).normalized() == pid(K::BFR));
  CHECK(pid(K::HFR, Scope::RegularElements, I::VeryStrong).normalized() == pid(K::HFR, Scope::RegularElements));
  std::size_t n = 0;
  for (auto s : kAllScopes) n += all_properties(s).size();
  CHECK(all_properties(Scope::Plain).size() == 48);
  CHECK(all_properties(Scope::RegularElements).size() == 16);
  CHECK(n == 3 * 48 + 16);
}

TEST_CASE("finite-ring verdicts agree with the oracle") {
  for (const auto& spec : test_support::finite_corpus_rings(12)) {
    Ring R = Ring::build(spec);
    oracle::Ring O(spec);
    for (const auto& ts : test_support::default_taus()) {
      CAPTURE(spec.to_string());
      CAPTURE(ts.to_string());
      auto t = TauRelation::build(ts, R);
      Analyzer A(t, std::nullopt, 5);
      auto fs = oracle::factorizations(O, ts, 6);

      auto bfr = A.check(pid(K::BFR));
      REQUIRE(bfr.decided());
      if (bfr.holds()) {
        REQUIRE(bfr.bound);
        for (const auto& [target, set] : fs)
          for (const auto& m : set) CHECK(static_cast<std::int64_t>(m.size()) <= *bfr.bound);
      } else {
        Element w = element_from_json(R, bfr.witness["element"]);
        auto fset = enumerate_factorizations(t, w, B::Associate, 5);
        REQUIRE(fset.pump);
        CHECK(is_tau_factorization(t, fset.pump->pumped(R, 7)));
      }

      // Atomic(alpha) from oracle flags over length <= 6.
      std::vector<std::array<bool, 5>> flags(O.size());
      for (int a = 0; a < O.size(); ++a)
        if (!O.unit[a]) flags[a] = oracle::flags(O, a, fs[a]);
      for (auto alpha : kAllIrreducibleKinds) {
        bool atomic = true;
        for (int a = 0; a < O.size(); ++a) {
          if (O.unit[a]) continue;
          bool found = false;
          for (const auto& m : fs[a]) {
            bool all = true;
            for (int x : m) all = all && flags[x][static_cast<int>(alpha)];
            found = found || all;
          }
          atomic = atomic && found;
        }
        auto v = A.check(pid(K::Atomic, Scope::Plain, alpha));
        REQUIRE(v.decided());
        CHECK(v.holds() == atomic);
      }
    }
  }
}

TEST_CASE("elasticity law on finite rings") {
  for (const auto& spec : test_support::finite_corpus_rings(36)) {
    Ring R = Ring::build(spec);
    for (const auto& ts : test_support::default_taus()) {
      Analyzer A(TauRelation::build(ts, R), std::nullopt, 5);
      auto el = A.elasticity();
      // Finite rings have no regular non-units.
      CHECK(el.kind == Elasticity::Kind::UndefinedEmptyScope);
      CHECK(A.domain(Scope::RegularElements).empty());
    }
  }
}
