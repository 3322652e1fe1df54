#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "support.hpp"
#include "taufact/errors.hpp"
#include "taufact/text.hpp"
#include "taufact/ufactorization.hpp"

using namespace taufact;

namespace {

Ring ring(const char* s) { return Ring::build(parse_ring_spec(s)); }
TauRelation tau(const Ring& R, const char* s) { return TauRelation::build(parse_tau_spec(R, s), R); }
Element el(const Ring& R, const char* s) { return parse_element(R, s); }

std::vector<Element> els(const Ring& R, std::initializer_list<const char*> xs) {
  std::vector<Element> out;
  for (auto x : xs) out.push_back(el(R, x));
  return out;
}

}  // namespace

TEST_CASE("partitions of 2 = 2 * 4 in Z_6") {
  Ring z6 = ring("Zn(6)");
  Factorization f = make_factorization(z6, el(z6, "2"), els(z6, {"2", "4"}));
  auto us = u_partitions(z6, f);
  REQUIRE(us.size() == 2);
  CHECK(us[0].inessential == els(z6, {"2"}));
  CHECK(us[0].essential == els(z6, {"4"}));
  CHECK(us[1].inessential == els(z6, {"4"}));
  CHECK(us[1].essential == els(z6, {"2"}));
  for (const auto& u : us) CHECK(is_u_factorization(z6, u));
  CHECK_THROWS_AS(phi_inverse(z6, f), DomainError);
  CHECK_THROWS_AS(phi(us[0]), DomainError);
}

TEST_CASE("trivial factorizations have one partition") {
  for (const char* r : {"Zn(12)", "prod(Zn(2),Zn(4))", "Z"}) {
    Ring R = ring(r);
    Element x = R.finite() ? R.elements()[2] : el(R, "10");
    if (!R.in_r_sharp(x)) continue;
    auto us = u_partitions(R, make_factorization(R, x, {x}));
    REQUIRE(us.size() == 1);
    CHECK(us[0].inessential.empty());
    CHECK(us[0].essential == std::vector<Element>{x});
  }
}

TEST_CASE("regular factorizations are all essential") {
  Ring zz = ring("prod(Z,Z)");
  Factorization f = make_factorization(zz, el(zz, "(6,1)"), els(zz, {"(2,1)", "(3,1)"}));
  auto us = u_partitions(zz, f);
  REQUIRE(us.size() == 1);
  CHECK(us[0].inessential.empty());
  CHECK(us[0].essential == f.factors);
  auto u = phi_inverse(zz, f);
  CHECK(u == us[0]);
  CHECK(phi(u) == f);

  Ring z6 = ring("Zn(6)");
  Factorization t{el(z6, "5"), {el(z6, "2")}, el(z6, "4")};
  auto ut = phi_inverse(z6, t);
  CHECK(ut.unit == el(z6, "5"));
  CHECK(ut.essential == els(z6, {"2"}));
}

TEST_CASE("partitions agree with a brute-force split on small rings") {
  for (const auto& spec : test_support::finite_corpus_rings(12)) {
    Ring R = Ring::build(spec);
    oracle::Ring O(spec);
    auto t = TauRelation::build(TauSpec::full(), R);
    auto all = oracle::factorizations(O, TauSpec::full(), 4);
    for (const auto& [target, set] : all) {
      if (target == O.zero) continue;
      for (const auto& m : set) {
        std::vector<Element> xs;
        for (int i : m) xs.push_back(O.e[i]);
        auto f = make_factorization(R, O.e[target], xs);
        std::set<std::pair<oracle::Multiset, oracle::Multiset>> want;
        for (unsigned mask = 1; mask < (1u << m.size()); ++mask) {
          oracle::Multiset ines, ess;
          for (std::size_t i = 0; i < m.size(); ++i) (mask >> i & 1u ? ess : ines).push_back(m[i]);
          if (oracle::u_valid(O, ines, ess)) want.insert({ines, ess});
        }
        std::set<std::pair<oracle::Multiset, oracle::Multiset>> got;
        for (const auto& u : u_partitions(R, f)) {
          CHECK(is_u_factorization(R, u));
          oracle::Multiset ines, ess;
          for (const auto& x : u.inessential) ines.push_back(O.index(x));
          for (const auto& x : u.essential) ess.push_back(O.index(x));
          got.insert({ines, ess});
        }
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("phi round trip on random regular factorizations of Z x Z") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::int64_t> d(2, 9);
  std::uniform_int_distribution<int> len(1, 4);
  Ring zz = ring("prod(Z,Z)");
  auto t = tau(zz, "regcap(full)");
  for (int it = 0; it < 300; ++it) {
    std::vector<Element> xs;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      // Each factor is a non-unit in one coordinate at least.
      std::int64_t a = d(rng), b = rng() % 3 ? 1 : d(rng);
      xs.push_back(rng() % 2 ? Element::pair(Element(a), Element(b)) : Element::pair(Element(b), Element(a)));
    }
    Element target = zz.one();
    for (const auto& x : xs) target = zz.mul(target, x);
    auto f = make_factorization(zz, target, xs);
    REQUIRE(is_tau_factorization(t, f));
    auto us = u_partitions(zz, f);
    REQUIRE(us.size() == 1);
    CHECK(us[0].inessential.empty());
    CHECK(phi(phi_inverse(zz, f)) == f);
    CHECK(phi_inverse(zz, phi(us[0])) == us[0]);
  }
}
