#include "taufact/ufactorization.hpp"

#include <algorithm>
#include <set>

#include "taufact/errors.hpp"
#include "taufact/text.hpp"

namespace taufact {

namespace {

Element product(const Ring& R, const std::vector<Element>& xs) {
  Element p = R.one();
  for (const auto& x : xs) p = R.mul(p, x);
  return p;
}

bool same_ideal(const Ring& R, const Element& x, const Element& y) {
  return R.associated(x, y, AssociateKind::Associate);
}

// (a_i * prod E) = (prod E)
bool inessential_ok(const Ring& R, const Element& x, const Element& pe) { return same_ideal(R, R.mul(x, pe), pe); }

// (b_j * prod(E \ b_j)) != (prod(E \ b_j)), for position j of E.
bool essential_ok(const Ring& R, const std::vector<Element>& E, std::size_t j) {
  std::vector<Element> rest;
  for (std::size_t k = 0; k < E.size(); ++k)
    if (k != j) rest.push_back(E[k]);
  Element pr = product(R, rest);
  return !same_ideal(R, R.mul(E[j], pr), pr);
}

nlohmann::json list(const std::vector<Element>& xs) {
  auto j = nlohmann::json::array();
  for (const auto& x : xs) j.push_back(element_to_json(x));
  return j;
}

}  // namespace

nlohmann::json to_json(const UFactorization& u) {
  return {{"unit", element_to_json(u.unit)},
          {"inessential", list(u.inessential)},
          {"essential", list(u.essential)},
          {"target", element_to_json(u.target)}};
}

bool is_u_factorization(const Ring& R, const UFactorization& u) {
  if (u.essential.empty() || !R.is_unit(u.unit)) return false;
  if (R.mul(R.mul(u.unit, product(R, u.inessential)), product(R, u.essential)) != u.target) return false;
  Element pe = product(R, u.essential);
  for (const auto& x : u.inessential)
    if (!inessential_ok(R, x, pe)) return false;
  for (std::size_t j = 0; j < u.essential.size(); ++j)
    if (!essential_ok(R, u.essential, j)) return false;
  return true;
}

std::vector<UFactorization> u_partitions(const Ring& R, const Factorization& f) {
  const std::size_t n = f.factors.size();
  if (n >= 20) throw PreconditionError("u_partitions: too many factors");
  std::set<UFactorization> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    UFactorization u{f.unit, {}, {}, f.target};
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1u ? u.essential : u.inessential).push_back(f.factors[i]);
    if (out.count(u)) continue;
    Element pe = product(R, u.essential);
    bool ok = std::all_of(u.inessential.begin(), u.inessential.end(),
                          [&](const Element& x) { return inessential_ok(R, x, pe); });
    for (std::size_t j = 0; ok && j < u.essential.size(); ++j) ok = essential_ok(R, u.essential, j);
    if (ok) out.insert(std::move(u));
  }
  return {out.begin(), out.end()};
}

Factorization phi(const UFactorization& u) {
  if (!u.inessential.empty())
    throw DomainError("phi: inessential block is not empty (" + format_element(u.inessential.front()) + ")");
  return Factorization{u.unit, u.essential, u.target};
}

UFactorization phi_inverse(const Ring& R, const Factorization& f) {
  UFactorization u{f.unit, {}, f.factors, f.target};
  for (std::size_t j = 0; j < u.essential.size(); ++j)
    if (!essential_ok(R, u.essential, j))
      throw DomainError("phi_inverse: factor " + format_element(u.essential[j]) + " is not essential");
  return u;
}

}  // namespace taufact
