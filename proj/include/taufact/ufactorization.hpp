#pragma once

#include <vector>

#include <json.hpp>

#include "taufact/factorization.hpp"

namespace taufact {

/// target = unit * prod(inessential) * prod(essential). Both blocks are
/// kept sorted, so equality is equality up to rearrangement within blocks.
struct UFactorization {
  Element unit;
  std::vector<Element> inessential;
  std::vector<Element> essential;
  Element target;

  friend bool operator==(const UFactorization&, const UFactorization&) = default;
  friend auto operator<=>(const UFactorization& a, const UFactorization& b) {
    if (auto c = a.inessential <=> b.inessential; c != 0) return c;
    return a.essential <=> b.essential;
  }
};

nlohmann::json to_json(const UFactorization& u);

/// Checks the product and both partition conditions.
bool is_u_factorization(const Ring& R, const UFactorization& u);

/// Every split of f's factors into an inessential block and a nonempty
/// essential block satisfying the two conditions, deduplicated and sorted.
std::vector<UFactorization> u_partitions(const Ring& R, const Factorization& f);

/// Flattens; throws DomainError when the inessential block is not empty.
Factorization phi(const UFactorization& u);

/// unit ceil(factors); throws DomainError naming a factor that fails the
/// essential condition.
UFactorization phi_inverse(const Ring& R, const Factorization& f);

}  // namespace taufact
