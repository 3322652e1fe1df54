#pragma once

#include <vector>

#include "taufact/corpus.hpp"
#include "taufact/ring.hpp"

namespace test_support {

/// Distinct finite rings of the default corpus with at most `max_order`
/// elements, in corpus order.
inline std::vector<taufact::RingSpec> finite_corpus_rings(std::uint64_t max_order = 36) {
  std::vector<taufact::RingSpec> out;
  for (const auto& e : taufact::generate_corpus(taufact::CorpusSpec::default_spec()).entries) {
    if (!e.ring.finite()) continue;
    if (taufact::Ring::build(e.ring).order() > max_order) continue;
    bool seen = false;
    for (const auto& r : out) seen = seen || r == e.ring;
    if (!seen) out.push_back(e.ring);
  }
  return out;
}

/// The seven default tau specs.
inline std::vector<taufact::TauSpec> default_taus() {
  using taufact::TauSpec;
  return {TauSpec::full(),    TauSpec::empty(),
          TauSpec::zero_product(), TauSpec::comaximal(),
          TauSpec::regular(), TauSpec::reg_cap(TauSpec::full()),
          TauSpec::reg_cap(TauSpec::comaximal())};
}

}  // namespace test_support
