#pragma once

// Text and JSON encodings of ring specs and elements.
//
//   ring:    Z | Zn(6) | GFq(2,[1,1,1]) | prod(<ring>,<ring>)
//   element: 5 | -3 | [1,0] (polynomial coefficients, low to high) | (a,b) or [a,b] (pair)

#include <string>
#include <string_view>

#include <json.hpp>

#include "taufact/ring.hpp"

namespace taufact {

/// Throws SpecError with a "at position N" annotation on malformed input.
RingSpec parse_ring_spec(std::string_view text);

/// Parses an element against the shape of `ring` and validates it.
Element parse_element(const Ring& ring, std::string_view text);

/// Ring-independent rendering: integers, [c0,c1,..], (l,r).
std::string format_element(const Element& e);

nlohmann::json element_to_json(const Element& e);
Element element_from_json(const Ring& ring, const nlohmann::json& j);

}  // namespace taufact
