#pragma once

#include <json.hpp>
#include <string>

#include "complex.hpp"
#include "ring.hpp"

namespace ts {

using Json = nlohmann::json;

// Text formats. Rings: {base, window, basis, unit, mult} with mult rows
// {left, right, result}. Complexes: {ring?, generators, differential} with
// differential rows {target, source, value} referencing generators by name.
// Morphisms add degree and carry source/target inline. Ring element values
// are arrays of {name, coeff}; coefficients are numbers over a prime field
// and fraction strings over the rationals. Omitted rows mean zero
// everywhere. canonical_text() of a parsed document reproduces the original
// bytes, so round trips are exact.

Json ring_to_json(const BigradedRing& ring);
RingPtr ring_from_json(const Json& j);

// A ring position in a document: an inline ring object, "builtin:NAME", or
// the path of a ring file.
RingPtr ring_from_spec(const Json& spec);

Json complex_to_json(const TateComplex& M, bool include_ring = true);
// ambient supplies the ring when the document has no "ring" field.
TateComplex complex_from_json(const Json& j, RingPtr ambient = nullptr);

Json morphism_to_json(const GradedMorphism& f, bool include_ring = true);
GradedMorphism morphism_from_json(const Json& j, RingPtr ambient = nullptr);

std::string canonical_text(const Json& j);
Json parse_text(const std::string& text);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace ts
