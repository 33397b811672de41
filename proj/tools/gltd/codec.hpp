#ifndef GLTD_TOOLS_CODEC_HPP
#define GLTD_TOOLS_CODEC_HPP

// JSON wire format of the gltd tool. Rationals are strings "p/q" in lowest
// terms ("p" for integers); every list is emitted in canonical order and
// object keys are sorted, so equal values serialize to identical bytes.
//
// Decoders throw gltd::Error(ParseError) on malformed documents and let
// library validation errors (LabelMismatch, InvalidComponent, ...) through.

#include <json.hpp>

#include "gltd/ktheory.hpp"
#include "gltd/langlands_maps.hpp"

namespace gltd::codec {

using json = nlohmann::json;

json to_json(const Rational& x);
Rational rational_from_json(const json& j);

json to_json(const Component& c);
Component component_from_json(const json& j);

json to_json(const RealPoint& p);
json to_json(const ComplexPoint& p);
json to_json(const TemperedPoint& p);
TemperedPoint point_from_json(const json& j);

json to_json(const LParameter& p);
LParameter lparameter_from_json(const json& j);

json to_json(const KClass& x);
KClass kclass_from_json(const json& j);

json to_json(const RepRingElement& x);
RepRingElement repring_from_json(const json& j);

} // namespace gltd::codec

#endif // GLTD_TOOLS_CODEC_HPP
