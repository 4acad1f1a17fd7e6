#pragma once

#include <json.hpp>

#include "richfan/cone.hpp"
#include "richfan/graph.hpp"
#include "richfan/ideal.hpp"
#include "richfan/monoid.hpp"
#include "richfan/subdivision.hpp"
#include "richfan/svg.hpp"
#include "richfan/tropical.hpp"

namespace richfan::io {

using nlohmann::json;

// Readers throw MalformedInput when the document does not fit the schema.
// Semantic problems (a length outside its monoid, say) keep their own codes.

TropicalGraph graph_from_json(const json& j);
json to_json(const TropicalGraph& g);

SharpMonoid monoid_from_json(const json& j);
json to_json(const SharpMonoid& m);

TropicalCurve curve_from_json(const json& j);
json to_json(const TropicalCurve& c);

/// Optional "sigma_lineality" adds lineality generators to σ; "sigma_rank"
/// is needed only when σ has no generators and the length map is empty.
RealFamily family_from_json(const json& j);
json to_json(const RealFamily& f);

Fan fan_from_json(const json& j);
json to_json(const Fan& f);

MonomialIdeal ideal_from_json(const json& j);
json to_json(const MonomialIdeal& i);

CutOrder cut_order_from_json(const json& j, const TropicalGraph& g);
json to_json(const CutOrder& o, const TropicalGraph& g);

json to_json(const CrossSection& cs);

/// Parses text, mapping parse failures to MalformedInput.
json parse(const std::string& text);

}  // namespace richfan::io
