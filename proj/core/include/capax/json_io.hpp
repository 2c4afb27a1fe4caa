#pragma once

/// JSON encodings of the domain values:
///   rational        "p/q" (or "p"), infinity "inf"
///   ellipsoid       ["p/q", "inf", ...]
///   toric profile   {"kind": "concave"|"convex", "vertices": [["p/q","r/s"], ...]}
///   ratio           {"nth_power": "p/q", "n": n, "approx": float}
/// plus report objects for the verifiers. Ordered maps keep output
/// byte-stable across runs.

#include "capax/ellipsoid.hpp"
#include "capax/optimize.hpp"
#include "capax/ratio.hpp"
#include "capax/toric.hpp"

#include <json.hpp>

namespace capax {

using Json = nlohmann::ordered_json;

Json to_json(const Ellipsoid& e);
Ellipsoid ellipsoid_from_json(const Json& j);

Json to_json(const ToricProfile& p);
ToricProfile profile_from_json(const Json& j);

Json to_json(const RatioValue& r);
RatioValue ratio_from_json(const Json& j);

Json to_json(const SpectrumEntry& entry);
Json to_json(const MaximizerReport& report);
Json to_json(const ConvexSweepReport& report);
Json to_json(const GridSpec& grid);

}  // namespace capax
