#pragma once

#include <json.hpp>

#include "bicircle/classify.hpp"
#include "bicircle/pythagorean.hpp"
#include "bicircle/splitting.hpp"
#include "bicircle/surface.hpp"

namespace bicircle {

using Json = nlohmann::json;

// Rationals travel as "num/den" strings, quaternions as arrays of four
// rational strings, polynomials as term lists.

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json quat_to_json(const Quat& q);
Quat quat_from_json(const Json& j);

Json qpoly_to_json(const QPoly2& p);
QPoly2 qpoly_from_json(const Json& j);

Json rpoly_to_json(const RPolyN& p);
RPolyN rpoly_from_json(const Json& j, int nvars);

Json curve_to_json(const MoebiusCurve& m);
MoebiusCurve curve_from_json(const Json& j);

Json spec_to_json(const SurfaceSpec& spec);
SurfaceSpec spec_from_json(const Json& j);

Json implicit_to_json(const ImplicitQuartic& f);
ImplicitQuartic implicit_from_json(const Json& j);

Json split_to_json(const SplitResult& s);

Json tuple_to_json(const PythTuple& t);
PythTuple tuple_from_json(const Json& j);

Json classification_to_json(const Classification& c);

Json error_to_json(const error& e);

} // namespace bicircle
