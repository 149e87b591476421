#pragma once

#include "grl/constructions.hpp"
#include "grl/graded_algebra.hpp"
#include "grl/groupoid.hpp"

#include <json.hpp>

namespace grl {

using json = nlohmann::ordered_json;

json field_to_json(const FieldDesc& f);
FieldDesc field_from_json(const json& j);

json groupoid_to_json(const Groupoid& g);
Groupoid groupoid_from_json(const json& j);

json algebra_to_json(const GradedAlgebra& a);
GradedAlgebra algebra_from_json(const json& j);

json skew_system_to_json(const SkewSystem& sys);
SkewSystem skew_system_from_json(const json& j);

json crossed_system_to_json(const CrossedSystem& sys);
CrossedSystem crossed_system_from_json(const json& j);

json subspace_to_json(const Subspace& s);
json report_to_json(const ValidationReport& r);

// Byte-stable rendering: fixed key order, two-space indent, trailing newline.
std::string dump_stable(const json& j);

}  // namespace grl
