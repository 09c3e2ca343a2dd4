#pragma once

#include <json.hpp>

#include "medgeo/cut_cone.hpp"
#include "medgeo/finite_metric.hpp"
#include "medgeo/kernels.hpp"
#include "medgeo/l1_points.hpp"
#include "medgeo/medianization.hpp"
#include "medgeo/walls.hpp"

namespace medgeo {

using json = nlohmann::json;

/// Rationals travel as strings "p" / "p/q"; integer JSON numbers are also
/// accepted on input. Floating-point numbers are rejected: every value in
/// these files is exact.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json metric_to_json(const FiniteMetric& m);
FiniteMetric metric_from_json(const json& j);

json points_to_json(const L1Points& p);
L1Points points_from_json(const json& j);

json walls_to_json(const WallSpace& ws);
WallSpace walls_from_json(const json& j);

json kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const json& j);

json cut_decomposition_to_json(const CutDecomposition& d);
CutDecomposition cut_decomposition_from_json(const json& j, int n);

json farkas_to_json(const FarkasCertificate& c);

json subdivision_to_json(const SubdivisionResult& r);

json medianized_to_json(const MedianizedSpace& ms);

/// Parses a JSON document, mapping parse failures to invalid_input with the
/// byte position.
json parse_json(const std::string& text);
json load_json_file(const std::string& path);

} // namespace medgeo
