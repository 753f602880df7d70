#pragma once

// Manifold files:
//   {"name": "CP2", "dimension": 4, "model": <finite CDGA document>,
//    "pontryagin": [{"index": 1, "expression": "3*a^2"}]}

#include "rht/bundle_models.hpp"
#include "rht/cdga_io.hpp"

#include <string>
#include <string_view>

namespace rht {

Json to_json(const ManifoldModel& m);
ManifoldModel manifold_from_json(const Json& doc);
ManifoldModel parse_manifold(std::string_view text);
std::string serialize(const ManifoldModel& m);
ManifoldModel load_manifold(const std::string& path);

}  // namespace rht
