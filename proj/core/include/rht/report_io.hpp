#pragma once

// JSON and plain-text renderings of immersion reports. Field order is fixed:
// manifold, dimension, k, max_degree, hypotheses, connectivity, factors,
// series, growth.

#include "rht/cdga_io.hpp"
#include "rht/immersion.hpp"

#include <string>
#include <string_view>

namespace rht {

/// Integers that fit in 64 bits are JSON numbers, larger ones strings.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& v, const std::string& pointer);

Json to_json(const PoincareSeries& s);
Json to_json(const ImmersionReport& r);
ImmersionReport report_from_json(const Json& doc);
ImmersionReport parse_report(std::string_view text);
std::string serialize(const ImmersionReport& r);

std::string render_table(const ImmersionReport& r);
std::string render_series(const PoincareSeries& s);

}  // namespace rht
