#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tverberg/geometry.hpp"
#include "tverberg/reduction.hpp"

namespace tverberg {

// Point set:  {"dim": d, "points": [{"id": 1, "coords": ["3/4", 2, "0.5"]}, ...]}
// Partition:  {"parts": [[1, 3], [2, 4]]}
// Coordinates are read from JSON integers, decimal strings or "num/den"
// strings and always written as "num/den" strings.

Scalar scalar_from_json(const nlohmann::json& value);
nlohmann::json scalar_to_json(const Scalar& value);

PointSet point_set_from_json(const nlohmann::json& doc);
nlohmann::json point_set_to_json(const PointSet& points);

IndexedPartition partition_from_json(const nlohmann::json& doc);
nlohmann::json partition_to_json(const IndexedPartition& partition);

/// Point-set fields plus "parts", "t", "gadget_minus_ids", "gadget_plus_ids";
/// the document is readable both as a point set and as a partition.
nlohmann::json reduced_instance_to_json(const ReducedInstance& instance);

/// Throws ParseError when the file is missing or not valid JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// "1/2,3" -> coordinates (1/2, 3).
std::vector<Scalar> parse_coordinate_list(const std::string& text);

}  // namespace tverberg
