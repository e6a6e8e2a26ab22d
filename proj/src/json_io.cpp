#include "tverberg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tverberg/error.hpp"

namespace tverberg {

using nlohmann::json;

Scalar scalar_from_json(const json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Scalar(value.get<std::uint64_t>()) : Scalar(value.get<std::int64_t>());
  }
  if (value.is_string()) return parse_scalar(value.get<std::string>());
  if (value.is_number_float()) {
    throw ParseError("floating-point coordinate " + value.dump() + "; write it as a decimal or \"num/den\" string");
  }
  throw ParseError("coordinate must be an integer or a string, got " + value.dump());
}

json scalar_to_json(const Scalar& value) { return format_scalar(value); }

PointSet point_set_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points")) {
    throw ParseError("point set needs \"dim\" and \"points\"");
  }
  if (!doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() < 1) {
    throw ParseError("\"dim\" must be a positive integer");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  if (!doc["points"].is_array()) throw ParseError("\"points\" must be an array");

  std::vector<Point> points;
  points.reserve(doc["points"].size());
  for (const auto& entry : doc["points"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry.contains("coords")) {
      throw ParseError("every point needs \"id\" and \"coords\"");
    }
    if (!entry["id"].is_number_integer()) throw ParseError("point id must be an integer");
    if (!entry["coords"].is_array()) throw ParseError("\"coords\" must be an array");
    Point p;
    p.id = entry["id"].get<PointId>();
    for (const auto& c : entry["coords"]) p.coords.push_back(scalar_from_json(c));
    points.push_back(std::move(p));
  }
  return PointSet(dim, std::move(points));
}

json point_set_to_json(const PointSet& points) {
  json list = json::array();
  for (const Point& p : points.points()) {
    json coords = json::array();
    for (const Scalar& c : p.coords) coords.push_back(scalar_to_json(c));
    list.push_back({{"id", p.id}, {"coords", std::move(coords)}});
  }
  return {{"dim", points.dim()}, {"points", std::move(list)}};
}

IndexedPartition partition_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("parts") || !doc["parts"].is_array()) {
    throw ParseError("partition needs a \"parts\" array");
  }
  IndexedPartition partition;
  for (const auto& part : doc["parts"]) {
    if (!part.is_array()) throw ParseError("every part must be an array of ids");
    auto& ids = partition.parts.emplace_back();
    for (const auto& id : part) {
      if (!id.is_number_integer()) throw ParseError("part entries must be integer ids");
      ids.push_back(id.get<PointId>());
    }
  }
  return partition;
}

json partition_to_json(const IndexedPartition& partition) { return {{"parts", partition.parts}}; }

json reduced_instance_to_json(const ReducedInstance& instance) {
  json doc = point_set_to_json(instance.lifted_points);
  doc["parts"] = instance.partition.parts;
  doc["t"] = instance.t;
  doc["gadget_minus_ids"] = instance.gadget_minus_ids;
  doc["gadget_plus_ids"] = instance.gadget_plus_ids;
  return doc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<Scalar> parse_coordinate_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(parse_scalar(item));
  if (out.empty()) throw ParseError("empty coordinate list");
  return out;
}

}  // namespace tverberg
