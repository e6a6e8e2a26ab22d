#include "tverberg/geometry.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

std::strong_ordering compare(const Scalar& a, const Scalar& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

PointSet::PointSet(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
  if (dim_ == 0) throw DimensionError("point set dimension must be positive");
  index_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (p.dim() != dim_) {
      throw DimensionError("point " + std::to_string(p.id) + " has " + std::to_string(p.dim()) +
                           " coordinates, expected " + std::to_string(dim_));
    }
    if (!index_.emplace(p.id, i).second) throw Error("duplicate point id " + std::to_string(p.id));
  }
}

const Point& PointSet::at(PointId id) const { return points_[index_of(id)]; }

std::size_t PointSet::index_of(PointId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw Error("unknown point id " + std::to_string(id));
  return it->second;
}

std::vector<PointId> PointSet::ids() const {
  std::vector<PointId> out;
  out.reserve(points_.size());
  for (const Point& p : points_) out.push_back(p.id);
  return out;
}

std::vector<PointId> PointSet::sorted_ids() const {
  auto out = ids();
  std::sort(out.begin(), out.end());
  return out;
}

PointSet PointSet::subset(std::span<const PointId> ids) const {
  std::vector<Point> selected;
  selected.reserve(ids.size());
  for (PointId id : ids) selected.push_back(at(id));
  return PointSet(dim_, std::move(selected));
}

bool RemovalSet::contains(PointId id) const { return std::binary_search(ids.begin(), ids.end(), id); }

bool validate_partition(const PointSet& points, const IndexedPartition& partition) {
  if (partition.parts.empty()) return false;
  std::unordered_set<PointId> seen;
  seen.reserve(points.size());
  for (const auto& part : partition.parts) {
    if (part.empty()) return false;
    for (PointId id : part) {
      if (!points.contains(id) || !seen.insert(id).second) return false;
    }
  }
  return seen.size() == points.size();
}

std::strong_ordering total_order_1d(const Point& a, const Point& b) {
  if (a.dim() != 1 || b.dim() != 1) throw DimensionError("total_order_1d needs 1-D points");
  if (const auto c = compare(a.coords[0], b.coords[0]); c != 0) return c;
  return a.id <=> b.id;
}

std::strong_ordering last_axis_order(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw DimensionError();
  for (std::size_t k = a.dim(); k-- > 0;) {
    if (const auto c = compare(a.coords[k], b.coords[k]); c != 0) return c;
  }
  return a.id <=> b.id;
}

std::vector<PointRefs> part_points(const PointSet& points, const IndexedPartition& partition,
                                   const RemovalSet* removed) {
  std::vector<PointRefs> out(partition.parts.size());
  for (std::size_t j = 0; j < partition.parts.size(); ++j) {
    out[j].reserve(partition.parts[j].size());
    for (PointId id : partition.parts[j]) {
      if (removed != nullptr && removed->contains(id)) continue;
      out[j].emplace_back(points.at(id));
    }
  }
  return out;
}

}  // namespace tverberg
