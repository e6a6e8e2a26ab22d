#pragma once

#include <string>
#include <vector>

#include "tverberg/geometry.hpp"

namespace tverberg {

/// Convex hull of 2-D points in counter-clockwise order, exact orientation
/// tests, collinear points dropped.
std::vector<PointRef> convex_hull_2d(const PointRefs& points);

/**
 * SVG 1.1 drawing of a planar partition: one color per part, each part's
 * hull outlined and lightly filled, points as dots. Ids in `removed` are
 * drawn as crosses and left out of the hulls.
 * Throws DimensionError unless P is 2-D.
 */
std::string render_partition_svg(const PointSet& points, const IndexedPartition& partition,
                                 const RemovalSet& removed = {});

}  // namespace tverberg
