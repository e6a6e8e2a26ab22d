#include "tverberg/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

Scalar cross(const Point& o, const Point& a, const Point& b) {
  return (a.coords[0] - o.coords[0]) * (b.coords[1] - o.coords[1]) -
         (a.coords[1] - o.coords[1]) * (b.coords[0] - o.coords[0]);
}

constexpr std::array<const char*, 10> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::vector<PointRef> convex_hull_2d(const PointRefs& points) {
  std::vector<PointRef> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
    if (a.coords[0] != b.coords[0]) return a.coords[0] < b.coords[0];
    return a.coords[1] < b.coords[1];
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](const Point& a, const Point& b) { return a.coords == b.coords; }),
               sorted.end());
  if (sorted.size() < 3) return sorted;

  std::vector<PointRef> hull;
  hull.reserve(2 * sorted.size());
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t floor = hull.size();
    for (const PointRef& p : sorted) {
      while (hull.size() >= floor + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(sorted.begin(), sorted.end());
  }
  return hull;
}

std::string render_partition_svg(const PointSet& points, const IndexedPartition& partition,
                                 const RemovalSet& removed) {
  if (points.dim() != 2) throw DimensionError("plots are 2-D only");

  constexpr double kSize = 480.0;
  constexpr double kMargin = 30.0;
  double min_x = std::numeric_limits<double>::max(), max_x = std::numeric_limits<double>::lowest();
  double min_y = min_x, max_y = max_x;
  for (const Point& p : points.points()) {
    const double x = to_double(p.coords[0]), y = to_double(p.coords[1]);
    min_x = std::min(min_x, x), max_x = std::max(max_x, x);
    min_y = std::min(min_y, y), max_y = std::max(max_y, y);
  }
  if (points.empty()) min_x = min_y = 0, max_x = max_y = 1;
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = (kSize - 2 * kMargin) / span;
  const auto sx = [&](const Point& p) { return kMargin + (to_double(p.coords[0]) - min_x) * scale; };
  const auto sy = [&](const Point& p) { return kSize - kMargin - (to_double(p.coords[1]) - min_y) * scale; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\"480\" "
         "viewBox=\"0 0 480 480\">\n";
  svg += "  <rect width=\"480\" height=\"480\" fill=\"white\"/>\n";

  const auto kept = part_points(points, partition, &removed);
  for (std::size_t j = 0; j < kept.size(); ++j) {
    const char* color = kPalette[j % kPalette.size()];
    const auto hull = convex_hull_2d(kept[j]);
    if (hull.size() >= 2) {
      std::string coords;
      for (const Point& p : hull) coords += fmt(sx(p)) + "," + fmt(sy(p)) + " ";
      coords.pop_back();
      svg += "  <polygon points=\"" + coords + "\" fill=\"" + color + "\" fill-opacity=\"0.15\" stroke=\"" + color +
             "\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (std::size_t j = 0; j < partition.parts.size(); ++j) {
    const char* color = kPalette[j % kPalette.size()];
    for (PointId id : partition.parts[j]) {
      const Point& p = points.at(id);
      const double x = sx(p), y = sy(p);
      if (removed.contains(id)) {
        svg += "  <path d=\"M" + fmt(x - 5) + "," + fmt(y - 5) + " L" + fmt(x + 5) + "," + fmt(y + 5) + " M" +
               fmt(x - 5) + "," + fmt(y + 5) + " L" + fmt(x + 5) + "," + fmt(y - 5) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
      } else {
        svg += "  <circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
      }
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace tverberg
