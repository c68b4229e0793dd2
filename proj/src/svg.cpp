#include "svg.hpp"

#include <algorithm>

namespace wtrop {

namespace {

constexpr std::int64_t kScale = 48;  // even, so edge midpoints stay integral
constexpr std::int64_t kMargin = 36;

struct Frame {
  std::int64_t min_x = 0, max_y = 0;

  std::int64_t px(std::int64_t x) const { return (x - min_x) * kScale + kMargin; }
  std::int64_t py(std::int64_t y) const { return (max_y - y) * kScale + kMargin; }
  std::string at(LatticePoint p) const {
    return std::to_string(px(p.x)) + "," + std::to_string(py(p.y));
  }
};

}  // namespace

std::string render_svg(const Subdivision& sub, const Classification& cls, const WeightedCount& wc,
                       const LatticePolygon& poly) {
  Frame fr;
  std::int64_t max_x = poly.vertices()[0].x, min_y = poly.vertices()[0].y;
  fr.min_x = poly.vertices()[0].x;
  fr.max_y = poly.vertices()[0].y;
  for (const auto& v : poly.vertices()) {
    fr.min_x = std::min(fr.min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    fr.max_y = std::max(fr.max_y, v.y);
  }
  const std::int64_t width = (max_x - fr.min_x) * kScale + 2 * kMargin;
  const std::int64_t height = (fr.max_y - min_y) * kScale + 2 * kMargin;

  std::set<Cell> apex_triangles;
  for (const auto& [j, tri] : sub.v_triangles) {
    (void)j;
    apex_triangles.insert(tri);
  }

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
       "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
       " " + std::to_string(height) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const auto& cell : sub.cells) {
    std::string pts;
    for (const auto& c : cell.corners()) {
      if (!pts.empty()) pts += " ";
      pts += fr.at(c);
    }
    const bool shaded = apex_triangles.contains(cell);
    const std::string fill =
        shaded ? "#c8c8e8" : (cell.kind() == CellKind::Parallelogram ? "#f0e8d8" : "none");
    s += "<polygon points=\"" + pts + "\" fill=\"" + fill +
         "\" stroke=\"#404040\" stroke-width=\"2\"/>\n";
  }

  // Non-unit edge lengths as labels at edge midpoints.
  std::set<Segment> labelled;
  for (const auto& cell : sub.cells) {
    for (const auto& seg : cell.edges()) {
      if (seg.length() < 2 || labelled.contains(seg)) continue;
      labelled.insert(seg);
      const std::int64_t mx = (fr.px(seg.a.x) + fr.px(seg.b.x)) / 2;
      const std::int64_t my = (fr.py(seg.a.y) + fr.py(seg.b.y)) / 2;
      s += "<text x=\"" + std::to_string(mx) + "\" y=\"" + std::to_string(my) +
           "\" font-size=\"18\" fill=\"#a03030\" text-anchor=\"middle\">" +
           std::to_string(seg.length()) + "</text>\n";
    }
  }

  std::string outline;
  for (const auto& v : poly.vertices()) {
    if (!outline.empty()) outline += " ";
    outline += fr.at(v);
  }
  s += "<polygon points=\"" + outline +
       "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";

  for (const auto& p : poly.lattice_points()) {
    s += "<circle cx=\"" + std::to_string(fr.px(p.x)) + "\" cy=\"" + std::to_string(fr.py(p.y)) +
         "\" r=\"4\" fill=\"#202020\"/>\n";
  }

  std::string badge;
  if (cls.status != ConsistencyStatus::Consistent) {
    badge = "inconsistent: " + cls.reason;
  } else {
    badge = "w = " + std::to_string(cls.zero_weight ? 0 : wc.welschinger);
  }
  s += "<text x=\"8\" y=\"22\" font-size=\"20\" fill=\"black\">" + badge + "</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace wtrop
