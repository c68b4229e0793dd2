#include "json_io.hpp"

namespace wtrop {

using nlohmann::json;

json to_json(LatticePoint p) { return json::array({p.x, p.y}); }

json to_json(const Cell& cell) {
  json corners = json::array();
  for (const auto& c : cell.corners()) corners.push_back(to_json(c));
  return json{{"kind", cell.kind() == CellKind::Triangle ? "triangle" : "parallelogram"},
              {"corners", corners}};
}

json to_json(const SurfaceDivisorSpec& spec) {
  return json{{"kind", surface_kind_name(spec.kind)}, {"degrees", spec.degrees()}};
}

json to_json(const Marking& mk) {
  return json{{"r_real", mk.r_real},
              {"r_imag", mk.r_imag},
              {"W", json(mk.w_set)},
              {"V", json(mk.v_set)},
              {"s2", mk.s_imag_vertices()}};
}

json to_json(const Classification& cls) {
  json gmax_edges = json::array();
  for (int id : cls.gmax.extended_ids) {
    const ExtendedEdge& ext = cls.extended.at(static_cast<std::size_t>(id));
    json segments = json::array();
    for (const auto& seg : ext.segments) {
      segments.push_back(json::array({to_json(seg.a), to_json(seg.b)}));
    }
    gmax_edges.push_back(json{{"weight", ext.weight}, {"segments", segments}});
  }
  return json{{"status", cls.status == ConsistencyStatus::Consistent ? "consistent" : "inconsistent"},
              {"reason", cls.reason},
              {"s2", cls.s_imag_vertices},
              {"zero_weight", cls.zero_weight},
              {"gmax", gmax_edges},
              {"w_on_even_edges", json(cls.w_indices_on_even_edges)}};
}

json to_json(const WeightedCount& wc) {
  return json{{"w", wc.welschinger}, {"a", wc.a},       {"b", wc.b},
              {"c", wc.c},           {"factors", wc.factors}, {"complex", wc.complex_mult}};
}

json to_json(const Subdivision& sub) {
  json cells = json::array();
  for (const auto& cell : sub.cells) cells.push_back(to_json(cell));
  json vts = json::object();
  for (const auto& [j, tri] : sub.v_triangles) vts[std::to_string(j)] = to_json(tri);
  return json{{"cells", cells}, {"v_triangles", vts}};
}

json to_json(const SubdivisionRecord& rec) {
  json path = json::array();
  for (const auto& v : rec.path.vertices) path.push_back(to_json(v));
  return json{{"path_rank", rec.path_rank},
              {"index_in_path", rec.index_in_path},
              {"path", path},
              {"marking", to_json(rec.marking)},
              {"subdivision", to_json(rec.subdivision)},
              {"classification", to_json(rec.classification)},
              {"weight", to_json(rec.weight)}};
}

json to_json(const InvariantResult& res) {
  json j{{"schema", 1},
         {"surface", to_json(res.spec)},
         {"r_real", res.r_real},
         {"r_imag", res.r_imag},
         {"lambda", json::array({res.direction.a, res.direction.b})},
         {"markingW", json(res.marking_w)},
         {"paths_total", res.paths_total},
         {"subdivisions_total", res.subdivisions_total},
         {"consistent", res.consistent_count},
         {"zero_weight", res.zero_weight_count},
         {"welschinger", res.welschinger}};
  if (!res.records.empty()) {
    json records = json::array();
    for (const auto& rec : res.records) records.push_back(to_json(rec));
    j["enumerate"] = records;
  }
  return j;
}

json to_json(const InvarianceReport& report) {
  json runs = json::array();
  for (const auto& run : report.runs) {
    runs.push_back(json{{"lambda", json::array({run.direction.a, run.direction.b})},
                        {"markingW", json(run.marking_w)},
                        {"welschinger", run.welschinger}});
  }
  return json{{"schema", 1}, {"runs", runs}, {"agree", report.agree}, {"value", report.value}};
}

LatticePoint point_from_json(const json& j) {
  return LatticePoint{j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

Cell cell_from_json(const json& j) {
  std::vector<LatticePoint> corners;
  for (const auto& c : j.at("corners")) corners.push_back(point_from_json(c));
  if (j.at("kind").get<std::string>() == "triangle") {
    if (corners.size() != 3) throw std::invalid_argument("triangle needs 3 corners");
    return Cell::triangle(corners[0], corners[1], corners[2]);
  }
  if (corners.size() != 4) throw std::invalid_argument("parallelogram needs 4 corners");
  const Cell cell = Cell::parallelogram(corners[0], corners[1], corners[2]);
  if (cell.corners() != corners) throw std::invalid_argument("corners do not close a parallelogram");
  return cell;
}

SurfaceDivisorSpec spec_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::vector<int> ds = j.at("degrees").get<std::vector<int>>();
  SurfaceDivisorSpec spec;
  const auto need = [&](std::size_t k) {
    if (ds.size() != k) throw std::invalid_argument("wrong degree count for " + kind);
  };
  if (kind == "p2") {
    spec.kind = SurfaceKind::P2;
    need(1);
    spec.d = ds[0];
  } else if (kind == "p1xp1") {
    spec.kind = SurfaceKind::P1xP1;
    need(2);
    spec.d1 = ds[0];
    spec.d2 = ds[1];
  } else if (kind == "bl1") {
    spec.kind = SurfaceKind::Bl1;
    need(2);
    spec.d = ds[0];
    spec.d1 = ds[1];
  } else if (kind == "bl2") {
    spec.kind = SurfaceKind::Bl2;
    need(3);
    spec.d = ds[0];
    spec.d1 = ds[1];
    spec.d2 = ds[2];
  } else if (kind == "bl3") {
    spec.kind = SurfaceKind::Bl3;
    need(4);
    spec.d = ds[0];
    spec.d1 = ds[1];
    spec.d2 = ds[2];
    spec.d3 = ds[3];
  } else {
    throw std::invalid_argument("unknown surface kind " + kind);
  }
  return spec;
}

Subdivision subdivision_from_json(const json& j) {
  Subdivision sub;
  for (const auto& c : j.at("cells")) sub.cells.push_back(cell_from_json(c));
  for (const auto& [key, val] : j.at("v_triangles").items()) {
    sub.v_triangles.emplace(std::stoi(key), cell_from_json(val));
  }
  return sub;
}

namespace {

Marking marking_from_json(const json& j) {
  Marking mk;
  mk.r_real = j.at("r_real").get<int>();
  mk.r_imag = j.at("r_imag").get<int>();
  mk.w_set = j.at("W").get<std::set<int>>();
  mk.v_set = j.at("V").get<std::set<int>>();
  return mk;
}

Classification classification_from_json(const json& j) {
  Classification cls;
  cls.status = j.at("status").get<std::string>() == "consistent" ? ConsistencyStatus::Consistent
                                                                 : ConsistencyStatus::Inconsistent;
  cls.reason = j.at("reason").get<std::string>();
  cls.s_imag_vertices = j.at("s2").get<int>();
  cls.zero_weight = j.at("zero_weight").get<bool>();
  cls.w_indices_on_even_edges = j.at("w_on_even_edges").get<std::vector<int>>();
  int id = 0;
  for (const auto& edge : j.at("gmax")) {
    ExtendedEdge ext;
    ext.weight = edge.at("weight").get<std::int64_t>();
    for (const auto& s : edge.at("segments")) {
      ext.segments.push_back(Segment::of(point_from_json(s.at(0)), point_from_json(s.at(1))));
    }
    cls.extended.push_back(std::move(ext));
    cls.gmax.extended_ids.insert(id++);
  }
  return cls;
}

}  // namespace

InvariantResult result_from_json(const json& j) {
  if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unsupported schema version");
  InvariantResult res;
  res.spec = spec_from_json(j.at("surface"));
  res.r_real = j.at("r_real").get<int>();
  res.r_imag = j.at("r_imag").get<int>();
  res.direction = Direction{j.at("lambda").at(0).get<std::int64_t>(),
                            j.at("lambda").at(1).get<std::int64_t>()};
  res.marking_w = j.at("markingW").get<std::set<int>>();
  res.paths_total = j.at("paths_total").get<std::uint64_t>();
  res.subdivisions_total = j.at("subdivisions_total").get<std::uint64_t>();
  res.consistent_count = j.at("consistent").get<std::uint64_t>();
  res.zero_weight_count = j.at("zero_weight").get<std::uint64_t>();
  res.welschinger = j.at("welschinger").get<std::int64_t>();
  if (j.contains("enumerate")) {
    for (const auto& r : j.at("enumerate")) {
      SubdivisionRecord rec;
      rec.path_rank = r.at("path_rank").get<std::uint64_t>();
      rec.index_in_path = r.at("index_in_path").get<std::uint32_t>();
      for (const auto& v : r.at("path")) rec.path.vertices.push_back(point_from_json(v));
      rec.marking = marking_from_json(r.at("marking"));
      rec.subdivision = subdivision_from_json(r.at("subdivision"));
      rec.classification = classification_from_json(r.at("classification"));
      const auto& w = r.at("weight");
      rec.weight.welschinger = w.at("w").get<std::int64_t>();
      rec.weight.a = w.at("a").get<std::int64_t>();
      rec.weight.b = w.at("b").get<std::int64_t>();
      rec.weight.c = w.at("c").get<std::int64_t>();
      rec.weight.factors = w.at("factors").get<std::vector<std::int64_t>>();
      rec.weight.complex_mult = w.at("complex").get<std::int64_t>();
      res.records.push_back(std::move(rec));
    }
  }
  return res;
}

std::string result_to_string(const InvariantResult& res, bool pretty) {
  return pretty ? to_json(res).dump(2) : to_json(res).dump();
}

}  // namespace wtrop
