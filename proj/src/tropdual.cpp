#include "tropdual.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wtrop {

namespace {

// Directed vector of a boundary segment, oriented along the counterclockwise
// traversal of the polygon boundary.
LatticePoint boundary_segment_vector(const Segment& seg, const LatticePolygon& poly) {
  const auto& verts = poly.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const LatticePoint u = verts[i];
    const LatticePoint v = verts[(i + 1) % verts.size()];
    if (segment_contains(u, v, seg.a) && segment_contains(u, v, seg.b)) {
      const LatticePoint d = seg.b - seg.a;
      return dot(d, v - u) > 0 ? d : seg.a - seg.b;
    }
  }
  throw internal_error("segment is not on the polygon boundary");
}

int opposite_edge_at_parallelogram(const DualCurve& curve, int node, int edge_id) {
  const Cell& cell = curve.cells[static_cast<std::size_t>(node)];
  internal_check(cell.kind() == CellKind::Parallelogram, "pass-through at a non-parallelogram");
  const auto sides = cell.edges();  // four sides in cycle order
  const Segment want = curve.edges[static_cast<std::size_t>(edge_id)].seg;
  int side_idx = -1;
  for (int k = 0; k < 4; ++k) {
    if (sides[static_cast<std::size_t>(k)] == want) side_idx = k;
  }
  internal_check(side_idx >= 0, "dual edge segment is not a side of its cell");
  const Segment opposite = sides[static_cast<std::size_t>((side_idx + 2) % 4)];
  for (int other : curve.incident[static_cast<std::size_t>(node)]) {
    if (other != edge_id && curve.edges[static_cast<std::size_t>(other)].seg == opposite) {
      return other;
    }
  }
  throw internal_error("parallelogram side without a dual edge");
}

int other_end(const DualEdge& e, int node) { return e.node_a == node ? e.node_b : e.node_a; }

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

DualCurve dual_graph(const Subdivision& sub, const LatticePolygon& poly) {
  DualCurve curve;
  curve.cells = sub.cells;

  std::map<Segment, std::vector<int>> by_segment;
  for (std::size_t i = 0; i < sub.cells.size(); ++i) {
    for (const auto& seg : sub.cells[i].edges()) {
      by_segment[seg].push_back(static_cast<int>(i));
    }
  }

  curve.incident.assign(curve.cells.size() + 1, {});
  for (const auto& [seg, owners] : by_segment) {
    DualEdge e;
    e.seg = seg;
    e.weight = seg.length();
    if (owners.size() == 2) {
      e.node_a = owners[0];
      e.node_b = owners[1];
    } else {
      internal_check(owners.size() == 1, "edge shared by more than two cells");
      internal_check(poly.boundary_contains_segment(seg.a, seg.b),
                     "unmatched interior edge in dual graph");
      e.node_a = owners[0];
      e.node_b = curve.vinf();
    }
    const int id = static_cast<int>(curve.edges.size());
    curve.edges.push_back(e);
    curve.incident[static_cast<std::size_t>(e.node_a)].push_back(id);
    curve.incident[static_cast<std::size_t>(e.node_b)].push_back(id);
  }

  // Valency and balancing at every node.
  for (std::size_t i = 0; i < curve.cells.size(); ++i) {
    const Cell& cell = curve.cells[i];
    const std::size_t valency = curve.incident[i].size();
    if (cell.kind() == CellKind::Triangle) {
      internal_check(valency == 3, "triangle node is not 3-valent");
    } else {
      internal_check(valency == 4, "parallelogram node is not 4-valent");
    }
    LatticePoint sum{0, 0};
    for (const auto& [u, v] : cell.directed_edges()) {
      const LatticePoint w = v - u;
      const std::int64_t len = lattice_length(u, v);
      const LatticePoint prim{w.x / len, w.y / len};
      sum = sum + LatticePoint{rotate90(prim).x * len, rotate90(prim).y * len};
    }
    internal_check(sum == LatticePoint{0, 0}, "balancing fails at a dual node");
  }
  return curve;
}

std::vector<ExtendedEdge> extended_edges(const DualCurve& curve) {
  std::vector<ExtendedEdge> out;
  std::vector<bool> used(curve.edges.size(), false);

  for (std::size_t start = 0; start < curve.edges.size(); ++start) {
    if (used[start]) continue;
    ExtendedEdge ext;
    ext.weight = curve.edges[start].weight;
    std::vector<int> chain{static_cast<int>(start)};
    used[start] = true;

    const auto walk = [&](int first_node, bool prepend) {
      int edge_id = prepend ? chain.front() : chain.back();
      int node = first_node;
      while (node != curve.vinf() &&
             curve.cells[static_cast<std::size_t>(node)].kind() == CellKind::Parallelogram) {
        const int nxt = opposite_edge_at_parallelogram(curve, node, edge_id);
        internal_check(!used[static_cast<std::size_t>(nxt)], "extended edge closed into a cycle");
        used[static_cast<std::size_t>(nxt)] = true;
        if (prepend) {
          chain.insert(chain.begin(), nxt);
        } else {
          chain.push_back(nxt);
        }
        internal_check(curve.edges[static_cast<std::size_t>(nxt)].weight == ext.weight,
                       "weight changed along an extended edge");
        node = other_end(curve.edges[static_cast<std::size_t>(nxt)], node);
        edge_id = nxt;
      }
      return node;
    };

    ext.end_a = walk(curve.edges[start].node_a, /*prepend=*/true);
    ext.end_b = walk(curve.edges[start].node_b, /*prepend=*/false);
    ext.edge_ids = std::move(chain);
    for (int e : ext.edge_ids) ext.segments.push_back(curve.edges[static_cast<std::size_t>(e)].seg);
    out.push_back(std::move(ext));
  }
  return out;
}

std::int64_t virtual_rank(const Subdivision& sub) {
  std::set<LatticePoint> vertex_set;
  std::int64_t parallelograms = 0;
  for (const auto& cell : sub.cells) {
    for (const auto& c : cell.corners()) vertex_set.insert(c);
    if (cell.kind() == CellKind::Parallelogram) ++parallelograms;
  }
  return static_cast<std::int64_t>(vertex_set.size()) - 1 - parallelograms;
}

bool is_irreducible(const DualCurve& curve, const LatticePolygon& poly) {
  internal_check(!curve.edges.empty(), "dual curve without edges");
  Dsu dsu(curve.edges.size());
  for (int node = 0; node < curve.vinf(); ++node) {
    const auto& inc = curve.incident[static_cast<std::size_t>(node)];
    if (curve.is_triangle_node(node)) {
      for (std::size_t k = 1; k < inc.size(); ++k) dsu.unite(inc[0], inc[k]);
    } else {
      for (int e : inc) dsu.unite(e, opposite_edge_at_parallelogram(curve, node, e));
    }
  }
  std::set<int> roots;
  for (std::size_t e = 0; e < curve.edges.size(); ++e) roots.insert(dsu.find(static_cast<int>(e)));
  if (roots.size() <= 1) return true;

  // Reducible: each split component must close up to its own Newton polygon,
  // and those polygons Minkowski-sum to the ambient one. The summands
  // partition the boundary, so closure of each component is the whole check.
  for (int root : roots) {
    LatticePoint total{0, 0};
    for (std::size_t e = 0; e < curve.edges.size(); ++e) {
      const DualEdge& de = curve.edges[e];
      if (dsu.find(static_cast<int>(e)) != root) continue;
      if (de.node_a == curve.vinf() || de.node_b == curve.vinf()) {
        total = total + boundary_segment_vector(de.seg, poly);
      }
    }
    internal_check(total == LatticePoint{0, 0}, "split component boundary does not close up");
  }
  return false;
}

std::int64_t split_genus(const DualCurve& curve) {
  // Strand vertices: one per triangle, two per parallelogram (one per pair of
  // opposite sides). Cycles can only use bounded edges.
  std::vector<int> slot_of_node(curve.cells.size(), -1);
  int vertex_count = 0;
  for (std::size_t i = 0; i < curve.cells.size(); ++i) {
    slot_of_node[i] = vertex_count;
    vertex_count += curve.cells[i].kind() == CellKind::Triangle ? 1 : 2;
  }
  const auto strand_vertex = [&](int node, int edge_id) {
    const Cell& cell = curve.cells[static_cast<std::size_t>(node)];
    if (cell.kind() == CellKind::Triangle) return slot_of_node[static_cast<std::size_t>(node)];
    const auto sides = cell.edges();
    const Segment want = curve.edges[static_cast<std::size_t>(edge_id)].seg;
    for (int k = 0; k < 4; ++k) {
      if (sides[static_cast<std::size_t>(k)] == want) {
        return slot_of_node[static_cast<std::size_t>(node)] + (k % 2);
      }
    }
    throw internal_error("dual edge segment is not a side of its cell");
  };

  Dsu dsu(static_cast<std::size_t>(vertex_count));
  std::int64_t bounded_edges = 0;
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    const DualEdge& de = curve.edges[e];
    if (de.node_a == curve.vinf() || de.node_b == curve.vinf()) continue;
    ++bounded_edges;
    dsu.unite(strand_vertex(de.node_a, static_cast<int>(e)),
              strand_vertex(de.node_b, static_cast<int>(e)));
  }
  std::set<int> roots;
  for (int v = 0; v < vertex_count; ++v) roots.insert(dsu.find(v));
  const std::int64_t genus =
      bounded_edges - vertex_count + static_cast<std::int64_t>(roots.size());
  internal_check(genus >= 0, "negative split genus");
  return genus;
}

GmaxGraph build_gmax(const DualCurve& curve, const std::vector<ExtendedEdge>& extended,
                     const LatticePath& path, const Marking& marking) {
  std::map<Segment, int> segment_to_edge;
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    segment_to_edge.emplace(curve.edges[e].seg, static_cast<int>(e));
  }
  std::vector<int> ext_of_edge(curve.edges.size(), -1);
  for (std::size_t x = 0; x < extended.size(); ++x) {
    for (int e : extended[x].edge_ids) ext_of_edge[static_cast<std::size_t>(e)] = static_cast<int>(x);
  }
  std::vector<std::vector<int>> ext_at_node(curve.cells.size() + 1);
  for (std::size_t x = 0; x < extended.size(); ++x) {
    for (int node : {extended[x].end_a, extended[x].end_b}) {
      if (node != curve.vinf()) ext_at_node[static_cast<std::size_t>(node)].push_back(static_cast<int>(x));
    }
  }

  GmaxGraph g;
  for (int j = 1; j <= path.n(); ++j) {
    if (marking.w_set.contains(j) || marking.v_set.contains(j)) continue;
    const auto [a, b] = path.segment(j);
    const auto it = segment_to_edge.find(Segment::of(a, b));
    internal_check(it != segment_to_edge.end(), "path segment without a dual edge");
    const int ext_id = ext_of_edge[static_cast<std::size_t>(it->second)];
    internal_check(extended[static_cast<std::size_t>(ext_id)].weight % 2 == 0,
                   "even-point segment with odd weight");
    g.extended_ids.insert(ext_id);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (int node = 0; node < curve.vinf(); ++node) {
      if (!curve.is_triangle_node(node)) continue;
      const auto& here = ext_at_node[static_cast<std::size_t>(node)];
      int in_g = 0;
      for (int x : here) in_g += g.extended_ids.contains(x) ? 1 : 0;
      if (in_g != 2) continue;
      for (int x : here) {
        if (!g.extended_ids.contains(x)) {
          internal_check(extended[static_cast<std::size_t>(x)].weight % 2 == 0,
                         "odd extended edge appended to G_max");
          g.extended_ids.insert(x);
          changed = true;
        }
      }
    }
  }
  return g;
}

Classification classify(const Subdivision& sub, const LatticePath& path, const Marking& marking,
                        const LatticePolygon& poly) {
  Classification cls;
  cls.s_imag_vertices = marking.s_imag_vertices();

  for (int j : marking.v_set) {
    internal_check(sub.v_triangles.contains(j), "marking V-index without a designated triangle");
  }

  const DualCurve curve = dual_graph(sub, poly);

  // C1: unbounded ends of weight 1 or 2.
  for (const auto& e : curve.edges) {
    if ((e.node_a == curve.vinf() || e.node_b == curve.vinf()) && e.weight > 2) {
      cls.reason = "boundary edge of length " + std::to_string(e.weight);
      return cls;
    }
  }

  // C2: rank of the nodal curve matches the type equation.
  const std::int64_t rank = virtual_rank(sub);
  const std::int64_t required =
      poly.boundary_lattice_count() - 1 - marking.r_imag + cls.s_imag_vertices;
  if (rank != required) {
    cls.reason = "rank " + std::to_string(rank) + ", expected " + std::to_string(required);
    return cls;
  }

  // C3: irreducibility.
  if (!is_irreducible(curve, poly)) {
    cls.reason = "reducible";
    return cls;
  }

  // C4: G_max and the zero-weight rule.
  cls.extended = extended_edges(curve);
  cls.gmax = build_gmax(curve, cls.extended, path, marking);
  for (std::size_t x = 0; x < cls.extended.size(); ++x) {
    if (cls.extended[x].weight % 2 == 0 && !cls.gmax.extended_ids.contains(static_cast<int>(x))) {
      cls.zero_weight = true;
      break;
    }
  }

  for (int j : marking.w_set) {
    if (path.segment_length(j) % 2 == 0) cls.w_indices_on_even_edges.push_back(j);
  }

  if (!cls.zero_weight) {
    // Structural consequences for a curve of nonzero weight.
    for (const auto& [j, tri] : sub.v_triangles) {
      (void)j;
      for (const auto& seg : tri.edges()) {
        internal_check(seg.length() % 2 == 1, "apex triangle with an even edge");
      }
    }
    std::vector<int> gmax_valence(curve.cells.size(), 0);
    for (int x : cls.gmax.extended_ids) {
      for (int node : {cls.extended[static_cast<std::size_t>(x)].end_a,
                       cls.extended[static_cast<std::size_t>(x)].end_b}) {
        if (node != curve.vinf()) ++gmax_valence[static_cast<std::size_t>(node)];
      }
    }
    for (int node = 0; node < curve.vinf(); ++node) {
      if (!curve.is_triangle_node(node)) continue;
      const Cell& tri = curve.cells[static_cast<std::size_t>(node)];
      int even_edges = 0;
      for (const auto& seg : tri.edges()) even_edges += seg.length() % 2 == 0 ? 1 : 0;
      const int val = gmax_valence[static_cast<std::size_t>(node)];
      internal_check(val != 2, "bivalent G_max vertex at fixpoint");
      if (val == 1) internal_check(even_edges == 1, "univalent G_max triangle edge parity");
      if (val == 3) internal_check(even_edges == 3, "trivalent G_max vertex is not even");
      if (even_edges > 0) internal_check(val >= 1, "even-edged triangle outside G_max");
    }
  }

  cls.status = ConsistencyStatus::Consistent;
  return cls;
}

}  // namespace wtrop
