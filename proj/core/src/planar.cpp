#include "ym2d/planar.hpp"

#include <algorithm>
#include <map>

#include "ym2d/errors.hpp"

namespace ym2d {

namespace {

struct SideRef {  // where an edge id sits
  int crossing = -1;
  Slot slot = Slot::NE;
};

bool outgoing(Slot s) { return s == Slot::NE || s == Slot::NW; }

Slot cw(Slot s) {
  switch (s) {
    case Slot::NE: return Slot::SE;
    case Slot::SE: return Slot::SW;
    case Slot::SW: return Slot::NW;
    default: return Slot::NE;
  }
}

Slot opposite(Slot s) {
  switch (s) {
    case Slot::NE: return Slot::SW;
    case Slot::SW: return Slot::NE;
    case Slot::NW: return Slot::SE;
    default: return Slot::NW;
  }
}

}  // namespace

SurfaceGraph from_planar_diagram(int N, const std::vector<Crossing>& crossings, const OuterMark& outer) {
  require_input(!crossings.empty(), "from_planar_diagram needs at least one crossing");
  constexpr Slot kSlots[4] = {Slot::NE, Slot::NW, Slot::SW, Slot::SE};

  // Each edge id must occur exactly once in an outgoing slot and once in an
  // incoming slot.
  std::map<std::string, SideRef> out_slot, in_slot;
  for (size_t ci = 0; ci < crossings.size(); ++ci) {
    const Crossing& c = crossings[ci];
    const std::string* eids[4] = {&c.ne, &c.nw, &c.sw, &c.se};
    for (int k = 0; k < 4; ++k) {
      auto& table = outgoing(kSlots[k]) ? out_slot : in_slot;
      auto [it, inserted] = table.emplace(*eids[k], SideRef{static_cast<int>(ci), kSlots[k]});
      require_input(inserted, "edge '" + *eids[k] + "' occupies two " +
                                  (outgoing(kSlots[k]) ? "outgoing" : "incoming") + " slots");
    }
  }
  require_input(out_slot.size() == in_slot.size(), "dangling half-edges in crossing data");
  for (const auto& [eid, ref] : out_slot)
    require_input(in_slot.count(eid) == 1, "dangling half-edge '" + eid + "'");

  SurfaceGraph g;
  g.N = N;
  g.closed = false;
  g.surface_euler_char = 1;

  for (size_t ci = 0; ci < crossings.size(); ++ci) {
    Vertex v;
    v.id = crossings[ci].id.empty() ? ("v" + std::to_string(ci)) : crossings[ci].id;
    v.ne = crossings[ci].ne;
    v.nw = crossings[ci].nw;
    v.sw = crossings[ci].sw;
    v.se = crossings[ci].se;
    g.vertices.push_back(std::move(v));
  }
  for (const auto& [eid, oref] : out_slot) {
    Edge e;
    e.id = eid;
    e.kind = EdgeKind::Linear;
    e.from = g.vertices[static_cast<size_t>(oref.crossing)].id;
    e.to = g.vertices[static_cast<size_t>(in_slot.at(eid).crossing)].id;
    g.edges.push_back(std::move(e));
  }

  // Trace the face walks directly on directed edge sides.  A directed side
  // arrives at a crossing slot; the walk continues along the clockwise
  // neighbouring ray.
  auto side_key = [&](int edge, bool fwd) { return 2 * edge + (fwd ? 0 : 1); };
  auto successor = [&](int edge, bool fwd) -> std::pair<int, bool> {
    const std::string& eid = g.edges[static_cast<size_t>(edge)].id;
    SideRef arr = fwd ? in_slot.at(eid) : out_slot.at(eid);
    Slot next = cw(arr.slot);
    const Vertex& v = g.vertices[static_cast<size_t>(arr.crossing)];
    int ne_idx = g.edge_index(v.edge_at(next));
    return {ne_idx, outgoing(next)};
  };

  int n_edges = static_cast<int>(g.edges.size());
  std::vector<int> side_face(static_cast<size_t>(2 * n_edges), -1);
  std::vector<std::vector<std::pair<int, bool>>> walk_sides;
  for (int e = 0; e < n_edges; ++e)
    for (bool fwd : {true, false}) {
      if (side_face[static_cast<size_t>(side_key(e, fwd))] >= 0) continue;
      int face = static_cast<int>(walk_sides.size());
      walk_sides.emplace_back();
      int ce = e;
      bool cf = fwd;
      do {
        side_face[static_cast<size_t>(side_key(ce, cf))] = face;
        walk_sides.back().emplace_back(ce, cf);
        std::tie(ce, cf) = successor(ce, cf);
      } while (!(ce == e && cf == fwd));
    }

  // Planarity / connectedness: a connected diagram on the sphere has
  // exactly |V| + 2 faces.
  require_input(static_cast<int>(walk_sides.size()) == static_cast<int>(crossings.size()) + 2,
                "crossing data is not a connected planar diagram");

  int outer_edge = g.edge_index(outer.edge);
  require_input(outer_edge >= 0, "outer mark references unknown edge '" + outer.edge + "'");
  int outer_face = side_face[static_cast<size_t>(side_key(outer_edge, outer.left))];

  // Face records: bounded faces are disks, the outer one an annulus with
  // the free boundary of the ambient disk.
  std::vector<std::string> face_ids(walk_sides.size());
  int counter = 0;
  for (size_t f = 0; f < walk_sides.size(); ++f)
    face_ids[f] = (static_cast<int>(f) == outer_face) ? "OUT" : ("F" + std::to_string(counter++));
  for (size_t f = 0; f < walk_sides.size(); ++f) {
    Face face;
    face.id = face_ids[f];
    face.area = 0.0;
    if (static_cast<int>(f) == outer_face) {
      face.euler_char = 0;
      face.external_boundaries = 1;
      face.internal_boundaries.push_back(BoundaryComponent{"B0", BoundaryKind::Free, {}});
    } else {
      face.euler_char = 1;
      face.external_boundaries = 1;
    }
    g.faces.push_back(std::move(face));
  }

  for (int e = 0; e < n_edges; ++e) {
    g.edges[static_cast<size_t>(e)].left = face_ids[static_cast<size_t>(side_face[static_cast<size_t>(side_key(e, true))])];
    g.edges[static_cast<size_t>(e)].right = face_ids[static_cast<size_t>(side_face[static_cast<size_t>(side_key(e, false))])];
  }
  for (auto& v : g.vertices) {
    v.north = g.edge(v.ne).left;
    v.east = g.edge(v.ne).right;
    v.west = g.edge(v.nw).left;
    v.south = g.edge(v.sw).right;
  }

  // Strand tracing: arriving at an incoming slot, the immersed curve
  // continues along the opposite ray.
  std::vector<char> used(static_cast<size_t>(n_edges), 0);
  for (int e = 0; e < n_edges; ++e) {
    if (used[static_cast<size_t>(e)]) continue;
    LoopWord w;
    int ce = e;
    do {
      used[static_cast<size_t>(ce)] = 1;
      w.push_back(LoopStep{g.edges[static_cast<size_t>(ce)].id, true});
      SideRef arr = in_slot.at(g.edges[static_cast<size_t>(ce)].id);
      const Vertex& v = g.vertices[static_cast<size_t>(arr.crossing)];
      ce = g.edge_index(v.edge_at(opposite(arr.slot)));
    } while (ce != e);
    g.loops.push_back(std::move(w));
  }

  return g;
}

SurfaceGraph from_circle_forest(int N, const std::vector<std::string>& circle_ids,
                                const std::vector<int>& parent) {
  require_input(circle_ids.size() == parent.size(), "circle/parent size mismatch");
  const int n = static_cast<int>(circle_ids.size());
  require_input(n >= 1, "need at least one circle");
  for (int i = 0; i < n; ++i)
    require_input(parent[static_cast<size_t>(i)] < i, "parents must precede children");

  SurfaceGraph g;
  g.N = N;
  g.closed = false;
  g.surface_euler_char = 1;

  std::vector<int> children(static_cast<size_t>(n), 0);
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    if (parent[static_cast<size_t>(i)] < 0)
      ++roots;
    else
      ++children[static_cast<size_t>(parent[static_cast<size_t>(i)])];
  }

  Face out;
  out.id = "OUT";
  out.euler_char = 1 - roots;
  out.external_boundaries = roots;
  out.internal_boundaries.push_back(BoundaryComponent{"B0", BoundaryKind::Free, {}});
  g.faces.push_back(std::move(out));

  for (int i = 0; i < n; ++i) {
    Face f;
    f.id = "F" + circle_ids[static_cast<size_t>(i)];
    f.euler_char = 1 - children[static_cast<size_t>(i)];
    f.external_boundaries = 1 + children[static_cast<size_t>(i)];
    g.faces.push_back(std::move(f));
  }

  for (int i = 0; i < n; ++i) {
    Edge e;
    e.id = circle_ids[static_cast<size_t>(i)];
    e.kind = EdgeKind::Circular;
    int p = parent[static_cast<size_t>(i)];
    e.left = p < 0 ? "OUT" : ("F" + circle_ids[static_cast<size_t>(p)]);
    e.right = "F" + circle_ids[static_cast<size_t>(i)];
    g.edges.push_back(std::move(e));
    g.loops.push_back(LoopWord{LoopStep{circle_ids[static_cast<size_t>(i)], true}});
  }

  return g;
}

void set_area(SurfaceGraph& g, const std::string& face_id, double area) {
  int fi = g.face_index(face_id);
  require_input(fi >= 0, "unknown face id '" + face_id + "'");
  g.faces[static_cast<size_t>(fi)].area = area;
}

}  // namespace ym2d
