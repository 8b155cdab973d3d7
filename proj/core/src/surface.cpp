#include "ym2d/surface.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ym2d/errors.hpp"

namespace ym2d {

const std::string& Vertex::edge_at(Slot s) const {
  switch (s) {
    case Slot::NE: return ne;
    case Slot::NW: return nw;
    case Slot::SW: return sw;
    default: return se;
  }
}

const std::string& Vertex::face_at_corner(char cardinal) const {
  switch (cardinal) {
    case 'N': return north;
    case 'W': return west;
    case 'S': return south;
    default: return east;
  }
}

namespace {

int find_by_id(const auto& items, const std::string& id) {
  for (size_t i = 0; i < items.size(); ++i)
    if (items[i].id == id) return static_cast<int>(i);
  return -1;
}

/// Continuing a face-boundary walk through a vertex: from the arrival ray,
/// the walk leaves along the clockwise-neighbouring ray.
Slot clockwise_neighbor(Slot s) {
  switch (s) {
    case Slot::NE: return Slot::SE;
    case Slot::SE: return Slot::SW;
    case Slot::SW: return Slot::NW;
    default: return Slot::NE;  // NW
  }
}

}  // namespace

int SurfaceGraph::face_index(const std::string& id) const { return find_by_id(faces, id); }
int SurfaceGraph::edge_index(const std::string& id) const { return find_by_id(edges, id); }
int SurfaceGraph::vertex_index(const std::string& id) const { return find_by_id(vertices, id); }

const Face& SurfaceGraph::face(const std::string& id) const {
  int i = face_index(id);
  require_input(i >= 0, "unknown face id '" + id + "'");
  return faces[static_cast<size_t>(i)];
}

const Edge& SurfaceGraph::edge(const std::string& id) const {
  int i = edge_index(id);
  require_input(i >= 0, "unknown edge id '" + id + "'");
  return edges[static_cast<size_t>(i)];
}

const Vertex& SurfaceGraph::vertex(const std::string& id) const {
  int i = vertex_index(id);
  require_input(i >= 0, "unknown vertex id '" + id + "'");
  return vertices[static_cast<size_t>(i)];
}

double SurfaceGraph::total_area() const {
  double a = 0.0;
  for (const auto& f : faces) a += f.area;
  return a;
}

namespace {

constexpr Slot kSlots[4] = {Slot::NE, Slot::NW, Slot::SW, Slot::SE};

bool slot_outgoing(Slot s) { return s == Slot::NE || s == Slot::NW; }

/// Arrival slot of a directed traversal, or -1 when the slot data does not
/// expose it.  Forward traversals arrive at an incoming slot of to(e),
/// backward ones at an outgoing slot of from(e).
int arrival_slot(const SurfaceGraph& g, const Traversal& t, int& vertex_out) {
  const Edge& e = g.edges[static_cast<size_t>(t.edge)];
  if (e.kind == EdgeKind::Circular) return -1;
  const std::string& vid = t.forward ? e.to : e.from;
  int vi = g.vertex_index(vid);
  vertex_out = vi;
  if (vi < 0) return -1;
  const Vertex& v = g.vertices[static_cast<size_t>(vi)];
  for (int k = 0; k < 4; ++k) {
    Slot s = kSlots[k];
    if (slot_outgoing(s) == t.forward) continue;
    if (v.edge_at(s) == e.id) return k;
  }
  return -1;
}

}  // namespace

std::vector<std::vector<std::vector<Traversal>>> trace_external_boundaries(const SurfaceGraph& g) {
  std::vector<std::vector<std::vector<Traversal>>> walks(g.faces.size());
  auto face_of = [&](const Traversal& t) {
    const Edge& e = g.edges[static_cast<size_t>(t.edge)];
    return g.face_index(t.forward ? e.left : e.right);
  };
  // side index: 2*edge + (forward ? 0 : 1)
  std::vector<char> seen(2 * g.edges.size(), 0);
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    for (int dir = 0; dir < 2; ++dir) {
      if (seen[2 * ei + static_cast<size_t>(dir)]) continue;
      Traversal start{static_cast<int>(ei), dir == 0};
      std::vector<Traversal> walk;
      Traversal cur = start;
      do {
        seen[2 * static_cast<size_t>(cur.edge) + (cur.forward ? 0 : 1)] = 1;
        walk.push_back(cur);
        const Edge& e = g.edges[static_cast<size_t>(cur.edge)];
        if (e.kind == EdgeKind::Circular) break;  // a circular edge is its own walk
        int vi = -1;
        int slot = arrival_slot(g, cur, vi);
        require_input(slot >= 0, "cannot trace boundary: inconsistent slots at edge '" + e.id + "'");
        const Vertex& v = g.vertices[static_cast<size_t>(vi)];
        Slot next = clockwise_neighbor(kSlots[slot]);
        cur = Traversal{g.edge_index(v.edge_at(next)), slot_outgoing(next)};
        require_input(cur.edge >= 0, "cannot trace boundary: dangling edge id at vertex '" + v.id + "'");
      } while (!(cur == start));
      int fi = face_of(start);
      if (fi >= 0) walks[static_cast<size_t>(fi)].push_back(std::move(walk));
    }
  }
  return walks;
}

std::vector<Violation> validate(const SurfaceGraph& g) {
  std::vector<Violation> out;
  auto report = [&](std::string kind, std::vector<std::string> ids, std::string detail) {
    out.push_back(Violation{std::move(kind), std::move(ids), std::move(detail)});
  };

  if (g.N < 1) report("bad-rank", {}, "N must be >= 1");

  // Unique ids.
  auto check_unique = [&](const auto& items, const char* what) {
    std::set<std::string> ids;
    for (const auto& it : items)
      if (!ids.insert(it.id).second) report("duplicate-id", {it.id}, std::string(what) + " id repeated");
  };
  check_unique(g.faces, "face");
  check_unique(g.edges, "edge");
  check_unique(g.vertices, "vertex");

  // Face data.
  bool graph_empty = g.edges.empty() && g.vertices.empty();
  for (const auto& f : g.faces) {
    if (f.area < 0) report("negative-area", {f.id}, "face area must be >= 0");
    int b = f.boundary_count();
    if (b < 1 && !(graph_empty && g.closed))
      report("no-boundary", {f.id}, "face must have at least one boundary component");
    if ((f.euler_char + b) % 2 != 0 || f.euler_char + b > 2)
      report("bad-topology", {f.id}, "e_F + b_F must be even and at most 2");
    for (const auto& bc : f.internal_boundaries) {
      if (bc.kind == BoundaryKind::Constrained) {
        if (static_cast<int>(bc.eigenvalues.size()) != g.N)
          report("bad-eigenvalues", {f.id, bc.id}, "constrained boundary needs N eigenvalues");
        for (const auto& z : bc.eigenvalues)
          if (std::abs(std::abs(z) - 1.0) > 1e-12)
            report("bad-eigenvalues", {f.id, bc.id}, "eigenvalue not unit-modulus");
      } else if (!bc.eigenvalues.empty()) {
        report("bad-eigenvalues", {f.id, bc.id}, "free boundary carries no eigenvalues");
      }
    }
  }

  // Boundary components of the surface.
  std::set<std::string> bc_ids;
  int n_internal = 0;
  for (const auto& f : g.faces)
    for (const auto& bc : f.internal_boundaries) {
      ++n_internal;
      if (!bc_ids.insert(bc.id).second)
        report("duplicate-boundary", {bc.id}, "surface boundary component listed twice");
    }
  if (g.closed && n_internal > 0)
    report("closed-with-boundary", {}, "closed surface cannot contain boundary components");
  if (!g.closed && n_internal == 0)
    report("open-without-boundary", {}, "surface with boundary must list its components");
  if ((g.surface_euler_char + n_internal) % 2 != 0 || g.surface_euler_char + n_internal > 2)
    report("bad-surface-topology", {}, "e_Sigma + #boundary must be even and at most 2");

  // Edge references.
  for (const auto& e : g.edges) {
    if (g.face_index(e.left) < 0) report("dangling-face", {e.id, e.left}, "left face missing");
    if (g.face_index(e.right) < 0) report("dangling-face", {e.id, e.right}, "right face missing");
    if (e.kind == EdgeKind::Circular) {
      if (!e.from.empty() || !e.to.empty())
        report("circular-with-endpoints", {e.id}, "circular edge cannot have endpoints");
    } else {
      if (e.from.empty() || e.to.empty())
        report("linear-without-endpoints", {e.id}, "linear edge needs both endpoints");
      if (g.vertex_index(e.from) < 0) report("dangling-vertex", {e.id, e.from}, "initial vertex missing");
      if (g.vertex_index(e.to) < 0) report("dangling-vertex", {e.id, e.to}, "terminal vertex missing");
    }
  }

  // Vertex slots: existence, direction, and side-face consistency.
  std::unordered_map<std::string, int> out_count, in_count;
  for (const auto& v : g.vertices) {
    struct SlotRule {
      Slot slot;
      bool outgoing;
      char left_corner, right_corner;
    };
    // left(ne)=N right(ne)=E; left(nw)=W right(nw)=N;
    // left(sw)=W right(sw)=S; left(se)=S right(se)=E.
    const SlotRule rules[4] = {{Slot::NE, true, 'N', 'E'},
                               {Slot::NW, true, 'W', 'N'},
                               {Slot::SW, false, 'W', 'S'},
                               {Slot::SE, false, 'S', 'E'}};
    for (const auto& r : rules) {
      const std::string& eid = v.edge_at(r.slot);
      int ei = g.edge_index(eid);
      if (ei < 0) {
        report("dangling-edge", {v.id, eid}, "vertex slot references missing edge");
        continue;
      }
      const Edge& e = g.edges[static_cast<size_t>(ei)];
      if (e.kind == EdgeKind::Circular) {
        report("circular-in-slot", {v.id, eid}, "circular edge cannot sit in a vertex slot");
        continue;
      }
      if (r.outgoing) {
        if (e.from != v.id)
          report("slot-direction", {v.id, eid}, "outgoing slot holds edge not starting here");
        out_count[eid]++;
      } else {
        if (e.to != v.id)
          report("slot-direction", {v.id, eid}, "incoming slot holds edge not ending here");
        in_count[eid]++;
      }
      if (e.left != v.face_at_corner(r.left_corner))
        report("side-face", {v.id, eid}, "left face of edge disagrees with vertex corner");
      if (e.right != v.face_at_corner(r.right_corner))
        report("side-face", {v.id, eid}, "right face of edge disagrees with vertex corner");
    }
    for (char c : {'N', 'W', 'S', 'E'})
      if (g.face_index(v.face_at_corner(c)) < 0)
        report("dangling-face", {v.id, v.face_at_corner(c)}, "vertex corner references missing face");
  }
  for (const auto& e : g.edges) {
    if (e.kind != EdgeKind::Linear) continue;
    if (out_count[e.id] != 1 || in_count[e.id] != 1)
      report("slot-count", {e.id}, "linear edge must fill exactly one outgoing and one incoming slot");
  }

  // The remaining checks need a coherent slot structure.
  if (!out.empty()) return out;

  // Euler relation.
  int euler_sum = 0;
  for (const auto& f : g.faces) euler_sum += f.euler_char;
  if (euler_sum - static_cast<int>(g.vertices.size()) != g.surface_euler_char)
    report("euler-relation", {}, "sum of face Euler characteristics minus |V| differs from e_Sigma");

  // Declared external boundary counts against traced walks.
  auto walks = trace_external_boundaries(g);
  for (size_t fi = 0; fi < g.faces.size(); ++fi) {
    if (static_cast<int>(walks[fi].size()) != g.faces[fi].external_boundaries)
      report("external-boundary-count", {g.faces[fi].id},
             "declared " + std::to_string(g.faces[fi].external_boundaries) + " external boundaries, traced " +
                 std::to_string(walks[fi].size()));
    for (const auto& w : walks[fi])
      for (const auto& t : w) {
        const Edge& e = g.edges[static_cast<size_t>(t.edge)];
        const std::string& f = t.forward ? e.left : e.right;
        if (f != g.faces[fi].id)
          report("walk-face", {g.faces[fi].id, e.id}, "boundary walk crosses into another face");
      }
  }

  // Loop words.
  for (size_t li = 0; li < g.loops.size(); ++li) {
    const LoopWord& w = g.loops[li];
    if (w.empty()) {
      report("empty-loop", {std::to_string(li)}, "loop word has no steps");
      continue;
    }
    bool ok = true;
    for (const auto& s : w)
      if (g.edge_index(s.edge) < 0) {
        report("dangling-edge", {std::to_string(li), s.edge}, "loop word references missing edge");
        ok = false;
      }
    if (!ok) continue;
    if (g.edge(w[0].edge).kind == EdgeKind::Circular) {
      if (w.size() != 1)
        report("loop-chain", {std::to_string(li)}, "circular edge must be a loop of its own");
      continue;
    }
    for (size_t k = 0; k < w.size(); ++k) {
      const Edge& a = g.edge(w[k].edge);
      const Edge& b = g.edge(w[(k + 1) % w.size()].edge);
      if (b.kind == EdgeKind::Circular) {
        report("loop-chain", {std::to_string(li)}, "circular edge inside a multi-step loop");
        break;
      }
      const std::string& end = w[k].forward ? a.to : a.from;
      const std::string& begin = w[(k + 1) % w.size()].forward ? b.from : b.to;
      if (end != begin) {
        report("loop-chain", {std::to_string(li)}, "consecutive steps do not share a vertex");
        break;
      }
    }
  }

  return out;
}

}  // namespace ym2d
