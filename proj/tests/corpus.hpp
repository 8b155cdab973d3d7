#pragma once

// The bundled family of small loop configurations used across the test and
// acceptance suites.

#include "ym2d/planar.hpp"
#include "ym2d/surface.hpp"

namespace ym2d::corpus {

/// One embedded circle in a disk, interior of area t on its right.
inline SurfaceGraph disk_simple_loop(int N, double t) {
  SurfaceGraph g = from_circle_forest(N, {"c"}, {-1});
  set_area(g, "Fc", t);
  return g;
}

/// One curve with one self-crossing; lobe areas s (east) and t (west).
inline SurfaceGraph disk_figure_eight(int N, double s, double t) {
  SurfaceGraph g = from_planar_diagram(
      N, {Crossing{"v0", /*ne=*/"eA", /*nw=*/"eB", /*sw=*/"eB", /*se=*/"eA"}}, OuterMark{"eA", true});
  set_area(g, g.vertices[0].east, s);
  set_area(g, g.vertices[0].west, t);
  return g;
}

/// Two nested circles; ring area t1, inner disk area t2.
inline SurfaceGraph disk_nested_loops(int N, double t1, double t2) {
  SurfaceGraph g = from_circle_forest(N, {"c1", "c2"}, {-1, 0});
  set_area(g, "Fc1", t1);
  set_area(g, "Fc2", t2);
  return g;
}

/// Two disjoint circles side by side, areas t1 and t2.
inline SurfaceGraph disk_disjoint_loops(int N, double t1, double t2) {
  SurfaceGraph g = from_circle_forest(N, {"c1", "c2"}, {-1, -1});
  set_area(g, "Fc1", t1);
  set_area(g, "Fc2", t2);
  return g;
}

/// Two circles crossing twice (the 2-gon): faces are two lunes and the
/// middle bigon.
inline SurfaceGraph disk_two_gon(int N, double lune1, double lune2, double middle) {
  SurfaceGraph g = from_planar_diagram(N,
                                       {Crossing{"u", "a1", "b1", "a2", "b2"},
                                        Crossing{"w", "b2", "a2", "b1", "a1"}},
                                       OuterMark{"a2", true});
  // a1 separates the right lune (left side) from the middle (right side).
  set_area(g, g.edge("a1").left, lune1);
  set_area(g, g.edge("b2").left, lune2);
  set_area(g, g.edge("a1").right, middle);
  return g;
}

/// The 3-crossing closure of the 2-strand braid (trefoil shadow): two
/// bigons, two triangles, and the outer face.
inline SurfaceGraph disk_trefoil(int N, double area) {
  SurfaceGraph g = from_planar_diagram(N,
                                       {Crossing{"c1", "l1", "r1", "r3", "l3"},
                                        Crossing{"c2", "l2", "r2", "r1", "l1"},
                                        Crossing{"c3", "l3", "r3", "r2", "l2"}},
                                       OuterMark{"l3", true});
  for (auto& f : g.faces)
    if (f.id != "OUT") f.area = area;
  return g;
}

/// A single meridian on the torus; the complement is a cylinder and the
/// edge has the same face on both sides.
inline SurfaceGraph torus_meridian(int N, double t) {
  SurfaceGraph g;
  g.N = N;
  g.closed = true;
  g.surface_euler_char = 0;
  Face f;
  f.id = "F";
  f.area = t;
  f.euler_char = 0;
  f.external_boundaries = 2;
  g.faces.push_back(f);
  Edge e;
  e.id = "m";
  e.kind = EdgeKind::Circular;
  e.left = "F";
  e.right = "F";
  g.edges.push_back(e);
  g.loops.push_back(LoopWord{LoopStep{"m", true}});
  return g;
}

/// Two parallel, equally oriented meridians on the torus (total homology
/// class twice a generator).
inline SurfaceGraph torus_double_meridian(int N, double t1, double t2) {
  SurfaceGraph g;
  g.N = N;
  g.closed = true;
  g.surface_euler_char = 0;
  for (const char* id : {"F1", "F2"}) {
    Face f;
    f.id = id;
    f.area = (id[1] == '1') ? t1 : t2;
    f.euler_char = 0;
    f.external_boundaries = 2;
    g.faces.push_back(f);
  }
  Edge m1{"m1", EdgeKind::Circular, "F1", "F2", "", ""};
  Edge m2{"m2", EdgeKind::Circular, "F2", "F1", "", ""};
  g.edges.push_back(m1);
  g.edges.push_back(m2);
  g.loops.push_back(LoopWord{LoopStep{"m1", true}});
  g.loops.push_back(LoopWord{LoopStep{"m2", true}});
  return g;
}

/// A simple loop splitting the sphere into two disks of areas t1 and t2.
inline SurfaceGraph sphere_loop(int N, double t1, double t2) {
  SurfaceGraph g;
  g.N = N;
  g.closed = true;
  g.surface_euler_char = 2;
  for (const char* id : {"A", "B"}) {
    Face f;
    f.id = id;
    f.area = (id[0] == 'A') ? t1 : t2;
    f.euler_char = 1;
    f.external_boundaries = 1;
    g.faces.push_back(f);
  }
  Edge e{"c", EdgeKind::Circular, "A", "B", "", ""};
  g.edges.push_back(e);
  g.loops.push_back(LoopWord{LoopStep{"c", true}});
  return g;
}

/// The empty graph on a disk with a free boundary.
inline SurfaceGraph empty_disk(int N) {
  SurfaceGraph g;
  g.N = N;
  g.closed = false;
  g.surface_euler_char = 1;
  Face f;
  f.id = "OUT";
  f.area = 0.0;
  f.euler_char = 1;
  f.external_boundaries = 0;
  f.internal_boundaries.push_back(BoundaryComponent{"B0", BoundaryKind::Free, {}});
  g.faces.push_back(f);
  return g;
}

/// The empty graph on a sphere of area t.
inline SurfaceGraph empty_sphere(int N, double t) {
  SurfaceGraph g;
  g.N = N;
  g.closed = true;
  g.surface_euler_char = 2;
  Face f;
  f.id = "S";
  f.area = t;
  f.euler_char = 2;
  f.external_boundaries = 0;
  g.faces.push_back(f);
  return g;
}

/// The disk graphs of the cross-oracle corpus, by name.
inline std::vector<std::pair<std::string, SurfaceGraph>> oracle_corpus(int N) {
  return {
      {"simple-loop", disk_simple_loop(N, 1.0)},
      {"figure-eight", disk_figure_eight(N, 1.0, 1.0)},
      {"nested-loops", disk_nested_loops(N, 1.0, 1.0)},
      {"disjoint-loops", disk_disjoint_loops(N, 1.0, 1.0)},
      {"two-gon", disk_two_gon(N, 1.0, 1.0, 1.0)},
      {"trefoil", disk_trefoil(N, 1.0)},
  };
}

}  // namespace ym2d::corpus
