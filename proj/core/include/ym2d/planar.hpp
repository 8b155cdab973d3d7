#pragma once

#include <string>
#include <vector>

#include "ym2d/surface.hpp"

namespace ym2d {

/// One crossing of a planar 4-valent diagram: the ids of the four edges in
/// the NE, NW, SW, SE slots (NE and NW leave the crossing, SW and SE
/// arrive; over/under information plays no role).
struct Crossing {
  std::string id;
  std::string ne, nw, sw, se;
};

/// Designates the unbounded region of the plane as the face lying on the
/// given side of the given edge.
struct OuterMark {
  std::string edge;
  bool left = true;
};

/// Builds the graph of a connected 4-valent diagram drawn in a disk with a
/// free boundary.  Faces are traced from the crossing data; every bounded
/// face becomes a disk (e = 1), the outer face an annulus (e = 0) carrying
/// the free boundary component.  Face ids are "F0", "F1", ... in tracing
/// order and "OUT"; areas start at 0 and can be set afterwards.  The loop
/// words of the immersed curves are traced and stored as metadata.
/// Throws input_error on dangling half-edges or a non-planar pairing.
SurfaceGraph from_planar_diagram(int N, const std::vector<Crossing>& crossings, const OuterMark& outer);

/// Builds the graph of disjoint embedded circles in a disk, nested
/// according to a forest: parent[i] is the index of the circle immediately
/// enclosing circle i, or -1 for outermost circles.  Every circle is
/// oriented with its interior on the right.  The face inside circle i
/// (and outside its children) gets id "F<circle id>"; the unbounded face
/// gets id "OUT" and the free boundary.
SurfaceGraph from_circle_forest(int N, const std::vector<std::string>& circle_ids,
                                const std::vector<int>& parent);

/// Sets the area of the face with the given id.
void set_area(SurfaceGraph& g, const std::string& face_id, double area);

}  // namespace ym2d
