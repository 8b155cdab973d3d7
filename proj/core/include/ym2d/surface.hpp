#pragma once

#include <complex>
#include <string>
#include <unordered_map>
#include <vector>

namespace ym2d {

enum class BoundaryKind { Free, Constrained };

/// A boundary component of the underlying surface, listed inside the face
/// that contains it.  Constrained components carry the spectrum of the
/// boundary condition (N unit-modulus eigenvalues).
struct BoundaryComponent {
  std::string id;
  BoundaryKind kind = BoundaryKind::Free;
  std::vector<std::complex<double>> eigenvalues;
};

/// A face of the graph together with the topology of its blow-up: Euler
/// characteristic, number of external boundary components (those traced by
/// the loop configuration) and the boundary components of the surface that
/// lie inside it.  The area is an input, not derived geometry.
struct Face {
  std::string id;
  double area = 0.0;
  int euler_char = 1;
  int external_boundaries = 0;
  std::vector<BoundaryComponent> internal_boundaries;

  int boundary_count() const {
    return external_boundaries + static_cast<int>(internal_boundaries.size());
  }
  bool has_free_boundary() const {
    for (const auto& b : internal_boundaries)
      if (b.kind == BoundaryKind::Free) return true;
    return false;
  }
};

enum class EdgeKind { Linear, Circular };

/// An oriented edge with the faces immediately on its left and right.
/// Circular edges (isolated embedded loops) have no endpoints; closed
/// linear edges have equal ones.
struct Edge {
  std::string id;
  EdgeKind kind = EdgeKind::Linear;
  std::string left, right;
  std::string from, to;  // empty for circular edges
};

enum class Slot { NE, NW, SW, SE };

/// A 4-valent vertex.  The two outgoing edges sit in the NE and NW slots,
/// the two incoming ones in SW and SE; slots are listed in counterclockwise
/// order NE, NW, SW, SE, and the cardinal faces sit between consecutive
/// slots (N between NE and NW, and so on around).
struct Vertex {
  std::string id;
  std::string north, west, south, east;
  std::string ne, nw, sw, se;

  const std::string& edge_at(Slot s) const;
  const std::string& face_at_corner(char cardinal) const;  // 'N','W','S','E'
};

struct LoopStep {
  std::string edge;
  bool forward = true;
};
using LoopWord = std::vector<LoopStep>;

struct SurfaceGraph {
  int N = 1;
  int surface_euler_char = 2;
  bool closed = true;
  std::vector<Face> faces;
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;
  /// Optional metadata: the loops of the configuration as edge words.
  /// Only the Monte Carlo oracle consumes them.
  std::vector<LoopWord> loops;

  int face_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  int vertex_index(const std::string& id) const;
  const Face& face(const std::string& id) const;
  const Edge& edge(const std::string& id) const;
  const Vertex& vertex(const std::string& id) const;

  double total_area() const;
};

/// One validation failure; validation reports data rather than throwing.
struct Violation {
  std::string kind;
  std::vector<std::string> ids;
  std::string detail;
};

/// Checks every structural invariant of the graph: slot and side-face
/// consistency, the Euler relation sum_F e_F - |V| = e_Sigma, parity and
/// count constraints on face boundary data, agreement of the declared
/// external boundary counts with the traced ones, boundary-component
/// placement, and loop-word chaining.  Empty result means valid.
std::vector<Violation> validate(const SurfaceGraph& g);

/// A directed traversal of an edge, identified by edge index.
struct Traversal {
  int edge = -1;
  bool forward = true;
  friend bool operator==(const Traversal&, const Traversal&) = default;
};

/// External boundary walks of every face, traced by the next-corner rule:
/// result[f] lists the closed walks bounding face f positively (face on the
/// left of the walk).  Works on any graph whose slot data is consistent.
std::vector<std::vector<std::vector<Traversal>>> trace_external_boundaries(const SurfaceGraph& g);

}  // namespace ym2d
