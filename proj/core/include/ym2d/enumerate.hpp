#pragma once

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ym2d/surface.hpp"
#include "ym2d/weights.hpp"

namespace ym2d {

/// An assignment of one highest weight to every face of a graph.
struct WeightConfiguration {
  std::map<std::string, HighestWeight> assignment;

  const HighestWeight& at(const std::string& face) const;
  friend bool operator==(const WeightConfiguration&, const WeightConfiguration&) = default;
  friend auto operator<=>(const WeightConfiguration&, const WeightConfiguration&) = default;
};

WeightConfiguration shift(const WeightConfiguration& c, int q);

enum class TruncationMode { Anchored, BoxBound };

/// Anchored mode pins every face containing a free boundary component to
/// the zero weight and enumerates the (finite) remainder exactly.
/// BoxBound mode additionally sweeps the reference face over the window
/// and keeps every component of every weight within [-max_box, max_box].
struct Truncation {
  TruncationMode mode = TruncationMode::Anchored;
  int max_box = 0;

  static Truncation anchored() { return Truncation{TruncationMode::Anchored, 0}; }
  static Truncation box_bound(int m) { return Truncation{TruncationMode::BoxBound, m}; }
};

struct TruncationReport {
  TruncationMode mode = TruncationMode::Anchored;
  int window = 0;
  bool weak_balance_failed = false;
  bool truncated = false;
  /// Lower bound on sum_F |F| c_{lambda_F} / (2N) over the configurations
  /// discarded at the window boundary; +inf when nothing was discarded.
  double min_discarded_rate = std::numeric_limits<double>::infinity();
};

/// True iff an integer potential n with n_{right(e)} = n_{left(e)} + 1 for
/// every edge exists on the faces.  False implies there is no balanced
/// configuration at all.
bool check_weak_balance(const SurfaceGraph& g);

/// Streams every balanced configuration vanishing at the free boundary
/// within the truncation window, each exactly once, in a deterministic
/// order.  The callback may return false to stop early.
void enumerate_balanced(const SurfaceGraph& g, const Truncation& trunc,
                        const std::function<bool(const WeightConfiguration&)>& emit,
                        TruncationReport* report = nullptr);

/// Convenience: collects the stream into a vector.
std::vector<WeightConfiguration> enumerate_balanced(const SurfaceGraph& g, const Truncation& trunc,
                                                    TruncationReport* report = nullptr);

/// True iff lambda_left -> lambda_right across every edge and every face
/// containing a free boundary component carries the zero weight.
bool is_balanced(const SurfaceGraph& g, const WeightConfiguration& c);

/// The label (i, a) of an edge under a balanced configuration: i is the
/// coordinate where the right weight extends the left one, a its new value.
struct EdgeLabel {
  int index = 0;  // 1-based coordinate
  int value = 0;
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

EdgeLabel edge_label(const SurfaceGraph& g, const WeightConfiguration& c, const std::string& edge_id);

/// A maximal cycle of edges sharing one label.
struct LevelLine {
  EdgeLabel label;
  std::vector<std::string> edges;
};

/// Partitions the edge set into level lines.  At a type-2 vertex two lines
/// with distinct coordinates cross transversally; at a type-1 vertex each
/// line bounces without crossing.
std::vector<LevelLine> level_lines(const SurfaceGraph& g, const WeightConfiguration& c);

/// Labels of the two level lines crossing at a vertex (the NE and NW
/// outgoing edge labels).  Only meaningful data for type-2 vertices.
std::pair<EdgeLabel, EdgeLabel> crossing_labels(const SurfaceGraph& g, const WeightConfiguration& c,
                                                const Vertex& v);

}  // namespace ym2d
