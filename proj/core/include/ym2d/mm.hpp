#pragma once

#include <string>

#include "ym2d/enumerate.hpp"
#include "ym2d/evaluate.hpp"
#include "ym2d/surface.hpp"

namespace ym2d {

/// The alternating area derivative d/d|N| - d/d|W| + d/d|S| - d/d|E| at a
/// vertex, applied termwise to the expectation and evaluated at the stored
/// areas.  A face occupying several corners of v is differentiated once per
/// corner with that corner's sign.
double mm_lhs(const SurfaceGraph& g, const std::string& vertex_id, const Truncation& trunc);

/// The graph desingularized at v: the crossing is removed, the incoming SW
/// strand is rejoined to the outgoing NW strand and SE to NE, and the north
/// and south faces merge into one face of added area with Euler
/// characteristic e_N + e_S - 1 (e_N - 1 when north and south are the same
/// face).  Loop-word metadata is dropped.  The output passes validate.
SurfaceGraph desingularize(const SurfaceGraph& g, const std::string& vertex_id);

struct MmReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  bool per_term_ok = true;
  long terms_checked = 0;
};

/// Two-path check of the Makeenko-Migdal equation at a vertex: the
/// termwise derivative against 1/N times the expectation of the
/// desingularized graph (evaluated independently through the full
/// pipeline), plus the exact per-term rational identity.
MmReport mm_check(const SurfaceGraph& g, const std::string& vertex_id, const Truncation& trunc);

}  // namespace ym2d
