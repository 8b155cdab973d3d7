#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "ym2d/enumerate.hpp"
#include "ym2d/schur.hpp"
#include "ym2d/surface.hpp"

namespace ym2d {

/// The angle data of a vertex under a balanced configuration: contents of
/// the two boxes east/north and north/west, the exact rational cosine
/// 1/(c1 - c2), and the vertex type (1 when the north and south weights
/// coincide).
struct VertexAngleData {
  int c1 = 0;
  int c2 = 0;
  mpq_class cos_value;
  int vertex_type = 1;
};

VertexAngleData vertex_angle(const SurfaceGraph& g, const WeightConfiguration& c, const Vertex& v);

/// One summand of the expectation: the exact rational flat contribution,
/// the per-face Casimir numbers driving the area exponentials, and the
/// boundary Schur factor.
struct ExactTerm {
  WeightConfiguration weights;
  mpq_class flat;
  std::map<std::string, mpz_class> casimirs;
  std::complex<double> schur_boundary{1.0, 0.0};

  /// Value of the term at the given areas: flat * schur * exp(-sum A c / 2N).
  std::complex<double> value_at(const SurfaceGraph& g) const;
};

struct SymbolicExpectation {
  int N = 1;
  std::vector<ExactTerm> terms;
  TruncationReport truncation;

  /// Numeric value at the graph's stored areas (compensated summation in
  /// enumeration order).
  std::complex<double> value(const SurfaceGraph& g) const;
};

/// Exact rational flat contribution of a configuration, in the all-integer
/// dimension form: prod_F d^e_F * prod_{linear e} d_{right}^{-1} *
/// prod_v d_{east} * prod_v a(v), with the type-2 sine factors grouped by
/// unordered level-line label pairs (each pair has even multiplicity 2k and
/// contributes (1 - 1/(c1-c2)^2)^k exactly).  Returns 0 when the
/// configuration is not balanced.
mpq_class flat_contribution(const SurfaceGraph& g, const WeightConfiguration& c);

/// The full expectation: one exact term per enumerated balanced
/// configuration.
SymbolicExpectation wilson_expectation(const SurfaceGraph& g, const Truncation& trunc);

/// Partition function of the graph's underlying surface (total area, Euler
/// characteristic, boundary conditions read off the face data).
double graph_partition_function(const SurfaceGraph& g, const SeriesOptions& opt = {},
                                SeriesReport* rep = nullptr);

/// wilson_expectation value divided by the partition function.
std::complex<double> normalized_expectation(const SurfaceGraph& g, const Truncation& trunc,
                                            const SeriesOptions& opt = {});

}  // namespace ym2d
