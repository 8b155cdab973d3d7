#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "ym2d/enumerate.hpp"
#include "ym2d/permutation.hpp"
#include "ym2d/schur.hpp"
#include "ym2d/surface.hpp"
#include "ym2d/symgroup.hpp"

namespace ym2d {

/// Matrix of the permutation action on (C^N)^{tensor n}; basis indices are
/// big-endian digit strings (first factor most significant).
Eigen::MatrixXcd perm_action_matrix(const Perm& sigma, int N);
Eigen::MatrixXcd algebra_action_matrix(const GroupAlgebra& a, int N);
Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& x, int n);

/// Exact permutation-sum evaluation of the flat contribution of a
/// non-negative configuration: dimension prefactors and circular-edge
/// character factors times the sum over one permutation per linear edge of
/// the per-vertex character of
///   sigma_SW sigma_SE sigma_NE^-1 sigma_NW^-1
///     pi^{north} pi^{west} (n-1 n) pi^{south} pi^{west}.
/// Returns exact 0 whenever some edge violates the box-count relation
/// r_e = l_e + 1.  The bound caps the largest face box count.
mpq_class flat_contribution_perm_sum(const SurfaceGraph& g, const WeightConfiguration& c,
                                     int max_boxes = 4);

/// The Haar moment integral of degree (n, n) applied to w tensor psi,
/// materialized on (C^N)^{tensor n} through the symmetric-group expansion.
Eigen::MatrixXcd cs_integral_apply(int n, int N, const Eigen::VectorXcd& w,
                                   const Eigen::VectorXcd& psi);

struct McMatrix {
  Eigen::MatrixXcd mean;
  Eigen::MatrixXd stderr_re;
  Eigen::MatrixXd stderr_im;
};

/// Monte Carlo estimate of the same moment integral.
McMatrix cs_integral_mc(int n, int N, const Eigen::VectorXcd& w, const Eigen::VectorXcd& psi,
                        long long samples, uint64_t seed);

/// Returns (schur_eval at the eigenvalues of x, tensor trace of x pi^lambda
/// divided by d^lambda).
std::pair<cplx, cplx> schur_trace_check(const HighestWeight& lambda, const Eigen::MatrixXcd& x);

/// Returns (character of xi on V^shape, tensor trace of pi^shape xi divided
/// by the unitary dimension).
std::pair<double, double> char_trace_check(const Partition& shape, const GroupAlgebra& xi, int N);

struct McOptions {
  long long samples = 100000;
  uint64_t seed = 0;
  double hk_rel_tol = 1e-10;
  int threads = 1;
  long long chunk = 4096;
};

struct McResult {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  long long samples = 0;
};

/// Monte Carlo Driver-Sengupta integration: Haar-samples one unitary per
/// edge and averages the product of loop traces and per-face multivariate
/// heat kernels (evaluated by truncated character sums at the traced
/// boundary-walk holonomies and constrained boundary conditions).
/// Deterministic for a fixed seed, independent of the thread count.
McResult mc_driver_sengupta(const SurfaceGraph& g, const McOptions& opt);

}  // namespace ym2d
