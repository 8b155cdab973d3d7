#pragma once

#include <complex>
#include <vector>

#include "ym2d/weights.hpp"

namespace ym2d {

using cplx = std::complex<double>;

/// Schur character of U(N) at a unitary argument given by its eigenvalues.
/// Uses the bialternant quotient for well-separated spectra; coincident
/// eigenvalues switch to a Jacobi-Trudi determinant after factoring out a
/// power of the determinant to reach a non-negative weight.
cplx schur_eval(const HighestWeight& lambda, const std::vector<cplx>& eigenvalues);

struct SeriesOptions {
  double rel_tol = 1e-12;
  int max_shell = 64;
};

struct SeriesReport {
  int last_shell = 0;
  bool converged = true;
  double imag_residue = 0.0;
};

/// The character heat-kernel series p_t(x) = sum e^{-tc/2N} d s(x),
/// summed over shells of growing component window until the newest shell
/// contributes less than rel_tol of the accumulated value.
double heat_kernel(int N, double t, const std::vector<cplx>& eigenvalues,
                   const SeriesOptions& opt = {}, SeriesReport* rep = nullptr);

/// The multivariate kernel p_t^{b,e}(x_1,...,x_b) =
/// sum e^{-tc/2N} d^e s(x_1)...s(x_b); the partition function of a surface
/// of area t, Euler characteristic e, and b boundary components.
double heat_kernel_multi(int N, double t, int euler_char, const std::vector<std::vector<cplx>>& args,
                         const SeriesOptions& opt = {}, SeriesReport* rep = nullptr);

/// Yang-Mills partition function of a surface: exactly 1 when any boundary
/// component is free; otherwise the multivariate kernel at the constrained
/// boundary conditions (no boundary at all: the closed-surface value).
double partition_function(int N, int surface_euler_char, double total_area,
                          const std::vector<std::vector<cplx>>& constrained, bool any_free_boundary,
                          const SeriesOptions& opt = {}, SeriesReport* rep = nullptr);

}  // namespace ym2d
