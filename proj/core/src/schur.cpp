#include "ym2d/schur.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ym2d/errors.hpp"

namespace ym2d {

namespace {

cplx ipow(cplx z, long e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  cplx r = 1.0;
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

cplx bialternant(const HighestWeight& lambda, const std::vector<cplx>& xi) {
  const int n = lambda.rank();
  Eigen::MatrixXcd num(n, n), den(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      num(i, j) = ipow(xi[static_cast<size_t>(i)], lambda[j] + n - (j + 1));
      den(i, j) = ipow(xi[static_cast<size_t>(i)], n - (j + 1));
    }
  return num.determinant() / den.determinant();
}

cplx jacobi_trudi(const HighestWeight& lambda, const std::vector<cplx>& xi) {
  const int n = lambda.rank();
  const int q = lambda[n - 1];
  // Power sums, then complete homogeneous functions by Newton's identity.
  const int hmax = (lambda[0] - q) + n;
  std::vector<cplx> p(static_cast<size_t>(hmax) + 1, 0.0), h(static_cast<size_t>(hmax) + 1, 0.0);
  for (int j = 1; j <= hmax; ++j)
    for (const cplx& x : xi) p[static_cast<size_t>(j)] += ipow(x, j);
  h[0] = 1.0;
  for (int k = 1; k <= hmax; ++k) {
    cplx s = 0.0;
    for (int j = 1; j <= k; ++j) s += p[static_cast<size_t>(j)] * h[static_cast<size_t>(k - j)];
    h[static_cast<size_t>(k)] = s / static_cast<double>(k);
  }
  auto hom = [&](int k) -> cplx {
    if (k < 0) return 0.0;
    return h[static_cast<size_t>(k)];
  };
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = hom(lambda[i] - q - (i + 1) + (j + 1));
  cplx det_pow = 1.0;
  for (const cplx& x : xi) det_pow *= x;
  return ipow(det_pow, q) * m.determinant();
}

}  // namespace

cplx schur_eval(const HighestWeight& lambda, const std::vector<cplx>& xi) {
  const int n = lambda.rank();
  require_input(static_cast<int>(xi.size()) == n, "schur_eval: need exactly N eigenvalues");
  for (const cplx& x : xi)
    require_input(std::abs(std::abs(x) - 1.0) <= 1e-8, "schur_eval: eigenvalue not unit-modulus");
  double sep = 1e9;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sep = std::min(sep, std::abs(xi[static_cast<size_t>(i)] - xi[static_cast<size_t>(j)]));
  if (n > 1 && sep <= 1e-6) return jacobi_trudi(lambda, xi);
  return bialternant(lambda, xi);
}

namespace {

struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double heat_kernel_multi(int N, double t, int euler_char, const std::vector<std::vector<cplx>>& args,
                         const SeriesOptions& opt, SeriesReport* rep) {
  require_input(N >= 1, "heat_kernel: N must be positive");
  require_input(t > 0, "heat_kernel: time must be positive");
  Kahan re, im;
  bool converged = false;
  int shell = 0;
  for (; shell <= opt.max_shell; ++shell) {
    double shell_abs = 0.0;
    for (const HighestWeight& w : all_weights_in_shell(N, shell)) {
      const double expo = std::exp(-t * casimir(w).get_d() / (2.0 * N));
      const double d = dim_unitary(w).get_d();
      cplx term = expo * std::pow(d, euler_char);
      for (const auto& x : args) term *= schur_eval(w, x);
      re.add(term.real());
      im.add(term.imag());
      shell_abs += std::abs(term);
    }
    double scale = std::max(std::abs(re.sum), 1.0);
    if (shell >= 1 && shell_abs < opt.rel_tol * scale) {
      converged = true;
      break;
    }
  }
  if (rep) {
    rep->last_shell = std::min(shell, opt.max_shell);
    rep->converged = converged;
    rep->imag_residue = std::abs(im.sum);
  }
  return re.sum;
}

double heat_kernel(int N, double t, const std::vector<cplx>& eigenvalues, const SeriesOptions& opt,
                   SeriesReport* rep) {
  return heat_kernel_multi(N, t, 1, {eigenvalues}, opt, rep);
}

double partition_function(int N, int surface_euler_char, double total_area,
                          const std::vector<std::vector<cplx>>& constrained, bool any_free_boundary,
                          const SeriesOptions& opt, SeriesReport* rep) {
  if (any_free_boundary) {
    if (rep) *rep = SeriesReport{};
    return 1.0;
  }
  const int b = static_cast<int>(constrained.size());
  require_input((surface_euler_char + b) % 2 == 0 && surface_euler_char + b <= 2,
                "partition_function: e + b must be even and at most 2");
  require_input(total_area > 0, "partition_function: divergent request (no boundary, zero area)");
  return heat_kernel_multi(N, total_area, surface_euler_char, constrained, opt, rep);
}

}  // namespace ym2d
