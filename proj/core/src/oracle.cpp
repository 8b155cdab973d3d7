#include "ym2d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <map>
#include <thread>

#include "ym2d/errors.hpp"
#include "ym2d/rng.hpp"

namespace ym2d {

namespace {

long ipow_long(int base, int e) {
  long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

Eigen::MatrixXcd perm_action_matrix(const Perm& sigma, int N) {
  const int n = sigma.size();
  const long dim = ipow_long(N, n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  Perm inv = sigma.inverse();
  std::vector<int> digits(static_cast<size_t>(n), 0);
  for (long col = 0; col < dim; ++col) {
    // digits of col, big-endian
    long rem = col;
    for (int k = n - 1; k >= 0; --k) {
      digits[static_cast<size_t>(k)] = static_cast<int>(rem % N);
      rem /= N;
    }
    long row = 0;
    for (int k = 0; k < n; ++k) row = row * N + digits[static_cast<size_t>(inv(k))];
    m(row, col) = 1.0;
  }
  return m;
}

Eigen::MatrixXcd algebra_action_matrix(const GroupAlgebra& a, int N) {
  const int n = a.n();
  const long dim = ipow_long(N, n);
  const SymmetricGroup& sn = GroupAlgebra::table(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int r = 0; r < a.order(); ++r) {
    if (a.coeff(r) == 0) continue;
    m += a.coeff(r).get_d() * perm_action_matrix(sn.at(r), N);
  }
  return m;
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& x, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXcd next(out.rows() * x.rows(), out.cols() * x.cols());
    for (long i = 0; i < out.rows(); ++i)
      for (long j = 0; j < out.cols(); ++j)
        next.block(i * x.rows(), j * x.cols(), x.rows(), x.cols()) = out(i, j) * x;
    out = std::move(next);
  }
  return out;
}

namespace {

/// Exact character of the group algebra element against shape, via
/// Murnaghan-Nakayama on each supported permutation.
mpq_class exact_character(const Partition& shape, const GroupAlgebra& a,
                          std::map<std::vector<int>, long>& cache) {
  const SymmetricGroup& sn = GroupAlgebra::table(a.n());
  mpq_class out = 0;
  for (int r = 0; r < a.order(); ++r) {
    if (a.coeff(r) == 0) continue;
    auto type = sn.at(r).cycle_type();
    auto it = cache.find(type);
    if (it == cache.end()) it = cache.emplace(type, murnaghan_nakayama(shape, type)).first;
    out += a.coeff(r) * it->second;
  }
  return out;
}

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

mpq_class flat_contribution_perm_sum(const SurfaceGraph& g, const WeightConfiguration& c,
                                     int max_boxes) {
  // Box counts; the moment integral vanishes outright unless every edge
  // satisfies r_e = l_e + 1.
  std::map<std::string, long> boxes;
  for (const auto& f : g.faces) {
    const HighestWeight& w = c.at(f.id);
    require_input(w.non_negative(), "perm-sum oracle needs a non-negative configuration");
    boxes[f.id] = w.box_count();
    require_input(boxes[f.id] <= max_boxes, "perm-sum oracle: face box count exceeds the bound");
  }
  for (const auto& e : g.edges)
    if (boxes[e.right] != boxes[e.left] + 1) return mpq_class(0);

  // Dimension prefactors.
  mpq_class pref(1);
  auto pow_q = [](const mpz_class& b, int e) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    if (e >= 0) return mpq_class(p);
    mpq_class q(1, p);
    q.canonicalize();
    return q;
  };
  for (const auto& f : g.faces) {
    const Partition shape = partition_of(c.at(f.id));
    pref *= pow_q(dim_unitary(c.at(f.id)), f.euler_char);
    pref *= pow_q(mpz_class(dim_symmetric(shape)), -f.external_boundaries);
  }
  for (const auto& v : g.vertices) pref *= dim_unitary(c.at(v.east));
  for (const auto& e : g.edges) {
    const Partition shape_r = partition_of(c.at(e.right));
    mpq_class edge_factor(dim_symmetric(shape_r), dim_unitary(c.at(e.right)) * factorial(boxes[e.right]));
    edge_factor.canonicalize();
    pref *= edge_factor;
  }
  for (const auto& e : g.edges) {
    if (e.kind != EdgeKind::Circular) continue;
    const Partition shape_r = partition_of(c.at(e.right));
    const Partition shape_l = partition_of(c.at(e.left));
    const int r = static_cast<int>(boxes[e.right]);
    GroupAlgebra pi_l = projector(shape_l, max_boxes).embedded(r);
    std::map<std::vector<int>, long> cache;
    mpq_class chi_val = exact_character(shape_r, pi_l, cache);
    pref *= factorial(boxes[e.right]) * dim_unitary(c.at(e.right)) * chi_val;
  }

  // Per-vertex character tables f_v(g) = chi^{east}(g * u_v), indexed by
  // the rank of g in S_{n_east}, plus embedded-rank lookup arrays for the
  // four slots so the sigma-sum runs on integer rank arithmetic.
  struct VertexData {
    int n = 0;
    int sw = -1, se = -1, ne = -1, nw = -1;  // linear-edge slot indices into the sigma tuple
    std::vector<int> emb_sw, emb_se, emb_ne_inv, emb_nw_inv;
    std::vector<mpq_class> f;
  };

  std::vector<int> linear_edges;
  std::map<std::string, int> sigma_slot;
  for (size_t ei = 0; ei < g.edges.size(); ++ei)
    if (g.edges[ei].kind == EdgeKind::Linear) {
      sigma_slot[g.edges[ei].id] = static_cast<int>(linear_edges.size());
      linear_edges.push_back(static_cast<int>(ei));
    }
  auto slot_degree = [&](int slot) {
    return static_cast<int>(boxes[g.edges[static_cast<size_t>(linear_edges[static_cast<size_t>(slot)])].right]);
  };

  std::vector<VertexData> verts;
  for (const auto& v : g.vertices) {
    VertexData vd;
    vd.n = static_cast<int>(boxes[v.east]);
    vd.sw = sigma_slot.at(v.sw);
    vd.se = sigma_slot.at(v.se);
    vd.ne = sigma_slot.at(v.ne);
    vd.nw = sigma_slot.at(v.nw);
    const int n = vd.n;
    const Partition sh_n = partition_of(c.at(v.north));
    const Partition sh_w = partition_of(c.at(v.west));
    const Partition sh_s = partition_of(c.at(v.south));
    const Partition sh_e = partition_of(c.at(v.east));
    GroupAlgebra u = projector(sh_n, max_boxes).embedded(n);
    u = u * projector(sh_w, max_boxes).embedded(n);
    u = u * GroupAlgebra::of(Perm::transposition(n, n - 2, n - 1));
    u = u * projector(sh_s, max_boxes).embedded(n);
    u = u * projector(sh_w, max_boxes).embedded(n);
    const SymmetricGroup& sn = GroupAlgebra::table(n);
    std::map<std::vector<int>, long> cache;
    vd.f.resize(static_cast<size_t>(sn.order()));
    for (int r = 0; r < sn.order(); ++r) {
      GroupAlgebra shifted(n);
      for (int h = 0; h < u.order(); ++h) {
        if (u.coeff(h) == 0) continue;
        shifted.coeff(sn.compose_rank(r, h)) += u.coeff(h);
      }
      vd.f[static_cast<size_t>(r)] = exact_character(sh_e, shifted, cache);
    }
    auto embed_ranks = [&](int slot, bool invert) {
      const SymmetricGroup& sr = GroupAlgebra::table(slot_degree(slot));
      std::vector<int> out(static_cast<size_t>(sr.order()));
      for (int i = 0; i < sr.order(); ++i) {
        Perm p = invert ? sr.at(i).inverse() : sr.at(i);
        out[static_cast<size_t>(i)] = sn.rank_of(p.embedded(n));
      }
      return out;
    };
    vd.emb_sw = embed_ranks(vd.sw, false);
    vd.emb_se = embed_ranks(vd.se, false);
    vd.emb_ne_inv = embed_ranks(vd.ne, true);
    vd.emb_nw_inv = embed_ranks(vd.nw, true);
    verts.push_back(std::move(vd));
  }

  // Sum over one permutation per linear edge.
  mpq_class total(0);
  std::vector<long> radix(linear_edges.size(), 1);
  double combos = 1;
  for (size_t k = 0; k < linear_edges.size(); ++k) {
    radix[k] = factorial(slot_degree(static_cast<int>(k))).get_si();
    combos *= static_cast<double>(radix[k]);
  }
  require_input(combos <= 1e8, "perm-sum oracle: combinatorial blowup guard tripped");

  if (linear_edges.empty()) {
    // No linear edges: the sigma-sum is the empty product.
    mpq_class prod(1);
    for (const auto& vd : verts) prod *= vd.f[0];  // identity has rank 0
    return pref * prod;
  }
  std::vector<long> idx(linear_edges.size(), 0);
  mpq_class prod;
  while (true) {
    prod = 1;
    for (const auto& vd : verts) {
      const SymmetricGroup& sn = GroupAlgebra::table(vd.n);
      int rank = vd.emb_sw[static_cast<size_t>(idx[static_cast<size_t>(vd.sw)])];
      rank = sn.compose_rank(rank, vd.emb_se[static_cast<size_t>(idx[static_cast<size_t>(vd.se)])]);
      rank = sn.compose_rank(rank, vd.emb_ne_inv[static_cast<size_t>(idx[static_cast<size_t>(vd.ne)])]);
      rank = sn.compose_rank(rank, vd.emb_nw_inv[static_cast<size_t>(idx[static_cast<size_t>(vd.nw)])]);
      const mpq_class& fval = vd.f[static_cast<size_t>(rank)];
      if (fval == 0) {
        prod = 0;
        break;
      }
      prod *= fval;
    }
    total += prod;
    size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < radix[k]) break;
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
  }

  return pref * total;
}

Eigen::MatrixXcd cs_integral_apply(int n, int N, const Eigen::VectorXcd& w,
                                   const Eigen::VectorXcd& psi) {
  require_input(n >= 1 && n <= 3 && N >= 1 && N <= 3, "cs_integral_apply: size guard (n <= 3, N <= 3)");
  const long dim = ipow_long(N, n);
  require_input(w.size() == dim && psi.size() == dim, "cs_integral_apply: tensor size mismatch");
  const SymmetricGroup& sn = GroupAlgebra::table(n);

  std::vector<Eigen::MatrixXcd> actions;
  actions.reserve(static_cast<size_t>(sn.order()));
  for (int r = 0; r < sn.order(); ++r) actions.push_back(perm_action_matrix(sn.at(r), N));

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  mpz_class nfact = factorial(n);
  for (const Partition& shape : partitions_of(n)) {
    if (static_cast<int>(shape.size()) > N) continue;
    std::vector<int> padded(shape.begin(), shape.end());
    padded.resize(static_cast<size_t>(N), 0);
    const double d_unitary = dim_unitary(HighestWeight(padded)).get_d();
    const double d_sym = static_cast<double>(dim_symmetric(shape));
    GroupAlgebra pi = projector(shape, n);
    Eigen::MatrixXcd pi_action = algebra_action_matrix(pi, N);
    Eigen::MatrixXcd accum = Eigen::MatrixXcd::Zero(dim, dim);
    for (int r = 0; r < sn.order(); ++r) {
      const Eigen::MatrixXcd inv_action = perm_action_matrix(sn.at(r).inverse(), N);
      cplx pairing = psi.transpose() * (inv_action * w);
      accum += pairing * actions[static_cast<size_t>(r)];
    }
    out += (d_sym / d_unitary / nfact.get_d()) * (pi_action * accum);
  }
  return out;
}

McMatrix cs_integral_mc(int n, int N, const Eigen::VectorXcd& w, const Eigen::VectorXcd& psi,
                        long long samples, uint64_t seed) {
  const long dim = ipow_long(N, n);
  require_input(w.size() == dim && psi.size() == dim, "cs_integral_mc: tensor size mismatch");
  Eigen::MatrixXcd e_mat = w * psi.transpose();
  std::vector<Welford> acc_re(static_cast<size_t>(dim * dim)), acc_im(static_cast<size_t>(dim * dim));
  SubstreamRng rng(seed, 0);
  for (long long s = 0; s < samples; ++s) {
    Eigen::MatrixXcd x = rng.haar_unitary(N);
    Eigen::MatrixXcd xn = kron_power(x, n);
    Eigen::MatrixXcd sample = xn * e_mat * xn.adjoint();
    for (long i = 0; i < dim; ++i)
      for (long j = 0; j < dim; ++j) {
        acc_re[static_cast<size_t>(i * dim + j)].add(sample(i, j).real());
        acc_im[static_cast<size_t>(i * dim + j)].add(sample(i, j).imag());
      }
  }
  McMatrix out;
  out.mean.resize(dim, dim);
  out.stderr_re.resize(dim, dim);
  out.stderr_im.resize(dim, dim);
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j) {
      const auto& re = acc_re[static_cast<size_t>(i * dim + j)];
      const auto& im = acc_im[static_cast<size_t>(i * dim + j)];
      out.mean(i, j) = cplx(re.mean, im.mean);
      out.stderr_re(i, j) = re.stderr_of_mean();
      out.stderr_im(i, j) = im.stderr_of_mean();
    }
  return out;
}

std::pair<cplx, cplx> schur_trace_check(const HighestWeight& lambda, const Eigen::MatrixXcd& x) {
  require_input(lambda.non_negative(), "schur_trace_check: weight must be non-negative");
  const int N = static_cast<int>(x.rows());
  require_input(lambda.rank() == N, "schur_trace_check: rank mismatch");
  const long n = lambda.box_count();
  require_input(n <= 4 && N <= 3, "schur_trace_check: size guard (n <= 4, N <= 3)");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(x, false);
  std::vector<cplx> xi(es.eigenvalues().data(), es.eigenvalues().data() + N);
  cplx lhs = schur_eval(lambda, xi);

  const Partition shape = partition_of(lambda);
  GroupAlgebra pi = projector(shape, static_cast<int>(n));
  Eigen::MatrixXcd rhs_mat = kron_power(x, static_cast<int>(n)) * algebra_action_matrix(pi, N);
  cplx rhs = rhs_mat.trace() / static_cast<double>(dim_symmetric(shape));
  return {lhs, rhs};
}

std::pair<double, double> char_trace_check(const Partition& shape, const GroupAlgebra& xi, int N) {
  const long n = partition_weight(shape);
  require_input(n == xi.n(), "char_trace_check: shape and algebra element sizes differ");
  require_input(n <= 4, "char_trace_check: size guard (n <= 4)");
  require_input(static_cast<int>(shape.size()) <= N, "char_trace_check: shape needs at most N rows");

  std::map<std::vector<int>, long> cache;
  double lhs = exact_character(shape, xi, cache).get_d();

  std::vector<int> padded(shape.begin(), shape.end());
  padded.resize(static_cast<size_t>(N), 0);
  GroupAlgebra pi = projector(shape, static_cast<int>(n));
  Eigen::MatrixXcd rhs_mat = algebra_action_matrix(pi * xi, N);
  double rhs = rhs_mat.trace().real() / dim_unitary(HighestWeight(padded)).get_d();
  return {lhs, rhs};
}

namespace {

struct FaceKernel {
  double area = 0.0;
  int euler = 0;
  std::vector<std::vector<Traversal>> walks;
  std::vector<std::vector<cplx>> fixed_args;  // constrained boundary spectra
};

Eigen::MatrixXcd holonomy(const std::vector<Eigen::MatrixXcd>& edge_vars,
                          const std::vector<Traversal>& word, int N) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(N, N);
  // h(e_1^a1 ... e_k^ak) = g_k^ak ... g_1^a1
  for (const auto& step : word) {
    const Eigen::MatrixXcd& m = edge_vars[static_cast<size_t>(step.edge)];
    if (step.forward)
      h = m * h;
    else
      h = m.adjoint() * h;
  }
  return h;
}

}  // namespace

McResult mc_driver_sengupta(const SurfaceGraph& g, const McOptions& opt) {
  auto violations = validate(g);
  if (!violations.empty())
    throw input_error("invalid graph: " + violations.front().kind + " (" + violations.front().detail + ")");
  require_input(opt.samples > 0, "sample count must be positive");

  const int N = g.N;
  auto walks = trace_external_boundaries(g);
  std::vector<FaceKernel> kernels;
  for (size_t fi = 0; fi < g.faces.size(); ++fi) {
    const Face& f = g.faces[fi];
    if (f.has_free_boundary()) continue;
    FaceKernel k;
    k.area = f.area;
    k.euler = f.euler_char;
    k.walks = walks[fi];
    for (const auto& b : f.internal_boundaries)
      if (b.kind == BoundaryKind::Constrained) k.fixed_args.push_back(b.eigenvalues);
    require_input(k.area > 0, "face '" + f.id + "' needs positive area for the Monte Carlo oracle");
    kernels.push_back(std::move(k));
  }

  std::vector<std::vector<Traversal>> loops;
  for (const auto& w : g.loops) {
    std::vector<Traversal> word;
    for (const auto& s : w) word.push_back(Traversal{g.edge_index(s.edge), s.forward});
    loops.push_back(std::move(word));
  }

  SeriesOptions series;
  series.rel_tol = opt.hk_rel_tol;

  auto run_chunk = [&](long long chunk_index, long long count) {
    SubstreamRng rng(opt.seed, static_cast<uint64_t>(chunk_index));
    Welford acc;
    std::vector<Eigen::MatrixXcd> edge_vars(g.edges.size());
    for (long long s = 0; s < count; ++s) {
      for (auto& m : edge_vars) m = rng.haar_unitary(N);
      cplx traces = 1.0;
      for (const auto& word : loops) traces *= holonomy(edge_vars, word, N).trace();
      double kernel_product = 1.0;
      for (const auto& k : kernels) {
        std::vector<std::vector<cplx>> args = k.fixed_args;
        for (const auto& walk : k.walks) {
          Eigen::MatrixXcd h = holonomy(edge_vars, walk, N);
          Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h, false);
          args.emplace_back(es.eigenvalues().data(), es.eigenvalues().data() + N);
        }
        SeriesReport rep;
        double val = heat_kernel_multi(N, k.area, k.euler, args, series, &rep);
        require_input(rep.converged, "heat kernel truncation shells exhausted");
        kernel_product *= val;
      }
      acc.add(traces.real() * kernel_product);
    }
    return acc;
  };

  const long long n_chunks = (opt.samples + opt.chunk - 1) / opt.chunk;
  std::vector<Welford> results(static_cast<size_t>(n_chunks));
  const int threads = std::max(1, opt.threads);
  std::atomic<long long> next{0};
  auto worker = [&]() {
    while (true) {
      long long i = next.fetch_add(1);
      if (i >= n_chunks) break;
      long long begin = i * opt.chunk;
      long long count = std::min(opt.chunk, opt.samples - begin);
      results[static_cast<size_t>(i)] = run_chunk(i, count);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Welford total;
  for (const auto& r : results) total.merge(r);
  return McResult{total.mean, total.stderr_of_mean(), total.count};
}

}  // namespace ym2d
