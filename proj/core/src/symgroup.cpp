#include "ym2d/symgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ym2d/errors.hpp"

namespace ym2d {

Partition partition_of(const HighestWeight& w) {
  require_input(w.non_negative(), "partition view needs a non-negative weight");
  Partition p;
  for (int c : w.components())
    if (c > 0) p.push_back(c);
  return p;
}

long partition_weight(const Partition& p) {
  long n = 0;
  for (int c : p) n += c;
  return n;
}

bool partition_extends(const Partition& lambda, const Partition& mu) {
  if (mu.size() != lambda.size() && mu.size() != lambda.size() + 1) return false;
  int diffs = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    int lo = i < lambda.size() ? lambda[i] : 0;
    if (mu[i] == lo) continue;
    if (mu[i] == lo + 1)
      ++diffs;
    else
      return false;
  }
  return diffs == 1;
}

int partition_content(const Partition& lambda, const Partition& mu) {
  require_input(partition_extends(lambda, mu), "partition_content: no single-box extension");
  for (size_t i = 0; i < mu.size(); ++i) {
    int lo = i < lambda.size() ? lambda[i] : 0;
    if (mu[i] != lo) return mu[i] - static_cast<int>(i) - 1;
  }
  throw internal_error("partition_content: unreachable");
}

std::vector<Partition> partition_extensions(const Partition& p) {
  std::vector<Partition> out;
  for (size_t i = 0; i <= p.size(); ++i) {
    Partition q = p;
    if (i == p.size())
      q.push_back(1);
    else
      q[i] += 1;
    bool ok = true;
    for (size_t j = 1; j < q.size(); ++j)
      if (q[j] > q[j - 1]) ok = false;
    if (ok) out.push_back(std::move(q));
  }
  return out;
}

std::vector<Partition> partition_restrictions(const Partition& p) {
  std::vector<Partition> out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i] == p[i + 1]) continue;  // not a removable corner
    Partition q = p;
    q[i] -= 1;
    if (q[i] == 0) q.erase(q.begin() + static_cast<long>(i));
    out.push_back(std::move(q));
  }
  return out;
}

namespace {

void gen_partitions(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  require_input(n >= 0, "partitions_of: negative n");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

namespace {

void gen_tableaux(const Partition& shape, std::vector<int>& rows, std::vector<StandardTableau>& out) {
  long n = partition_weight(shape);
  if (n == 0) {
    StandardTableau t;
    t.rows = rows;  // reversed order: rows[k] currently holds box n-k
    std::reverse(t.rows.begin(), t.rows.end());
    out.push_back(std::move(t));
    return;
  }
  for (size_t i = 0; i < shape.size(); ++i) {
    bool corner = (i + 1 == shape.size()) || shape[i] > shape[i + 1];
    if (!corner) continue;
    Partition sub = shape;
    sub[i] -= 1;
    if (sub[i] == 0) sub.erase(sub.begin() + static_cast<long>(i));
    rows.push_back(static_cast<int>(i) + 1);
    gen_tableaux(sub, rows, out);
    rows.pop_back();
  }
}

void finish_tableau(StandardTableau& t, const Partition& shape) {
  t.shape = shape;
  t.contents.resize(t.rows.size());
  std::vector<int> row_fill(shape.size() + 1, 0);
  for (size_t k = 0; k < t.rows.size(); ++k) {
    int r = t.rows[k];
    row_fill[static_cast<size_t>(r)] += 1;
    t.contents[k] = row_fill[static_cast<size_t>(r)] - r;  // column - row
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  for (size_t j = 1; j < shape.size(); ++j)
    require_input(shape[j] <= shape[j - 1] && shape[j] > 0, "not a partition");
  std::vector<StandardTableau> out;
  std::vector<int> rows;
  gen_tableaux(shape, rows, out);
  for (auto& t : out) finish_tableau(t, shape);
  // Fixed basis order: content sequences, descending lexicographic.
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) { return a.contents > b.contents; });
  return out;
}

std::vector<StandardTableau> standard_tableaux(const HighestWeight& shape) {
  return standard_tableaux(partition_of(shape));
}

long dim_symmetric(const Partition& shape) {
  // Hook length formula.
  long n = partition_weight(shape);
  if (n == 0) return 1;
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class den = 1;
  std::vector<int> conj(static_cast<size_t>(shape[0]), 0);
  for (int part : shape)
    for (int j = 0; j < part; ++j) conj[static_cast<size_t>(j)] += 1;
  for (size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) {
      long hook = (shape[i] - j - 1) + (conj[static_cast<size_t>(j)] - static_cast<long>(i) - 1) + 1;
      den *= hook;
    }
  mpz_class d;
  require_internal(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0, "hook length division failed");
  mpz_divexact(d.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return d.get_si();
}

namespace {

long mn_recurse(const Partition& shape, const std::vector<int>& parts, size_t pi) {
  if (pi == parts.size()) return shape.empty() ? 1 : 0;
  int r = parts[pi];
  const int l = static_cast<int>(shape.size());
  if (l == 0) return 0;
  std::vector<long> beta(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = shape[static_cast<size_t>(i)] + (l - 1 - i);
  long total = 0;
  for (int i = 0; i < l; ++i) {
    long t = beta[static_cast<size_t>(i)] - r;
    if (t < 0) continue;
    bool clash = false;
    int between = 0;
    for (int j = 0; j < l; ++j) {
      if (j == i) continue;
      if (beta[static_cast<size_t>(j)] == t) clash = true;
      if (beta[static_cast<size_t>(j)] > t && beta[static_cast<size_t>(j)] < beta[static_cast<size_t>(i)]) ++between;
    }
    if (clash) continue;
    std::vector<long> nb = beta;
    nb[static_cast<size_t>(i)] = t;
    std::sort(nb.rbegin(), nb.rend());
    Partition sub;
    for (int j = 0; j < l; ++j) {
      long part = nb[static_cast<size_t>(j)] - (l - 1 - j);
      if (part > 0) sub.push_back(static_cast<int>(part));
    }
    long rec = mn_recurse(sub, parts, pi + 1);
    total += (between % 2 == 0) ? rec : -rec;
  }
  return total;
}

}  // namespace

long murnaghan_nakayama(const Partition& shape, const std::vector<int>& cycle_type) {
  require_input(partition_weight(shape) == partition_weight(cycle_type),
                "murnaghan_nakayama: size mismatch");
  std::vector<int> parts = cycle_type;
  std::sort(parts.rbegin(), parts.rend());
  return mn_recurse(shape, parts, 0);
}

const Eigen::MatrixXd& OrthogonalRep::generator(int k) const {
  require_input(k >= 2 && k <= n, "generator index out of range");
  return generators[static_cast<size_t>(k - 2)];
}

Eigen::MatrixXd OrthogonalRep::matrix_of(const Perm& sigma) const {
  require_input(sigma.size() == n, "matrix_of: permutation acts on the wrong set");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
  std::vector<int> img = sigma.images();
  // Bubble-sort the one-line word; each swap right-multiplies by an
  // adjacent transposition, so the matrices accumulate on the left.
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t j = 0; j + 1 < img.size(); ++j) {
      if (img[j] <= img[j + 1]) continue;
      std::swap(img[j], img[j + 1]);
      m = generators[j] * m;
      moved = true;
    }
  }
  return m;
}

OrthogonalRep orthogonal_rep(const Partition& shape) {
  OrthogonalRep rep;
  rep.shape = shape;
  rep.n = static_cast<int>(partition_weight(shape));
  rep.tableaux = standard_tableaux(shape);
  rep.dim = static_cast<int>(rep.tableaux.size());

  std::map<std::vector<int>, int> index;
  for (int t = 0; t < rep.dim; ++t) index[rep.tableaux[static_cast<size_t>(t)].rows] = t;

  for (int k = 2; k <= rep.n; ++k) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
    for (int t = 0; t < rep.dim; ++t) {
      const StandardTableau& T = rep.tableaux[static_cast<size_t>(t)];
      int d = T.contents[static_cast<size_t>(k - 1)] - T.contents[static_cast<size_t>(k - 2)];
      g(t, t) += 1.0 / d;
      if (std::abs(d) == 1) continue;  // swapped filling not standard, sine term vanishes
      std::vector<int> swapped = T.rows;
      std::swap(swapped[static_cast<size_t>(k - 1)], swapped[static_cast<size_t>(k - 2)]);
      auto it = index.find(swapped);
      require_internal(it != index.end(), "missing swapped tableau in orthogonal form");
      g(it->second, t) += std::sqrt(1.0 - 1.0 / (static_cast<double>(d) * d));
    }
    rep.generators.push_back(std::move(g));
  }
  return rep;
}

OrthogonalRep orthogonal_rep(const HighestWeight& shape) { return orthogonal_rep(partition_of(shape)); }

long character(const Partition& shape, const Perm& sigma) {
  OrthogonalRep rep = orthogonal_rep(shape);
  double tr = rep.matrix_of(sigma).trace();
  double rounded = std::round(tr);
  require_internal(std::abs(tr - rounded) <= 1e-9, "character trace is not close to an integer");
  return static_cast<long>(rounded);
}

namespace {

/// Tableau of shape mu obtained from T (shape lambda) by adding the box
/// mu/lambda filled with n.
std::vector<int> append_box_rows(const StandardTableau& T, const Partition& lambda, const Partition& mu) {
  std::vector<int> rows = T.rows;
  for (size_t i = 0; i < mu.size(); ++i) {
    int lo = i < lambda.size() ? lambda[i] : 0;
    if (mu[i] != lo) {
      rows.push_back(static_cast<int>(i) + 1);
      return rows;
    }
  }
  throw internal_error("append_box_rows: shapes do not differ");
}

}  // namespace

Eigen::MatrixXd intertwiner(const Partition& mu, const Partition& lambda) {
  require_input(partition_extends(lambda, mu), "intertwiner: mu must extend lambda");
  auto tab_mu = standard_tableaux(mu);
  auto tab_lam = standard_tableaux(lambda);
  std::map<std::vector<int>, int> index;
  for (size_t t = 0; t < tab_mu.size(); ++t) index[tab_mu[t].rows] = static_cast<int>(t);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<long>(tab_mu.size()), static_cast<long>(tab_lam.size()));
  for (size_t t = 0; t < tab_lam.size(); ++t) {
    auto rows = append_box_rows(tab_lam[t], lambda, mu);
    auto it = index.find(rows);
    require_internal(it != index.end(), "intertwiner: appended tableau not found");
    m(it->second, static_cast<long>(t)) = 1.0;
  }
  return m;
}

double scalar_a_matrix(const Partition& lam, const Partition& mu, const Partition& nu,
                       const Partition& xi) {
  require_input(partition_extends(lam, mu) && partition_extends(mu, xi) &&
                    partition_extends(lam, nu) && partition_extends(nu, xi),
                "scalar_a: need lam->mu->xi and lam->nu->xi");
  const int n = static_cast<int>(partition_weight(xi));
  require_input(n >= 2, "scalar_a: xi must have at least two boxes");
  OrthogonalRep rep_xi = orthogonal_rep(xi);
  Eigen::MatrixXd a = intertwiner(nu, lam).transpose() * intertwiner(xi, nu).transpose() *
                      rep_xi.generator(n) * intertwiner(xi, mu) * intertwiner(mu, lam);
  const double scalar = a(0, 0);
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      double expect = (i == j) ? scalar : 0.0;
      require_internal(std::abs(a(i, j) - expect) <= 1e-10,
                       "crossing endomorphism is not a multiple of the identity");
    }
  return scalar;
}

ScalarA scalar_a_closed(const Partition& lam, const Partition& mu, const Partition& nu,
                        const Partition& xi) {
  require_input(partition_extends(lam, mu) && partition_extends(mu, xi) &&
                    partition_extends(lam, nu) && partition_extends(nu, xi),
                "scalar_a: need lam->mu->xi and lam->nu->xi");
  ScalarA out;
  const int c1 = partition_content(mu, xi);
  const int c2 = partition_content(lam, mu);
  require_internal(c1 != c2, "equal consecutive contents");
  out.cos_value = mpq_class(1, c1 - c2);
  out.cos_value.canonicalize();
  out.sin_squared = 1 - out.cos_value * out.cos_value;
  out.cosine_branch = (mu == nu);
  out.value = out.cosine_branch ? out.cos_value.get_d() : std::sqrt(out.sin_squared.get_d());
  return out;
}

GroupAlgebra projector(const Partition& shape, int max_n) {
  const long n = partition_weight(shape);
  require_input(n <= max_n, "projector: n exceeds the configured bound");
  const SymmetricGroup& sn = GroupAlgebra::table(static_cast<int>(n));
  GroupAlgebra pi(static_cast<int>(n));
  const long d = dim_symmetric(shape);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  mpq_class scale(d, fact);
  scale.canonicalize();
  std::map<std::vector<int>, long> chi_cache;
  for (int r = 0; r < sn.order(); ++r) {
    auto type = sn.at(r).cycle_type();
    auto it = chi_cache.find(type);
    if (it == chi_cache.end()) it = chi_cache.emplace(type, murnaghan_nakayama(shape, type)).first;
    pi.coeff(r) = scale * it->second;
  }
  return pi;
}

Eigen::MatrixXd jm_matrix(const OrthogonalRep& rep, int k) {
  require_input(k >= 1 && k <= rep.n, "jm_matrix: index out of range");
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
  // X_j = (j-1 j) X_{j-1} (j-1 j) + (j-1 j)
  for (int j = 2; j <= k; ++j) {
    const Eigen::MatrixXd& g = rep.generator(j);
    x = g * x * g + g;
  }
  return x;
}

}  // namespace ym2d
