#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <vector>

#include "ym2d/permutation.hpp"
#include "ym2d/weights.hpp"

namespace ym2d {

/// Partitions on the symmetric-group side are plain descending positive
/// vectors; the empty partition is {}.
using Partition = std::vector<int>;

/// Trims trailing zeros; requires non-negative components.
Partition partition_of(const HighestWeight& w);
long partition_weight(const Partition& p);

/// A standard filling of a Young diagram, or equivalently the chain of
/// single-box extensions from the empty partition.  rows[k-1] is the
/// (1-based) row receiving box k, contents[k-1] its content c_T(k).
struct StandardTableau {
  Partition shape;
  std::vector<int> rows;
  std::vector<int> contents;
};

/// All standard tableaux of the given shape, ordered by descending
/// lexicographic content sequence (the fixed basis order of every
/// representation built here).
std::vector<StandardTableau> standard_tableaux(const Partition& shape);
std::vector<StandardTableau> standard_tableaux(const HighestWeight& shape);

/// d^lambda, the number of standard tableaux.
long dim_symmetric(const Partition& shape);

/// The exact character value of the irrep `shape` on the class of the
/// given cycle type, by the Murnaghan-Nakayama recursion.
long murnaghan_nakayama(const Partition& shape, const std::vector<int>& cycle_type);

/// Young's orthogonal form: real orthogonal generator matrices for the
/// adjacent transpositions in the content-ordered tableau basis.
struct OrthogonalRep {
  Partition shape;
  int n = 0;
  int dim = 0;
  std::vector<StandardTableau> tableaux;
  /// generators[k-2] is the matrix of (k-1 k) for k = 2..n.
  std::vector<Eigen::MatrixXd> generators;

  const Eigen::MatrixXd& generator(int k) const;  // matrix of (k-1 k)
  Eigen::MatrixXd matrix_of(const Perm& sigma) const;
};

OrthogonalRep orthogonal_rep(const Partition& shape);
OrthogonalRep orthogonal_rep(const HighestWeight& shape);

/// Character by tracing the orthogonal representation; the result is
/// within 1e-9 of an integer or an internal error fires.
long character(const Partition& shape, const Perm& sigma);

/// The 0/1 isometric intertwiner V^lambda -> V^mu (lambda -> mu) that
/// appends the new box filled with n, as a d^mu x d^lambda matrix.
Eigen::MatrixXd intertwiner(const Partition& mu, const Partition& lambda);

/// The crossing scalar by explicit five-matrix composition; asserts the
/// composite is scalar within 1e-10.
double scalar_a_matrix(const Partition& lam, const Partition& mu, const Partition& nu,
                       const Partition& xi);

/// The same scalar in closed form.
struct ScalarA {
  bool cosine_branch = true;   // mu == nu
  mpq_class cos_value;         // 1 / (c1 - c2), exact
  mpq_class sin_squared;       // 1 - cos^2, exact
  double value = 0.0;          // cos or +sqrt(sin_squared)
};
ScalarA scalar_a_closed(const Partition& lam, const Partition& mu, const Partition& nu,
                        const Partition& xi);

/// The isotypical projector pi^lambda = (d^lambda / n!) sum_sigma
/// chi(sigma) sigma with exact rational coefficients.
GroupAlgebra projector(const Partition& shape, int max_n = 6);

/// Matrix of the Jucys-Murphy element X_k = (1 k) + ... + (k-1 k) in the
/// orthogonal representation; diagonal with entries c_T(k).
Eigen::MatrixXd jm_matrix(const OrthogonalRep& rep, int k);

/// All partitions of n, descending lexicographic.
std::vector<Partition> partitions_of(int n);

/// Single-box extensions/restrictions on the partition side (row counts
/// may grow, unlike for fixed-rank highest weights).
std::vector<Partition> partition_extensions(const Partition& p);
std::vector<Partition> partition_restrictions(const Partition& p);
/// Content of the single box mu/lambda; requires lambda -> mu.
int partition_content(const Partition& lambda, const Partition& mu);
bool partition_extends(const Partition& lambda, const Partition& mu);

}  // namespace ym2d
