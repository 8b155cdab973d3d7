#pragma once

#include <gmpxx.h>

#include <vector>

namespace ym2d {

/// A permutation of {0, ..., n-1}, stored by images.
class Perm {
public:
  Perm() = default;
  explicit Perm(int n);  // identity
  explicit Perm(std::vector<int> images);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  /// Group product by composition: (a*b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;

  static Perm transposition(int n, int i, int j);  // 0-based points
  /// The same permutation inside S_m, m >= size(), fixing the added points.
  Perm embedded(int m) const;
  /// Cycle type as a descending partition of n (fixed points included).
  std::vector<int> cycle_type() const;

private:
  std::vector<int> img_;
};

/// S_n as an indexed table in lexicographic one-line order, with constant
/// time unranking and Lehmer-code ranking.
class SymmetricGroup {
public:
  explicit SymmetricGroup(int n);

  int n() const { return n_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const Perm& at(int rank) const { return elems_[static_cast<size_t>(rank)]; }
  int rank_of(const Perm& p) const;

  /// Rank arithmetic; table-backed for n <= 6.
  int compose_rank(int a, int b) const;
  int inverse_rank(int a) const;

private:
  int n_;
  std::vector<Perm> elems_;
  std::vector<int> compose_table_;  // empty for large n
  std::vector<int> inverse_table_;
};

/// Element of the rational group algebra Q[S_n], dense over the table
/// order of a SymmetricGroup.
class GroupAlgebra {
public:
  GroupAlgebra() = default;
  explicit GroupAlgebra(int n);

  static GroupAlgebra unit(int n);
  static GroupAlgebra of(const Perm& p);

  int n() const { return n_; }
  const mpq_class& coeff(int rank) const { return coeff_[static_cast<size_t>(rank)]; }
  mpq_class& coeff(int rank) { return coeff_[static_cast<size_t>(rank)]; }
  int order() const { return static_cast<int>(coeff_.size()); }

  /// The same element inside Q[S_m], m >= n.
  GroupAlgebra embedded(int m) const;

  GroupAlgebra& operator+=(const GroupAlgebra& other);
  GroupAlgebra& operator*=(const mpq_class& s);
  /// Convolution product.
  friend GroupAlgebra operator*(const GroupAlgebra& a, const GroupAlgebra& b);

  /// Shared per-n tables (built lazily, safe for concurrent reads after a
  /// sequential warmup; all users in this codebase warm up on first use).
  static const SymmetricGroup& table(int n);

private:
  int n_ = 0;
  std::vector<mpq_class> coeff_;
};

}  // namespace ym2d
