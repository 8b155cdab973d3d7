#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace ym2d {

/// A highest weight of U(N): a non-increasing N-tuple of integers.
/// Non-negative weights double as integer partitions (Young diagrams),
/// with box count equal to the sum of the components.
class HighestWeight {
public:
  HighestWeight() = default;
  explicit HighestWeight(std::vector<int> components);

  static HighestWeight zero(int rank);

  int rank() const { return static_cast<int>(comps_.size()); }
  /// 0-based component access; the paper's lambda_i is (*this)[i-1].
  int operator[](int i) const { return comps_[static_cast<size_t>(i)]; }
  const std::vector<int>& components() const { return comps_; }

  bool non_negative() const { return comps_.empty() || comps_.back() >= 0; }
  long box_count() const;
  bool is_zero() const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

private:
  std::vector<int> comps_;
};

/// Weyl dimension of the U(N) irrep with highest weight w, as an exact
/// integer.  Invariant under shift(w, q) for every q.
mpz_class dim_unitary(const HighestWeight& w);

/// Quadratic Casimir number: sum_i w_i^2 + (N - 2i + 1) w_i.  Always >= 0.
mpz_class casimir(const HighestWeight& w);

/// If hi = lo + e_i for a (necessarily unique) coordinate i with hi still
/// non-increasing, returns that i (1-based); otherwise nullopt.
std::optional<int> extends_to(const HighestWeight& lo, const HighestWeight& hi);

/// Content of the single box hi/lo, i.e. hi_i - i where i = extends_to(lo,hi).
/// Throws input_error when hi does not extend lo.
int content(const HighestWeight& lo, const HighestWeight& hi);

/// All single-box extensions of w, paired with the incremented coordinate
/// (1-based), in increasing coordinate order.  At most rank(w) entries.
std::vector<std::pair<HighestWeight, int>> list_extensions(const HighestWeight& w);

/// All single-box restrictions: the mu with mu -> w, in increasing
/// coordinate order of the removed box.
std::vector<std::pair<HighestWeight, int>> list_restrictions(const HighestWeight& w);

/// Componentwise addition of q.
HighestWeight shift(const HighestWeight& w, int q);

/// All highest weights of the given rank with every component in
/// [-window, window], in descending lexicographic order.
std::vector<HighestWeight> all_weights_in_window(int rank, int window);

/// The weights whose largest absolute component equals shell exactly
/// (shell 0 holds only the zero weight).
std::vector<HighestWeight> all_weights_in_shell(int rank, int shell);

}  // namespace ym2d
