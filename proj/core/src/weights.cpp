#include "ym2d/weights.hpp"

#include <algorithm>
#include <cstdlib>

#include "ym2d/errors.hpp"

namespace ym2d {

HighestWeight::HighestWeight(std::vector<int> components) : comps_(std::move(components)) {
  require_input(!comps_.empty(), "highest weight needs rank >= 1");
  for (size_t i = 1; i < comps_.size(); ++i)
    require_input(comps_[i - 1] >= comps_[i], "highest weight components must be non-increasing");
}

HighestWeight HighestWeight::zero(int rank) {
  require_input(rank >= 1, "rank must be positive");
  return HighestWeight(std::vector<int>(static_cast<size_t>(rank), 0));
}

long HighestWeight::box_count() const {
  long n = 0;
  for (int c : comps_) n += c;
  return n;
}

bool HighestWeight::is_zero() const {
  for (int c : comps_)
    if (c != 0) return false;
  return true;
}

mpz_class dim_unitary(const HighestWeight& w) {
  const int n = w.rank();
  mpz_class num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= w[i] - w[j] + j - i;
      den *= j - i;
    }
  mpz_class dim;
  // Exact divisibility is a theorem; a remainder indicates a bug.
  require_internal(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0,
                   "Weyl dimension product is not an integer");
  mpz_divexact(dim.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return dim;
}

mpz_class casimir(const HighestWeight& w) {
  const int n = w.rank();
  mpz_class c = 0;
  for (int i = 0; i < n; ++i) {
    mpz_class li = w[i];
    c += li * li + (n - 2 * (i + 1) + 1) * li;
  }
  return c;
}

std::optional<int> extends_to(const HighestWeight& lo, const HighestWeight& hi) {
  require_input(lo.rank() == hi.rank(), "rank mismatch in extends_to");
  int idx = -1;
  for (int i = 0; i < lo.rank(); ++i) {
    if (hi[i] == lo[i]) continue;
    if (hi[i] == lo[i] + 1 && idx < 0) {
      idx = i;
    } else {
      return std::nullopt;
    }
  }
  if (idx < 0) return std::nullopt;
  return idx + 1;
}

int content(const HighestWeight& lo, const HighestWeight& hi) {
  auto i = extends_to(lo, hi);
  require_input(i.has_value(), "content: second weight does not extend the first");
  return hi[*i - 1] - *i;
}

std::vector<std::pair<HighestWeight, int>> list_extensions(const HighestWeight& w) {
  std::vector<std::pair<HighestWeight, int>> out;
  for (int i = 0; i < w.rank(); ++i) {
    if (i > 0 && w[i - 1] == w[i]) continue;  // would break monotonicity
    auto comps = w.components();
    comps[static_cast<size_t>(i)] += 1;
    out.emplace_back(HighestWeight(std::move(comps)), i + 1);
  }
  return out;
}

std::vector<std::pair<HighestWeight, int>> list_restrictions(const HighestWeight& w) {
  std::vector<std::pair<HighestWeight, int>> out;
  for (int i = 0; i < w.rank(); ++i) {
    if (i + 1 < w.rank() && w[i] == w[i + 1]) continue;
    auto comps = w.components();
    comps[static_cast<size_t>(i)] -= 1;
    out.emplace_back(HighestWeight(std::move(comps)), i + 1);
  }
  return out;
}

HighestWeight shift(const HighestWeight& w, int q) {
  auto comps = w.components();
  for (int& c : comps) c += q;
  return HighestWeight(std::move(comps));
}

namespace {

void fill_window(std::vector<int>& comps, int rank, int lo, int hi,
                 std::vector<HighestWeight>& out) {
  if (static_cast<int>(comps.size()) == rank) {
    out.push_back(HighestWeight(comps));
    return;
  }
  for (int c = hi; c >= lo; --c) {
    comps.push_back(c);
    fill_window(comps, rank, lo, c, out);
    comps.pop_back();
  }
}

}  // namespace

std::vector<HighestWeight> all_weights_in_window(int rank, int window) {
  require_input(rank >= 1 && window >= 0, "bad window request");
  std::vector<HighestWeight> out;
  std::vector<int> comps;
  fill_window(comps, rank, -window, window, out);
  return out;
}

std::vector<HighestWeight> all_weights_in_shell(int rank, int shell) {
  std::vector<HighestWeight> out;
  for (auto& w : all_weights_in_window(rank, shell)) {
    int m = 0;
    for (int c : w.components()) m = std::max(m, std::abs(c));
    if (m == shell) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace ym2d
