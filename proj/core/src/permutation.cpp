#include "ym2d/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "ym2d/errors.hpp"

namespace ym2d {

Perm::Perm(int n) : img_(static_cast<size_t>(n)) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    require_input(v >= 0 && v < static_cast<int>(img_.size()) && !seen[static_cast<size_t>(v)],
                  "not a permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  require_input(a.size() == b.size(), "permutation size mismatch");
  std::vector<int> img(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) img[static_cast<size_t>(i)] = a(b(i));
  return Perm(std::move(img));
}

Perm Perm::transposition(int n, int i, int j) {
  Perm p(n);
  std::swap(p.img_[static_cast<size_t>(i)], p.img_[static_cast<size_t>(j)]);
  return p;
}

Perm Perm::embedded(int m) const {
  require_input(m >= size(), "cannot embed into a smaller group");
  std::vector<int> img(img_);
  for (int i = size(); i < m; ++i) img.push_back(i);
  return Perm(std::move(img));
}

std::vector<int> Perm::cycle_type() const {
  std::vector<char> seen(img_.size(), 0);
  std::vector<int> type;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      j = img_[static_cast<size_t>(j)];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  require_input(n >= 0 && n <= 10, "symmetric group table limited to n <= 10");
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  do {
    elems_.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  if (n <= 6) {
    const int m = order();
    inverse_table_.resize(static_cast<size_t>(m));
    compose_table_.resize(static_cast<size_t>(m) * static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) {
      inverse_table_[static_cast<size_t>(a)] = rank_of(elems_[static_cast<size_t>(a)].inverse());
      for (int b = 0; b < m; ++b)
        compose_table_[static_cast<size_t>(a) * static_cast<size_t>(m) + static_cast<size_t>(b)] =
            rank_of(elems_[static_cast<size_t>(a)] * elems_[static_cast<size_t>(b)]);
    }
  }
}

int SymmetricGroup::compose_rank(int a, int b) const {
  if (!compose_table_.empty())
    return compose_table_[static_cast<size_t>(a) * static_cast<size_t>(order()) + static_cast<size_t>(b)];
  return rank_of(at(a) * at(b));
}

int SymmetricGroup::inverse_rank(int a) const {
  if (!inverse_table_.empty()) return inverse_table_[static_cast<size_t>(a)];
  return rank_of(at(a).inverse());
}

int SymmetricGroup::rank_of(const Perm& p) const {
  require_input(p.size() == n_, "permutation size mismatch");
  // Lehmer code against lexicographic order.
  long rank = 0;
  long fact = 1;
  for (int i = 2; i <= n_; ++i) fact *= i;
  for (int i = 0; i < n_; ++i) {
    fact /= (n_ - i);
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j)
      if (p(j) < p(i)) ++smaller;
    rank += smaller * fact;
  }
  return static_cast<int>(rank);
}

GroupAlgebra::GroupAlgebra(int n) : n_(n), coeff_(static_cast<size_t>(table(n).order())) {}

GroupAlgebra GroupAlgebra::unit(int n) {
  GroupAlgebra a(n);
  a.coeff(table(n).rank_of(Perm(n))) = 1;
  return a;
}

GroupAlgebra GroupAlgebra::of(const Perm& p) {
  GroupAlgebra a(p.size());
  a.coeff(table(p.size()).rank_of(p)) = 1;
  return a;
}

GroupAlgebra GroupAlgebra::embedded(int m) const {
  if (m == n_) return *this;
  GroupAlgebra out(m);
  const SymmetricGroup& sn = table(n_);
  const SymmetricGroup& sm = table(m);
  for (int r = 0; r < order(); ++r) {
    if (coeff_[static_cast<size_t>(r)] == 0) continue;
    out.coeff(sm.rank_of(sn.at(r).embedded(m))) = coeff_[static_cast<size_t>(r)];
  }
  return out;
}

GroupAlgebra& GroupAlgebra::operator+=(const GroupAlgebra& other) {
  require_input(n_ == other.n_, "group algebra size mismatch");
  for (int r = 0; r < order(); ++r) coeff_[static_cast<size_t>(r)] += other.coeff_[static_cast<size_t>(r)];
  return *this;
}

GroupAlgebra& GroupAlgebra::operator*=(const mpq_class& s) {
  for (auto& c : coeff_) c *= s;
  return *this;
}

GroupAlgebra operator*(const GroupAlgebra& a, const GroupAlgebra& b) {
  require_input(a.n_ == b.n_, "group algebra size mismatch");
  const SymmetricGroup& sn = GroupAlgebra::table(a.n_);
  GroupAlgebra out(a.n_);
  for (int ra = 0; ra < a.order(); ++ra) {
    if (a.coeff(ra) == 0) continue;
    for (int rb = 0; rb < b.order(); ++rb) {
      if (b.coeff(rb) == 0) continue;
      out.coeff(sn.rank_of(sn.at(ra) * sn.at(rb))) += a.coeff(ra) * b.coeff(rb);
    }
  }
  return out;
}

const SymmetricGroup& GroupAlgebra::table(int n) {
  static std::mutex mu;
  static std::map<int, SymmetricGroup> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, SymmetricGroup(n)).first;
  return it->second;
}

}  // namespace ym2d
