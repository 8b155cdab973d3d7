#include <doctest.h>

#include <algorithm>
#include <random>

#include "ym2d/weights.hpp"

using namespace ym2d;

namespace {

/// Independent oracle: count semistandard tableaux of shape `lambda`
/// (rows weakly increasing, columns strictly increasing, entries 1..N)
/// by brute-force filling.
long count_ssyt(const std::vector<int>& shape, int N) {
  std::vector<std::vector<int>> fill(shape.size());
  for (size_t r = 0; r < shape.size(); ++r) fill[r].assign(static_cast<size_t>(shape[r]), 0);

  std::function<long(size_t, size_t)> rec = [&](size_t r, size_t c) -> long {
    if (r == shape.size()) return 1;
    size_t nr = r, nc = c + 1;
    if (nc >= fill[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    while (nr < shape.size() && fill[nr].empty()) ++nr;
    long total = 0;
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0 && c < fill[r - 1].size()) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int v = lo; v <= N; ++v) {
      fill[r][c] = v;
      total += rec(nr, nc);
    }
    fill[r][c] = 0;
    return total;
  };
  if (shape.empty() || shape[0] == 0) return 1;
  size_t r0 = 0;
  while (r0 < shape.size() && fill[r0].empty()) ++r0;
  if (r0 == shape.size()) return 1;
  return rec(r0, 0);
}

HighestWeight random_weight(std::mt19937& gen, int rank, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  std::vector<int> comps(static_cast<size_t>(rank));
  for (int& c : comps) c = dist(gen);
  std::sort(comps.rbegin(), comps.rend());
  return HighestWeight(comps);
}

std::vector<std::vector<int>> partitions_up_to(int max_boxes, int max_rows) {
  std::vector<std::vector<int>> out;
  std::function<void(int, int, std::vector<int>&)> rec = [&](int remaining, int cap, std::vector<int>& cur) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part, cur);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(max_boxes, max_boxes, cur);
  return out;
}

}  // namespace

TEST_CASE("Weyl dimension formula") {
  CHECK(dim_unitary(HighestWeight({0, 0})) == 1);
  CHECK(dim_unitary(HighestWeight({1, 0, 0})) == count_ssyt({1}, 3));
  CHECK(dim_unitary(HighestWeight({1, 0, 0})) == 3);
  CHECK(dim_unitary(HighestWeight({2, 1, 1, 0})) == count_ssyt({2, 1, 1}, 4));
  CHECK(dim_unitary(HighestWeight({2, 1, 1, 0})) == 15);
}

TEST_CASE("dimension equals the semistandard tableau count") {
  for (int N = 1; N <= 4; ++N)
    for (const auto& shape : partitions_up_to(6, N)) {
      std::vector<int> comps = shape;
      comps.resize(static_cast<size_t>(N), 0);
      CHECK(dim_unitary(HighestWeight(comps)) == count_ssyt(shape, N));
    }
}

TEST_CASE("Casimir numbers") {
  CHECK(casimir(HighestWeight({0, 0, 0})) == 0);
  CHECK(casimir(HighestWeight({1, 0})) == 2);
  CHECK(casimir(HighestWeight({2, 1, 1, 0})) == 12);
}

TEST_CASE("shift invariances") {
  std::mt19937 gen(7);
  for (int it = 0; it < 200; ++it) {
    int rank = 1 + static_cast<int>(gen() % 4);
    HighestWeight w = random_weight(gen, rank, 5);
    for (int q = -3; q <= 3; ++q) {
      HighestWeight s = shift(w, q);
      CHECK(dim_unitary(s) == dim_unitary(w));
      CHECK(casimir(s) == casimir(w) + 2 * q * w.box_count() + mpz_class(rank) * q * q);
      CHECK(shift(s, -q) == w);
    }
  }
  CHECK(shift(HighestWeight({1, 0}), -1) == HighestWeight({0, -1}));
  CHECK(shift(HighestWeight({0, 0}), 3) == HighestWeight({3, 3}));
}

TEST_CASE("extension relation and contents") {
  CHECK(extends_to(HighestWeight({0, 0}), HighestWeight({1, 0})) == 1);
  CHECK(extends_to(HighestWeight({1, 0}), HighestWeight({1, 1})) == 2);
  CHECK(!extends_to(HighestWeight({1, 0}), HighestWeight({3, 0})).has_value());
  CHECK(!extends_to(HighestWeight({1, 0}), HighestWeight({1, 0})).has_value());

  CHECK(content(HighestWeight({0, 0, 0}), HighestWeight({1, 0, 0})) == 0);
  CHECK(content(HighestWeight({1, 0}), HighestWeight({1, 1})) == -1);
  CHECK(content(HighestWeight({1, 1, 1}), HighestWeight({2, 1, 1})) == 1);
}

TEST_CASE("list_extensions matches the monotonicity picture") {
  auto e0 = list_extensions(HighestWeight({0, 0}));
  REQUIRE(e0.size() == 1);
  CHECK(e0[0].first == HighestWeight({1, 0}));
  CHECK(e0[0].second == 1);

  auto e1 = list_extensions(HighestWeight({1, 0}));
  REQUIRE(e1.size() == 2);
  CHECK(e1[0].first == HighestWeight({2, 0}));
  CHECK(e1[1].first == HighestWeight({1, 1}));

  auto e2 = list_extensions(HighestWeight({2, 2, 0}));
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].first == HighestWeight({3, 2, 0}));
  CHECK(e2[0].second == 1);
  CHECK(e2[1].first == HighestWeight({2, 2, 1}));
  CHECK(e2[1].second == 3);
}

TEST_CASE("restrictions invert extensions") {
  std::mt19937 gen(11);
  for (int it = 0; it < 100; ++it) {
    HighestWeight w = random_weight(gen, 1 + static_cast<int>(gen() % 4), 4);
    for (const auto& [hi, i] : list_extensions(w)) {
      CHECK(extends_to(w, hi) == i);
      auto restr = list_restrictions(hi);
      bool found = false;
      for (const auto& [lo, j] : restr)
        if (lo == w && j == i) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("consecutive contents differ along extension chains") {
  std::mt19937 gen(13);
  for (int it = 0; it < 200; ++it) {
    HighestWeight lam = random_weight(gen, 1 + static_cast<int>(gen() % 4), 4);
    for (const auto& [mu, i] : list_extensions(lam))
      for (const auto& [xi, j] : list_extensions(mu)) CHECK(content(mu, xi) != content(lam, mu));
  }
}

TEST_CASE("weight windows and shells") {
  auto win = all_weights_in_window(2, 1);
  CHECK(win.size() == 6);  // pairs -1 <= b <= a <= 1
  auto shell0 = all_weights_in_shell(2, 0);
  REQUIRE(shell0.size() == 1);
  CHECK(shell0[0].is_zero());
  auto shell1 = all_weights_in_shell(2, 1);
  CHECK(shell1.size() == 5);
}
