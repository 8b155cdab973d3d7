#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "ym2d/enumerate.hpp"
#include "ym2d/errors.hpp"

using namespace ym2d;

TEST_CASE("weak balance") {
  CHECK_FALSE(check_weak_balance(corpus::torus_meridian(2, 1.0)));
  CHECK_FALSE(check_weak_balance(corpus::torus_double_meridian(2, 1.0, 1.0)));
  CHECK(check_weak_balance(corpus::disk_simple_loop(2, 1.0)));
  CHECK(check_weak_balance(corpus::disk_figure_eight(2, 1.0, 1.0)));
  CHECK(check_weak_balance(corpus::sphere_loop(2, 1.0, 1.0)));
  CHECK(check_weak_balance(corpus::disk_trefoil(2, 1.0)));
}

TEST_CASE("disk loop enumerates one configuration") {
  SurfaceGraph g = corpus::disk_simple_loop(3, 1.0);
  auto configs = enumerate_balanced(g, Truncation::anchored());
  REQUIRE(configs.size() == 1);
  CHECK(configs[0].at("OUT") == HighestWeight::zero(3));
  CHECK(configs[0].at("Fc") == HighestWeight({1, 0, 0}));
  CHECK(is_balanced(g, configs[0]));
}

TEST_CASE("nested loops enumerate two configurations at N=2") {
  SurfaceGraph g = corpus::disk_nested_loops(2, 1.0, 1.0);
  auto configs = enumerate_balanced(g, Truncation::anchored());
  REQUIRE(configs.size() == 2);
  std::set<HighestWeight> inner;
  for (const auto& c : configs) {
    CHECK(c.at("Fc1") == HighestWeight({1, 0}));
    inner.insert(c.at("Fc2"));
  }
  CHECK(inner == std::set<HighestWeight>{HighestWeight({2, 0}), HighestWeight({1, 1})});
}

TEST_CASE("figure-eight enumerates the signed lobes") {
  SurfaceGraph g = corpus::disk_figure_eight(2, 1.0, 1.0);
  auto configs = enumerate_balanced(g, Truncation::anchored());
  REQUIRE(configs.size() == 1);
  const Vertex& v = g.vertices[0];
  CHECK(configs[0].at(v.north) == HighestWeight::zero(2));
  CHECK(configs[0].at(v.east) == HighestWeight({1, 0}));
  CHECK(configs[0].at(v.west) == HighestWeight({0, -1}));
}

TEST_CASE("torus meridian enumerates nothing") {
  SurfaceGraph g = corpus::torus_meridian(2, 1.0);
  TruncationReport rep;
  auto configs = enumerate_balanced(g, Truncation::box_bound(5), &rep);
  CHECK(configs.empty());
  CHECK(rep.weak_balance_failed);
}

TEST_CASE("anchored mode requires a free boundary") {
  SurfaceGraph g = corpus::sphere_loop(2, 1.0, 1.0);
  CHECK_THROWS_AS(enumerate_balanced(g, Truncation::anchored()), input_error);
}

TEST_CASE("is_balanced rejects non-extensions and nonzero anchors") {
  SurfaceGraph g = corpus::disk_simple_loop(2, 1.0);
  WeightConfiguration c;
  c.assignment.emplace("OUT", HighestWeight::zero(2));
  c.assignment.emplace("Fc", HighestWeight({2, 0}));
  CHECK_FALSE(is_balanced(g, c));
  WeightConfiguration d;
  d.assignment.emplace("OUT", HighestWeight({1, 0}));
  d.assignment.emplace("Fc", HighestWeight({2, 0}));
  CHECK_FALSE(is_balanced(g, d));  // violates vanishing at the free boundary
  CHECK(is_balanced(corpus::empty_sphere(2, 1.0),
                    WeightConfiguration{{{"S", HighestWeight({3, -1})}}}));
}

TEST_CASE("every emitted configuration is balanced, none repeats") {
  for (auto& [name, g] : corpus::oracle_corpus(3)) {
    CAPTURE(name);
    auto configs = enumerate_balanced(g, Truncation::anchored());
    CHECK(!configs.empty());
    std::set<WeightConfiguration> seen;
    for (const auto& c : configs) {
      CHECK(is_balanced(g, c));
      CHECK(seen.insert(c).second);
    }
  }
}

TEST_CASE("box window contains the anchored set and its shifts on closed surfaces") {
  SurfaceGraph g = corpus::sphere_loop(2, 1.0, 2.0);
  auto configs = enumerate_balanced(g, Truncation::box_bound(3));
  CHECK(!configs.empty());
  std::set<WeightConfiguration> all(configs.begin(), configs.end());
  for (const auto& c : configs) {
    CHECK(is_balanced(g, c));
    for (int q = -1; q <= 1; ++q) {
      WeightConfiguration s = shift(c, q);
      bool inside = true;
      for (const auto& [f, w] : s.assignment)
        for (int comp : w.components())
          if (comp < -3 || comp > 3) inside = false;
      if (inside) CHECK(all.count(s) == 1);
    }
  }
}

TEST_CASE("edge labels") {
  SurfaceGraph g = corpus::disk_simple_loop(2, 1.0);
  auto c = enumerate_balanced(g, Truncation::anchored()).at(0);
  EdgeLabel l = edge_label(g, c, "c");
  CHECK(l.index == 1);
  CHECK(l.value == 1);

  SurfaceGraph f8 = corpus::disk_figure_eight(2, 1.0, 1.0);
  auto c8 = enumerate_balanced(f8, Truncation::anchored()).at(0);
  const Vertex& v = f8.vertices[0];
  EdgeLabel around_b = edge_label(f8, c8, v.nw);  // west lobe boundary
  CHECK(around_b.index == 2);                     // N = 2
  CHECK(around_b.value == 0);
  // shifting adds q to every label value
  WeightConfiguration shifted = shift(c8, 3);
  EdgeLabel sl = edge_label(f8, shifted, v.nw);
  CHECK(sl.index == around_b.index);
  CHECK(sl.value == around_b.value + 3);
}

TEST_CASE("level lines partition the edges") {
  SurfaceGraph g = corpus::disk_simple_loop(2, 1.0);
  auto c = enumerate_balanced(g, Truncation::anchored()).at(0);
  auto lines = level_lines(g, c);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].label == EdgeLabel{1, 1});
  CHECK(lines[0].edges == std::vector<std::string>{"c"});

  SurfaceGraph f8 = corpus::disk_figure_eight(3, 1.0, 1.0);
  auto c8 = enumerate_balanced(f8, Truncation::anchored()).at(0);
  auto lines8 = level_lines(f8, c8);
  REQUIRE(lines8.size() == 2);
  std::set<std::pair<int, int>> labels;
  for (const auto& l : lines8) labels.insert({l.label.index, l.label.value});
  CHECK(labels == std::set<std::pair<int, int>>{{1, 1}, {3, 0}});
}

TEST_CASE("level lines cover every edge exactly once, crossings pair evenly") {
  for (int N : {2, 3})
    for (auto& [name, g] : corpus::oracle_corpus(N)) {
      CAPTURE(name);
      for (const auto& c : enumerate_balanced(g, Truncation::anchored())) {
        auto lines = level_lines(g, c);
        std::set<std::string> covered;
        for (const auto& l : lines)
          for (const auto& e : l.edges) CHECK(covered.insert(e).second);
        CHECK(covered.size() == g.edges.size());
        // transversal crossings between any two labels come in even numbers
        std::map<std::pair<EdgeLabel, EdgeLabel>, int> crossings;
        for (const auto& v : g.vertices) {
          if (c.at(v.north) == c.at(v.south)) continue;
          auto [a, b] = crossing_labels(g, c, v);
          if (b < a) std::swap(a, b);
          crossings[{a, b}] += 1;
        }
        for (const auto& [pair, count] : crossings) CHECK(count % 2 == 0);
      }
    }
}
