#include "ym2d/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "ym2d/errors.hpp"

namespace ym2d {

const HighestWeight& WeightConfiguration::at(const std::string& face) const {
  auto it = assignment.find(face);
  require_input(it != assignment.end(), "configuration misses face '" + face + "'");
  return it->second;
}

WeightConfiguration shift(const WeightConfiguration& c, int q) {
  WeightConfiguration out;
  for (const auto& [f, w] : c.assignment) out.assignment.emplace(f, shift(w, q));
  return out;
}

namespace {

/// Dual-graph view: faces as nodes, one directed constraint left -> right
/// per edge.
struct Dual {
  int n_faces = 0;
  std::vector<std::pair<int, int>> constraints;           // (left face, right face) per edge
  std::vector<std::vector<std::pair<int, int>>> adjacent;  // face -> (edge, other face)
};

Dual build_dual(const SurfaceGraph& g) {
  Dual d;
  d.n_faces = static_cast<int>(g.faces.size());
  d.adjacent.resize(g.faces.size());
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    int l = g.face_index(g.edges[ei].left);
    int r = g.face_index(g.edges[ei].right);
    require_input(l >= 0 && r >= 0, "edge '" + g.edges[ei].id + "' references missing face");
    d.constraints.emplace_back(l, r);
    d.adjacent[static_cast<size_t>(l)].emplace_back(static_cast<int>(ei), r);
    if (r != l) d.adjacent[static_cast<size_t>(r)].emplace_back(static_cast<int>(ei), l);
  }
  return d;
}

/// Integer potentials with n_right = n_left + 1, per connected component of
/// the dual graph, rooted at 0 on the first face of each component.
std::optional<std::vector<int>> solve_potential(const Dual& d) {
  std::vector<int> pot(static_cast<size_t>(d.n_faces), 0);
  std::vector<char> seen(static_cast<size_t>(d.n_faces), 0);
  for (int root = 0; root < d.n_faces; ++root) {
    if (seen[static_cast<size_t>(root)]) continue;
    seen[static_cast<size_t>(root)] = 1;
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int f = queue[qi];
      for (auto [e, other] : d.adjacent[static_cast<size_t>(f)]) {
        auto [l, r] = d.constraints[static_cast<size_t>(e)];
        int other_pot = (f == l) ? pot[static_cast<size_t>(f)] + 1 : pot[static_cast<size_t>(f)] - 1;
        int o = (f == l) ? r : l;
        if (!seen[static_cast<size_t>(o)]) {
          seen[static_cast<size_t>(o)] = 1;
          pot[static_cast<size_t>(o)] = other_pot;
          queue.push_back(o);
        }
      }
    }
  }
  for (auto [l, r] : d.constraints)
    if (pot[static_cast<size_t>(r)] != pot[static_cast<size_t>(l)] + 1) return std::nullopt;
  return pot;
}

struct Enumerator {
  const SurfaceGraph& g;
  const Truncation& trunc;
  const std::function<bool(const WeightConfiguration&)>& emit;
  TruncationReport* report;
  Dual dual;

  std::vector<int> order;                        // faces in BFS-from-anchor order
  std::vector<std::pair<int, bool>> tree_edge;   // per order position >0: (edge, child-is-right)
  std::vector<int> tree_parent;                  // per order position >0: parent face
  std::vector<std::vector<int>> cotree_checks;   // per order position: co-tree edges now decided
  std::vector<char> must_vanish;                 // per face: contains a free boundary component

  std::vector<std::optional<HighestWeight>> assigned;
  bool stop = false;

  explicit Enumerator(const SurfaceGraph& graph, const Truncation& t,
                      const std::function<bool(const WeightConfiguration&)>& cb, TruncationReport* rep)
      : g(graph), trunc(t), emit(cb), report(rep), dual(build_dual(graph)) {}

  void plan(int anchor) {
    const int nf = dual.n_faces;
    std::vector<char> seen(static_cast<size_t>(nf), 0);
    std::vector<char> edge_used(g.edges.size(), 0);
    order.push_back(anchor);
    seen[static_cast<size_t>(anchor)] = 1;
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int f = order[qi];
      for (auto [e, other] : dual.adjacent[static_cast<size_t>(f)]) {
        if (seen[static_cast<size_t>(other)]) continue;
        seen[static_cast<size_t>(other)] = 1;
        edge_used[static_cast<size_t>(e)] = 1;
        auto [l, r] = dual.constraints[static_cast<size_t>(e)];
        tree_edge.emplace_back(e, other == r);
        tree_parent.push_back(f);
        order.push_back(other);
      }
    }
    require_input(static_cast<int>(order.size()) == nf,
                  "dual graph is disconnected; cannot anchor the enumeration");
    // Position in `order` of each face.
    std::vector<int> pos(static_cast<size_t>(nf), 0);
    for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
    cotree_checks.resize(order.size());
    for (size_t e = 0; e < g.edges.size(); ++e) {
      if (edge_used[e]) continue;
      auto [l, r] = dual.constraints[e];
      int when = std::max(pos[static_cast<size_t>(l)], pos[static_cast<size_t>(r)]);
      cotree_checks[static_cast<size_t>(when)].push_back(static_cast<int>(e));
    }
  }

  bool admissible(int face, const HighestWeight& w, double rate_so_far) {
    if (must_vanish[static_cast<size_t>(face)] && !w.is_zero()) return false;
    if (trunc.mode == TruncationMode::BoxBound) {
      for (int c : w.components())
        if (c < -trunc.max_box || c > trunc.max_box) {
          if (report) {
            report->truncated = true;
            double rate = rate_so_far;  // casimir >= 0 makes partial sums lower bounds
            report->min_discarded_rate = std::min(report->min_discarded_rate, rate);
          }
          return false;
        }
    }
    return true;
  }

  double rate_of(int face, const HighestWeight& w) const {
    return g.faces[static_cast<size_t>(face)].area * casimir(w).get_d() / (2.0 * g.N);
  }

  void dfs(size_t depth, double rate_so_far) {
    if (stop) return;
    if (depth == order.size()) {
      WeightConfiguration c;
      for (size_t i = 0; i < g.faces.size(); ++i) c.assignment.emplace(g.faces[i].id, *assigned[i]);
      if (!emit(c)) stop = true;
      return;
    }
    int face = order[depth];
    int parent = tree_parent[depth - 1];
    auto [e, child_is_right] = tree_edge[depth - 1];
    (void)e;
    const HighestWeight& pw = *assigned[static_cast<size_t>(parent)];
    auto candidates = child_is_right ? list_extensions(pw) : list_restrictions(pw);
    for (auto& [w, idx] : candidates) {
      (void)idx;
      if (!admissible(face, w, rate_so_far)) continue;
      assigned[static_cast<size_t>(face)] = w;
      bool ok = true;
      for (int ce : cotree_checks[depth]) {
        auto [l, r] = dual.constraints[static_cast<size_t>(ce)];
        if (!extends_to(*assigned[static_cast<size_t>(l)], *assigned[static_cast<size_t>(r)])) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(depth + 1, rate_so_far + rate_of(face, w));
      assigned[static_cast<size_t>(face)].reset();
      if (stop) return;
    }
  }

  void run_from(const HighestWeight& anchor_weight) {
    int anchor = order[0];
    if (!admissible(anchor, anchor_weight, 0.0)) return;
    assigned[static_cast<size_t>(anchor)] = anchor_weight;
    // A single-face graph has no tree edges but may still carry co-tree
    // self-loops (left == right), which are never satisfiable.
    bool ok = true;
    for (int ce : cotree_checks[0]) {
      auto [l, r] = dual.constraints[static_cast<size_t>(ce)];
      if (!extends_to(*assigned[static_cast<size_t>(l)], *assigned[static_cast<size_t>(r)])) ok = false;
    }
    if (ok) dfs(1, rate_of(anchor, anchor_weight));
    assigned[static_cast<size_t>(anchor)].reset();
  }
};

}  // namespace

bool check_weak_balance(const SurfaceGraph& g) {
  return solve_potential(build_dual(g)).has_value();
}

void enumerate_balanced(const SurfaceGraph& g, const Truncation& trunc,
                        const std::function<bool(const WeightConfiguration&)>& emit,
                        TruncationReport* report) {
  require_input(!g.faces.empty(), "graph has no faces");
  if (report) {
    *report = TruncationReport{};
    report->mode = trunc.mode;
    report->window = trunc.max_box;
  }

  std::vector<char> must_vanish(g.faces.size(), 0);
  int anchor = -1;
  for (size_t i = 0; i < g.faces.size(); ++i)
    if (g.faces[i].has_free_boundary()) {
      must_vanish[i] = 1;
      if (anchor < 0) anchor = static_cast<int>(i);
    }

  if (trunc.mode == TruncationMode::Anchored)
    require_input(anchor >= 0, "anchored enumeration needs a face with a free boundary component");
  require_input(trunc.mode == TruncationMode::Anchored || trunc.max_box >= 0,
                "box window must be non-negative");

  if (!check_weak_balance(g)) {
    if (report) report->weak_balance_failed = true;
    return;
  }

  Enumerator en(g, trunc, emit, report);
  en.must_vanish = std::move(must_vanish);
  en.assigned.assign(g.faces.size(), std::nullopt);
  en.plan(trunc.mode == TruncationMode::Anchored ? anchor : (anchor >= 0 ? anchor : 0));

  if (trunc.mode == TruncationMode::Anchored) {
    en.run_from(HighestWeight::zero(g.N));
  } else {
    for (const HighestWeight& w : all_weights_in_window(g.N, trunc.max_box)) {
      en.run_from(w);
      if (en.stop) break;
    }
  }
}

std::vector<WeightConfiguration> enumerate_balanced(const SurfaceGraph& g, const Truncation& trunc,
                                                    TruncationReport* report) {
  std::vector<WeightConfiguration> out;
  std::set<WeightConfiguration> dedup;
  enumerate_balanced(
      g, trunc,
      [&](const WeightConfiguration& c) {
        require_internal(dedup.insert(c).second, "enumeration emitted a duplicate configuration");
        out.push_back(c);
        return true;
      },
      report);
  return out;
}

bool is_balanced(const SurfaceGraph& g, const WeightConfiguration& c) {
  for (const auto& e : g.edges)
    if (!extends_to(c.at(e.left), c.at(e.right))) return false;
  for (const auto& f : g.faces)
    if (f.has_free_boundary() && !c.at(f.id).is_zero()) return false;
  return true;
}

EdgeLabel edge_label(const SurfaceGraph& g, const WeightConfiguration& c, const std::string& edge_id) {
  const Edge& e = g.edge(edge_id);
  auto i = extends_to(c.at(e.left), c.at(e.right));
  require_input(i.has_value(), "edge '" + edge_id + "' is not balanced under this configuration");
  return EdgeLabel{*i, c.at(e.right)[*i - 1]};
}

std::vector<LevelLine> level_lines(const SurfaceGraph& g, const WeightConfiguration& c) {
  std::vector<EdgeLabel> labels(g.edges.size());
  for (size_t ei = 0; ei < g.edges.size(); ++ei) labels[ei] = edge_label(g, c, g.edges[ei].id);

  // Successor of a linear edge: the outgoing edge with the same label at
  // its terminal vertex.
  auto successor = [&](size_t ei) -> size_t {
    const Edge& e = g.edges[ei];
    const Vertex& v = g.vertex(e.to);
    // match by the slot the edge occupies, then look at the outgoing pair
    int ne = g.edge_index(v.ne), nw = g.edge_index(v.nw);
    bool ne_match = labels[static_cast<size_t>(ne)] == labels[ei];
    bool nw_match = labels[static_cast<size_t>(nw)] == labels[ei];
    require_internal(ne_match != nw_match, "level line does not continue uniquely at vertex '" + v.id + "'");
    return static_cast<size_t>(ne_match ? ne : nw);
  };

  std::vector<LevelLine> out;
  std::vector<char> seen(g.edges.size(), 0);
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    if (seen[ei]) continue;
    LevelLine line;
    line.label = labels[ei];
    if (g.edges[ei].kind == EdgeKind::Circular) {
      seen[ei] = 1;
      line.edges.push_back(g.edges[ei].id);
    } else {
      size_t cur = ei;
      do {
        seen[cur] = 1;
        line.edges.push_back(g.edges[cur].id);
        cur = successor(cur);
      } while (cur != ei);
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::pair<EdgeLabel, EdgeLabel> crossing_labels(const SurfaceGraph& g, const WeightConfiguration& c,
                                                const Vertex& v) {
  return {edge_label(g, c, v.ne), edge_label(g, c, v.nw)};
}

}  // namespace ym2d
