#include "ym2d/mm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "ym2d/errors.hpp"

namespace ym2d {

double mm_lhs(const SurfaceGraph& g, const std::string& vertex_id, const Truncation& trunc) {
  int vi = g.vertex_index(vertex_id);
  require_input(vi >= 0, "mm_lhs: no vertex '" + vertex_id + "'");
  const Vertex& v = g.vertices[static_cast<size_t>(vi)];
  SymbolicExpectation exp = wilson_expectation(g, trunc);
  double sum = 0.0, comp = 0.0;
  for (const auto& term : exp.terms) {
    // (c_E - c_N) - (c_S - c_W), per corner
    mpz_class num = term.casimirs.at(v.east) - term.casimirs.at(v.north) - term.casimirs.at(v.south) +
                    term.casimirs.at(v.west);
    double factor = num.get_d() / (2.0 * g.N);
    double x = factor * term.value_at(g).real();
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

SurfaceGraph desingularize(const SurfaceGraph& g, const std::string& vertex_id) {
  int vi = g.vertex_index(vertex_id);
  require_input(vi >= 0, "desingularize: no vertex '" + vertex_id + "'");
  const Vertex v = g.vertices[static_cast<size_t>(vi)];
  const bool same_face = (v.north == v.south);

  SurfaceGraph out;
  out.N = g.N;
  out.surface_euler_char = g.surface_euler_char;
  out.closed = g.closed;
  // Loop words change under the surgery; they are optional metadata and are
  // not reconstructed here.
  out.loops.clear();

  // Merge south into north.
  const std::string merged = v.north;
  auto face_name = [&](const std::string& id) { return id == v.south ? merged : id; };

  for (const auto& f : g.faces) {
    if (f.id == v.south && !same_face) continue;  // absorbed
    Face nf = f;
    if (f.id == v.north) {
      if (same_face) {
        nf.euler_char = f.euler_char - 1;
        nf.external_boundaries = f.external_boundaries + 1;
      } else {
        const Face& s = g.face(v.south);
        nf.area = f.area + s.area;
        nf.euler_char = f.euler_char + s.euler_char - 1;
        nf.external_boundaries = f.external_boundaries + s.external_boundaries - 1;
        for (const auto& b : s.internal_boundaries) nf.internal_boundaries.push_back(b);
      }
    }
    out.faces.push_back(std::move(nf));
  }

  // Rejoin strands: the SW arrival continues along NW, the SE arrival along
  // NE.  Chains through the removed vertex fuse into new edges; closed
  // chains become circular edges.
  std::map<std::string, std::string> next{{v.sw, v.nw}, {v.se, v.ne}};
  std::set<std::string> constituents{v.sw, v.nw, v.se, v.ne};
  std::set<std::string> values{v.nw, v.ne};

  struct NewEdge {
    std::vector<std::string> chain;
    bool circular = false;
  };
  std::vector<NewEdge> fused;
  std::set<std::string> processed;
  for (const std::string& start : {v.sw, v.se}) {
    if (processed.count(start) || values.count(start)) continue;
    NewEdge ne;
    std::string cur = start;
    ne.chain.push_back(cur);
    processed.insert(cur);
    while (next.count(cur)) {
      cur = next.at(cur);
      if (cur == start) {
        ne.circular = true;
        break;
      }
      ne.chain.push_back(cur);
      processed.insert(cur);
    }
    fused.push_back(std::move(ne));
  }
  for (const std::string& start : {v.sw, v.se}) {
    if (processed.count(start)) continue;
    NewEdge ne;
    ne.circular = true;
    std::string cur = start;
    do {
      ne.chain.push_back(cur);
      processed.insert(cur);
      cur = next.at(cur);
    } while (cur != start);
    fused.push_back(std::move(ne));
  }

  std::map<std::string, std::string> renamed;  // old constituent -> new edge id
  for (const auto& ne : fused) {
    std::string id;
    for (const auto& part : ne.chain) id += (id.empty() ? "" : "+") + part;
    for (const auto& part : ne.chain) renamed[part] = id;
  }

  for (const auto& e : g.edges) {
    if (constituents.count(e.id)) continue;  // handled via fused chains
    Edge nedge = e;
    nedge.left = face_name(e.left);
    nedge.right = face_name(e.right);
    out.edges.push_back(std::move(nedge));
  }
  for (const auto& ne : fused) {
    Edge first = g.edge(ne.chain.front());
    Edge last = g.edge(ne.chain.back());
    Edge fused_edge;
    fused_edge.id = renamed.at(ne.chain.front());
    fused_edge.left = face_name(first.left);
    fused_edge.right = face_name(first.right);
    for (const auto& part : ne.chain) {
      const Edge& pe = g.edge(part);
      require_internal(face_name(pe.left) == fused_edge.left && face_name(pe.right) == fused_edge.right,
                       "fused edge constituents disagree on side faces");
    }
    if (ne.circular) {
      fused_edge.kind = EdgeKind::Circular;
    } else {
      fused_edge.kind = EdgeKind::Linear;
      fused_edge.from = first.from;
      fused_edge.to = last.to;
    }
    out.edges.push_back(std::move(fused_edge));
  }

  for (const auto& u : g.vertices) {
    if (u.id == vertex_id) continue;
    Vertex nu = u;
    nu.north = face_name(u.north);
    nu.west = face_name(u.west);
    nu.south = face_name(u.south);
    nu.east = face_name(u.east);
    auto rn = [&](std::string& eid) {
      auto it = renamed.find(eid);
      if (it != renamed.end()) eid = it->second;
    };
    rn(nu.ne);
    rn(nu.nw);
    rn(nu.sw);
    rn(nu.se);
    out.vertices.push_back(std::move(nu));
  }

  auto violations = validate(out);
  if (!violations.empty())
    throw internal_error("desingularized graph fails validation: " + violations.front().kind + " (" +
                         violations.front().detail + ")");
  return out;
}

MmReport mm_check(const SurfaceGraph& g, const std::string& vertex_id, const Truncation& trunc) {
  int vi = g.vertex_index(vertex_id);
  require_input(vi >= 0, "mm_check: no vertex '" + vertex_id + "'");
  const Vertex& v = g.vertices[static_cast<size_t>(vi)];

  MmReport report;
  report.lhs = mm_lhs(g, vertex_id, trunc);

  SurfaceGraph des = desingularize(g, vertex_id);
  SymbolicExpectation rhs_exp = wilson_expectation(des, trunc);
  report.rhs = rhs_exp.value(des).real() / g.N;
  report.abs_diff = std::abs(report.lhs - report.rhs);

  // Exact per-term identity: type-2 terms drop out of the left side; for
  // type-1 terms the derivative factor equals (c1 - c2)/N = 1/(N cos).
  SymbolicExpectation lhs_exp = wilson_expectation(g, trunc);
  for (const auto& term : lhs_exp.terms) {
    mpz_class num = term.casimirs.at(v.east) - term.casimirs.at(v.north) - term.casimirs.at(v.south) +
                    term.casimirs.at(v.west);
    VertexAngleData a = vertex_angle(g, term.weights, v);
    ++report.terms_checked;
    if (a.vertex_type == 2) {
      if (num != 0) report.per_term_ok = false;
    } else {
      mpq_class lhs_factor(num, 2 * g.N);
      lhs_factor.canonicalize();
      mpq_class rhs_factor = mpq_class(a.c1 - a.c2, g.N);
      rhs_factor.canonicalize();
      if (lhs_factor * term.flat != rhs_factor * term.flat) report.per_term_ok = false;
    }
  }
  return report;
}

}  // namespace ym2d
