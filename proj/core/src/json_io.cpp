#include "ym2d/json_io.hpp"

#include <fstream>

#include "ym2d/errors.hpp"

namespace ym2d {

using nlohmann::json;

namespace {

json boundary_to_json(const BoundaryComponent& b) {
  json j;
  j["id"] = b.id;
  j["kind"] = b.kind == BoundaryKind::Free ? "free" : "constrained";
  if (b.kind == BoundaryKind::Constrained) {
    json evs = json::array();
    for (const auto& z : b.eigenvalues) evs.push_back(json::array({z.real(), z.imag()}));
    j["eigenvalues"] = evs;
  }
  return j;
}

BoundaryComponent boundary_from_json(const json& j) {
  BoundaryComponent b;
  b.id = j.at("id").get<std::string>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "free") {
    b.kind = BoundaryKind::Free;
  } else if (kind == "constrained") {
    b.kind = BoundaryKind::Constrained;
    for (const auto& ev : j.at("eigenvalues"))
      b.eigenvalues.emplace_back(ev.at(0).get<double>(), ev.at(1).get<double>());
  } else {
    throw input_error("boundary kind must be 'free' or 'constrained', got '" + kind + "'");
  }
  return b;
}

}  // namespace

json graph_to_json(const SurfaceGraph& g) {
  json j;
  j["N"] = g.N;
  j["surface"] = {{"euler_char", g.surface_euler_char}, {"closed", g.closed}};
  j["faces"] = json::array();
  for (const auto& f : g.faces) {
    json jf;
    jf["id"] = f.id;
    jf["area"] = f.area;
    jf["euler_char"] = f.euler_char;
    jf["external_boundaries"] = f.external_boundaries;
    jf["internal_boundaries"] = json::array();
    for (const auto& b : f.internal_boundaries) jf["internal_boundaries"].push_back(boundary_to_json(b));
    j["faces"].push_back(jf);
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges) {
    json je;
    je["id"] = e.id;
    je["kind"] = e.kind == EdgeKind::Linear ? "linear" : "circular";
    je["left"] = e.left;
    je["right"] = e.right;
    if (e.kind == EdgeKind::Linear) {
      je["from"] = e.from;
      je["to"] = e.to;
    }
    j["edges"].push_back(je);
  }
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) {
    j["vertices"].push_back(json{{"id", v.id},
                                 {"north", v.north},
                                 {"west", v.west},
                                 {"south", v.south},
                                 {"east", v.east},
                                 {"ne", v.ne},
                                 {"nw", v.nw},
                                 {"sw", v.sw},
                                 {"se", v.se}});
  }
  if (!g.loops.empty()) {
    j["loops"] = json::array();
    for (const auto& w : g.loops) {
      json jw = json::array();
      for (const auto& s : w) jw.push_back(s.edge + (s.forward ? "+" : "-"));
      j["loops"].push_back(jw);
    }
  }
  return j;
}

SurfaceGraph graph_from_json(const json& j) {
  try {
    SurfaceGraph g;
    g.N = j.at("N").get<int>();
    g.surface_euler_char = j.at("surface").at("euler_char").get<int>();
    g.closed = j.at("surface").at("closed").get<bool>();
    for (const auto& jf : j.at("faces")) {
      Face f;
      f.id = jf.at("id").get<std::string>();
      f.area = jf.value("area", 0.0);
      f.euler_char = jf.at("euler_char").get<int>();
      f.external_boundaries = jf.at("external_boundaries").get<int>();
      if (jf.contains("internal_boundaries"))
        for (const auto& jb : jf.at("internal_boundaries")) f.internal_boundaries.push_back(boundary_from_json(jb));
      g.faces.push_back(std::move(f));
    }
    for (const auto& je : j.value("edges", json::array())) {
      Edge e;
      e.id = je.at("id").get<std::string>();
      std::string kind = je.at("kind").get<std::string>();
      if (kind == "linear") {
        e.kind = EdgeKind::Linear;
        e.from = je.at("from").get<std::string>();
        e.to = je.at("to").get<std::string>();
      } else if (kind == "circular") {
        e.kind = EdgeKind::Circular;
      } else {
        throw input_error("edge kind must be 'linear' or 'circular', got '" + kind + "'");
      }
      e.left = je.at("left").get<std::string>();
      e.right = je.at("right").get<std::string>();
      g.edges.push_back(std::move(e));
    }
    for (const auto& jv : j.value("vertices", json::array())) {
      Vertex v;
      v.id = jv.at("id").get<std::string>();
      v.north = jv.at("north").get<std::string>();
      v.west = jv.at("west").get<std::string>();
      v.south = jv.at("south").get<std::string>();
      v.east = jv.at("east").get<std::string>();
      v.ne = jv.at("ne").get<std::string>();
      v.nw = jv.at("nw").get<std::string>();
      v.sw = jv.at("sw").get<std::string>();
      v.se = jv.at("se").get<std::string>();
      g.vertices.push_back(std::move(v));
    }
    for (const auto& jw : j.value("loops", json::array())) {
      LoopWord w;
      for (const auto& js : jw) {
        std::string s = js.get<std::string>();
        require_input(s.size() >= 2 && (s.back() == '+' || s.back() == '-'),
                      "loop step must be '<edge>+' or '<edge>-', got '" + s + "'");
        w.push_back(LoopStep{s.substr(0, s.size() - 1), s.back() == '+'});
      }
      g.loops.push_back(std::move(w));
    }
    return g;
  } catch (const json::exception& ex) {
    throw input_error(std::string("malformed graph JSON: ") + ex.what());
  }
}

SurfaceGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  require_input(in.good(), "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw input_error("cannot parse '" + path + "': " + ex.what());
  }
  return graph_from_json(j);
}

json config_to_json(const WeightConfiguration& c) {
  json faces = json::object();
  for (const auto& [f, w] : c.assignment) faces[f] = w.components();
  return json{{"faces", faces}};
}

WeightConfiguration config_from_json(const json& j) {
  try {
    WeightConfiguration c;
    for (const auto& [key, val] : j.at("faces").items())
      c.assignment.emplace(key, HighestWeight(val.get<std::vector<int>>()));
    return c;
  } catch (const json::exception& ex) {
    throw input_error(std::string("malformed configuration JSON: ") + ex.what());
  }
}

WeightConfiguration load_config(const std::string& path) {
  std::ifstream in(path);
  require_input(in.good(), "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw input_error("cannot parse '" + path + "': " + ex.what());
  }
  return config_from_json(j);
}

}  // namespace ym2d
