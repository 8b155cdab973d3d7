#include "ym2d/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "ym2d/enumerate.hpp"
#include "ym2d/errors.hpp"
#include "ym2d/evaluate.hpp"
#include "ym2d/json_io.hpp"
#include "ym2d/mm.hpp"
#include "ym2d/oracle.hpp"
#include "ym2d/rational.hpp"
#include "ym2d/rng.hpp"
#include "ym2d/symgroup.hpp"

namespace ym2d::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string format = "json";
  int threads = 1;
  uint64_t seed = 0;
};

int env_threads() {
  const char* env = std::getenv("YM2D_THREADS");
  if (!env) return 1;
  int t = std::atoi(env);
  return t >= 1 ? t : 1;
}

Truncation pick_truncation(const SurfaceGraph& g, std::optional<int> max_box) {
  if (max_box) return Truncation::box_bound(*max_box);
  for (const auto& f : g.faces)
    if (f.has_free_boundary()) return Truncation::anchored();
  throw input_error("graph has no free boundary; pass --max-box for a windowed enumeration");
}

json truncation_json(const TruncationReport& r) {
  json j;
  j["mode"] = r.mode == TruncationMode::Anchored ? "anchored" : "box_bound";
  j["window"] = r.window;
  j["truncated"] = r.truncated;
  if (r.weak_balance_failed) j["weak_balance_failed"] = true;
  if (r.truncated && std::isfinite(r.min_discarded_rate))
    j["min_discarded_rate"] = r.min_discarded_rate;
  return j;
}

json expectation_json(const SurfaceGraph& g, const SymbolicExpectation& e) {
  json j;
  auto v = e.value(g);
  j["value"] = v.real();
  if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real()))) j["value_imag"] = v.imag();
  j["terms"] = json::array();
  for (const auto& t : e.terms) {
    json jt;
    jt["faces"] = config_to_json(t.weights)["faces"];
    jt["flat"] = to_fraction_string(t.flat);
    json cas = json::object();
    for (const auto& [f, c] : t.casimirs) cas[f] = c.get_si();
    jt["casimirs"] = cas;
    jt["schur_boundary"] = json::array({t.schur_boundary.real(), t.schur_boundary.imag()});
    j["terms"].push_back(jt);
  }
  j["truncation"] = truncation_json(e.truncation);
  return j;
}

void emit(const Common& c, const json& j, std::ostream& out) {
  if (c.format == "json") {
    out << j.dump() << "\n";
    return;
  }
  // text: flat key/value rendering
  std::function<void(const json&, std::string)> walk = [&](const json& node, std::string prefix) {
    if (node.is_object()) {
      for (const auto& [k, v] : node.items()) walk(v, prefix.empty() ? k : prefix + "." + k);
    } else if (node.is_array()) {
      int i = 0;
      for (const auto& v : node) walk(v, prefix + "[" + std::to_string(i++) + "]");
    } else {
      out << prefix << " = " << node.dump() << "\n";
    }
  };
  walk(j, "");
}

std::vector<cplx> parse_spectrum(const std::string& text, int N) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw input_error(std::string("cannot parse eigenvalue list: ") + ex.what());
  }
  std::vector<cplx> out;
  for (const auto& p : j) out.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  require_input(static_cast<int>(out.size()) == N, "expected exactly N eigenvalues");
  return out;
}

// ---------------------------------------------------------------------------
// symcheck: the representation-theoretic invariant suite.

struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckRow> run_symcheck(int max_n) {
  std::vector<CheckRow> rows;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    rows.push_back(CheckRow{name, pass, detail});
  };

  // Branching rule dimensions: d^mu = sum over lambda -> mu of d^lambda.
  {
    bool ok = true;
    for (int n = 1; n <= std::min(max_n + 2, 8); ++n)
      for (const auto& mu : partitions_of(n)) {
        long total = 0;
        for (const auto& lam : partition_restrictions(mu)) total += dim_symmetric(lam);
        if (n == 1) total = 1;
        if (total != dim_symmetric(mu)) ok = false;
      }
    add("branching-dimensions", ok, "d^mu = sum of d^lambda over restrictions");
  }

  // Coxeter relations of the orthogonal generators.
  {
    bool ok = true;
    double worst = 0.0;
    for (int n = 2; n <= std::min(max_n + 1, 7); ++n)
      for (const auto& shape : partitions_of(n)) {
        OrthogonalRep rep = orthogonal_rep(shape);
        auto eye = Eigen::MatrixXd::Identity(rep.dim, rep.dim);
        for (int k = 2; k <= n; ++k) {
          worst = std::max(worst, (rep.generator(k) * rep.generator(k) - eye).cwiseAbs().maxCoeff());
          if (k + 1 <= n) {
            Eigen::MatrixXd ab = rep.generator(k) * rep.generator(k + 1);
            worst = std::max(worst, (ab * ab * ab - eye).cwiseAbs().maxCoeff());
          }
          for (int l = k + 2; l <= n; ++l) {
            Eigen::MatrixXd ab = rep.generator(k) * rep.generator(l);
            worst = std::max(worst, (ab * ab - eye).cwiseAbs().maxCoeff());
          }
        }
      }
    ok = worst <= 1e-12;
    add("coxeter-relations", ok, "max residual " + std::to_string(worst));
  }

  // Jucys-Murphy diagonality with content eigenvalues.
  {
    double worst = 0.0;
    for (int n = 1; n <= std::min(max_n, 6); ++n)
      for (const auto& shape : partitions_of(n)) {
        OrthogonalRep rep = orthogonal_rep(shape);
        for (int k = 1; k <= n; ++k) {
          Eigen::MatrixXd x = jm_matrix(rep, k);
          for (int t = 0; t < rep.dim; ++t)
            for (int u = 0; u < rep.dim; ++u) {
              double expect = (t == u) ? rep.tableaux[static_cast<size_t>(t)].contents[static_cast<size_t>(k - 1)] : 0.0;
              worst = std::max(worst, std::abs(x(t, u) - expect));
            }
        }
      }
    add("jucys-murphy-diagonal", worst <= 1e-10, "max residual " + std::to_string(worst));
  }

  // Characters against Murnaghan-Nakayama.
  {
    bool ok = true;
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
      const SymmetricGroup& sn = GroupAlgebra::table(n);
      for (const auto& shape : partitions_of(n)) {
        OrthogonalRep rep = orthogonal_rep(shape);
        for (int r = 0; r < sn.order(); ++r) {
          double tr = rep.matrix_of(sn.at(r)).trace();
          long mn = murnaghan_nakayama(shape, sn.at(r).cycle_type());
          if (std::abs(tr - static_cast<double>(mn)) > 1e-9) ok = false;
        }
      }
    }
    add("character-murnaghan-nakayama", ok, "trace rounds to the exact character");
  }

  // Intertwiner equivariance (restriction identity on generators).
  {
    double worst = 0.0;
    for (int n = 2; n <= std::min(max_n, 6); ++n)
      for (const auto& mu : partitions_of(n))
        for (const auto& lam : partition_restrictions(mu)) {
          OrthogonalRep rl = orthogonal_rep(lam);
          OrthogonalRep rm = orthogonal_rep(mu);
          Eigen::MatrixXd i_ml = intertwiner(mu, lam);
          for (int k = 2; k <= n - 1; ++k) {
            Eigen::MatrixXd lhs = i_ml.transpose() * rm.generator(k) * i_ml;
            worst = std::max(worst, (lhs - rl.generator(k)).cwiseAbs().maxCoeff());
          }
        }
    add("intertwiner-equivariance", worst <= 1e-10, "max residual " + std::to_string(worst));
  }

  // Crossing scalar: matrix composition against the closed form.
  {
    double worst = 0.0;
    long cases = 0;
    for (int n = 2; n <= max_n; ++n)
      for (const auto& xi : partitions_of(n))
        for (const auto& mu : partition_restrictions(xi))
          for (const auto& nu : partition_restrictions(xi))
            for (const auto& lam : partition_restrictions(mu)) {
              if (!partition_extends(lam, nu)) continue;
              ++cases;
              double a = scalar_a_matrix(lam, mu, nu, xi);
              double b = scalar_a_closed(lam, mu, nu, xi).value;
              worst = std::max(worst, std::abs(a - b));
            }
    add("crossing-scalar", worst <= 1e-10,
        std::to_string(cases) + " cases, max deviation " + std::to_string(worst));
  }

  // Projector idempotence and orthogonality.
  {
    bool ok = true;
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
      auto shapes = partitions_of(n);
      std::vector<GroupAlgebra> pis;
      for (const auto& s : shapes) pis.push_back(projector(s, n));
      for (size_t a = 0; a < pis.size(); ++a)
        for (size_t b = 0; b < pis.size(); ++b) {
          GroupAlgebra prod = pis[a] * pis[b];
          const GroupAlgebra& expect = pis[a];
          for (int r = 0; r < prod.order(); ++r) {
            mpq_class want = (a == b) ? expect.coeff(r) : mpq_class(0);
            if (prod.coeff(r) != want) ok = false;
          }
        }
    }
    add("projector-orthogonality", ok, "pi^a pi^b = delta pi^a, exact");
  }

  return rows;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wilson loop expectations of 2D U(N) Yang-Mills by balanced highest-weight sums"};
  app.require_subcommand(1);

  Common common;
  common.threads = env_threads();
  app.add_option("--format", common.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", common.threads, "worker threads");
  app.add_option("--seed", common.seed, "random seed");

  // compute
  std::string in_path, config_path, vertex_id;
  std::optional<int> opt_N, opt_max_box;
  bool normalized = false;
  auto* compute = app.add_subcommand("compute", "evaluate a Wilson loop expectation");
  compute->add_option("--input", in_path, "graph JSON file")->required();
  compute->add_option("--N", opt_N, "override the unitary rank");
  compute->add_option("--max-box", opt_max_box, "component window for closed surfaces");
  compute->add_flag("--normalized", normalized, "divide by the partition function");

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list balanced configurations as JSON lines");
  enumerate_cmd->add_option("--input", in_path, "graph JSON file")->required();
  enumerate_cmd->add_option("--N", opt_N, "override the unitary rank");
  enumerate_cmd->add_option("--max-box", opt_max_box, "component window for closed surfaces");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check the structural invariants of a graph");
  validate_cmd->add_option("--input", in_path, "graph JSON file")->required();

  // partition
  int part_euler = 2;
  double part_area = 1.0;
  int part_N = 2;
  bool part_free = false;
  std::vector<std::string> part_constrained;
  auto* partition_cmd = app.add_subcommand("partition", "Yang-Mills partition function of a surface");
  partition_cmd->add_option("--N", part_N, "unitary rank")->required();
  partition_cmd->add_option("--euler-char", part_euler, "Euler characteristic of the surface")->required();
  partition_cmd->add_option("--area", part_area, "total area");
  partition_cmd->add_flag("--free", part_free, "at least one free boundary component");
  partition_cmd->add_option("--constrained", part_constrained,
                            "constrained boundary spectrum as [[re,im],...] (repeatable)");

  // mm-check
  auto* mm_cmd = app.add_subcommand("mm-check", "Makeenko-Migdal two-path check at a vertex");
  mm_cmd->add_option("--input", in_path, "graph JSON file")->required();
  mm_cmd->add_option("--vertex", vertex_id, "vertex id")->required();
  mm_cmd->add_option("--N", opt_N, "override the unitary rank");
  mm_cmd->add_option("--max-box", opt_max_box, "component window for closed surfaces");

  // symcheck
  int max_n = 6;
  auto* symcheck_cmd = app.add_subcommand("symcheck", "symmetric-group invariant suite");
  symcheck_cmd->add_option("--max-n", max_n, "largest symmetric group size");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "independent verification oracles");
  oracle_cmd->require_subcommand(1);
  int perm_bound = 4;
  auto* perm_cmd = oracle_cmd->add_subcommand("perm", "exact permutation-sum flat contribution");
  perm_cmd->add_option("--input", in_path, "graph JSON file")->required();
  perm_cmd->add_option("--config", config_path, "configuration JSON file")->required();
  perm_cmd->add_option("--bound", perm_bound, "largest face box count");

  long long mc_samples = 100000;
  double hk_tol = 1e-10;
  auto* mc_cmd = oracle_cmd->add_subcommand("mc", "Monte Carlo Driver-Sengupta integration");
  mc_cmd->add_option("--input", in_path, "graph JSON file")->required();
  mc_cmd->add_option("--samples", mc_samples, "sample count");
  mc_cmd->add_option("--hk-tol", hk_tol, "relative tolerance of the heat-kernel series");

  int cs_n = 2, cs_N = 2;
  long long cs_samples = 100000;
  auto* cs_cmd = oracle_cmd->add_subcommand("cs", "moment formula against Monte Carlo");
  cs_cmd->add_option("--n", cs_n, "tensor degree");
  cs_cmd->add_option("--N", cs_N, "unitary rank");
  cs_cmd->add_option("--samples", cs_samples, "sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    auto load = [&]() {
      SurfaceGraph g = load_graph(in_path);
      if (opt_N) g.N = *opt_N;
      return g;
    };

    if (*compute) {
      SurfaceGraph g = load();
      SymbolicExpectation e = wilson_expectation(g, pick_truncation(g, opt_max_box));
      json j = expectation_json(g, e);
      if (normalized) {
        double z = graph_partition_function(g);
        j["partition_function"] = z;
        j["normalized"] = j["value"].get<double>() / z;
      }
      emit(common, j, out);
      return 0;
    }
    if (*enumerate_cmd) {
      SurfaceGraph g = load();
      auto violations = validate(g);
      if (!violations.empty())
        throw input_error("invalid graph: " + violations.front().kind + " (" + violations.front().detail + ")");
      enumerate_balanced(
          g, pick_truncation(g, opt_max_box),
          [&](const WeightConfiguration& c) {
            out << config_to_json(c).dump() << "\n";
            return true;
          },
          nullptr);
      return 0;
    }
    if (*validate_cmd) {
      SurfaceGraph g = load_graph(in_path);
      auto violations = validate(g);
      json j;
      j["violations"] = json::array();
      for (const auto& v : violations)
        j["violations"].push_back(json{{"kind", v.kind}, {"ids", v.ids}, {"detail", v.detail}});
      emit(common, j, out);
      return violations.empty() ? 0 : 1;
    }
    if (*partition_cmd) {
      std::vector<std::vector<cplx>> constrained;
      for (const auto& text : part_constrained) constrained.push_back(parse_spectrum(text, part_N));
      SeriesReport rep;
      double z = partition_function(part_N, part_euler, part_area, constrained, part_free, {}, &rep);
      json j{{"value", z}, {"last_shell", rep.last_shell}, {"converged", rep.converged}};
      emit(common, j, out);
      return 0;
    }
    if (*mm_cmd) {
      SurfaceGraph g = load();
      MmReport r = mm_check(g, vertex_id, pick_truncation(g, opt_max_box));
      json j{{"lhs", r.lhs},
             {"rhs", r.rhs},
             {"abs_diff", r.abs_diff},
             {"per_term_ok", r.per_term_ok},
             {"terms_checked", r.terms_checked}};
      emit(common, j, out);
      return 0;
    }
    if (*symcheck_cmd) {
      auto rows = run_symcheck(max_n);
      bool all = true;
      if (common.format == "json") {
        json j = json::array();
        for (const auto& r : rows) {
          j.push_back(json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
          all = all && r.pass;
        }
        emit(common, json{{"checks", j}, {"all_pass", all}}, out);
      } else {
        for (const auto& r : rows) {
          out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.detail << ")\n";
          all = all && r.pass;
        }
        out << (all ? "all checks passed\n" : "FAILURES present\n");
      }
      return all ? 0 : 1;
    }
    if (*perm_cmd) {
      SurfaceGraph g = load();
      WeightConfiguration c = load_config(config_path);
      mpq_class flat = flat_contribution_perm_sum(g, c, perm_bound);
      emit(common, json{{"flat", to_fraction_string(flat)}}, out);
      return 0;
    }
    if (*mc_cmd) {
      SurfaceGraph g = load();
      McOptions o;
      o.samples = mc_samples;
      o.seed = common.seed;
      o.hk_rel_tol = hk_tol;
      o.threads = common.threads;
      McResult r = mc_driver_sengupta(g, o);
      emit(common, json{{"mean", r.mean}, {"stderr", r.stderr_of_mean}, {"samples", r.samples}}, out);
      return 0;
    }
    if (*cs_cmd) {
      const long dim = static_cast<long>(std::pow(cs_N, cs_n));
      SubstreamRng rng(common.seed, 12345);
      Eigen::VectorXcd w(dim), psi(dim);
      for (long i = 0; i < dim; ++i) {
        w(i) = cplx(rng.gaussian(), rng.gaussian());
        psi(i) = cplx(rng.gaussian(), rng.gaussian());
      }
      Eigen::MatrixXcd exact = cs_integral_apply(cs_n, cs_N, w, psi);
      McMatrix mc = cs_integral_mc(cs_n, cs_N, w, psi, cs_samples, common.seed);
      double worst_sigma = 0.0;
      for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) {
          double dre = std::abs(exact(i, j).real() - mc.mean(i, j).real());
          double dim_ = std::abs(exact(i, j).imag() - mc.mean(i, j).imag());
          if (mc.stderr_re(i, j) > 0) worst_sigma = std::max(worst_sigma, dre / mc.stderr_re(i, j));
          if (mc.stderr_im(i, j) > 0) worst_sigma = std::max(worst_sigma, dim_ / mc.stderr_im(i, j));
        }
      emit(common, json{{"max_sigma_deviation", worst_sigma}, {"pass", worst_sigma <= 4.0}}, out);
      return worst_sigma <= 4.0 ? 0 : 1;
    }
    err << "no subcommand dispatched\n";
    return 1;
  } catch (const internal_error& e) {
    err << "internal correctness alarm: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ym2d::cli
