#include "ym2d/evaluate.hpp"

#include <cmath>

#include "ym2d/errors.hpp"

namespace ym2d {

VertexAngleData vertex_angle(const SurfaceGraph& g, const WeightConfiguration& c, const Vertex& v) {
  (void)g;
  const HighestWeight& w = c.at(v.west);
  const HighestWeight& n = c.at(v.north);
  const HighestWeight& s = c.at(v.south);
  const HighestWeight& e = c.at(v.east);
  require_input(extends_to(w, n) && extends_to(n, e), "configuration is not balanced at vertex '" + v.id + "'");
  VertexAngleData out;
  out.c1 = content(n, e);
  out.c2 = content(w, n);
  require_internal(out.c1 != out.c2, "equal consecutive contents at a vertex");
  out.cos_value = mpq_class(1, out.c1 - out.c2);
  out.cos_value.canonicalize();
  out.vertex_type = (n == s) ? 1 : 2;
  return out;
}

namespace {

mpq_class pow_int(const mpz_class& base, int e) {
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
  if (e >= 0) return mpq_class(p);
  mpq_class q(1, p);
  q.canonicalize();
  return q;
}

}  // namespace

mpq_class flat_contribution(const SurfaceGraph& g, const WeightConfiguration& c) {
  // Only the extension condition along edges kills the contribution; the
  // vanishing at the free boundary restricts the summation set, not the
  // value (which is invariant under global shifts).
  for (const auto& e : g.edges)
    if (!extends_to(c.at(e.left), c.at(e.right))) return mpq_class(0);

  mpq_class flat(1);
  for (const auto& f : g.faces) flat *= pow_int(dim_unitary(c.at(f.id)), f.euler_char);
  for (const auto& e : g.edges)
    if (e.kind == EdgeKind::Linear) flat /= dim_unitary(c.at(e.right));
  for (const auto& v : g.vertices) flat *= dim_unitary(c.at(v.east));

  // Vertex factors: cosines multiply in exactly; sines are grouped by the
  // unordered pair of labels of the two crossing level lines, each pair
  // appearing an even number of times.
  std::map<std::pair<EdgeLabel, EdgeLabel>, long> pair_count;
  for (const auto& v : g.vertices) {
    VertexAngleData a = vertex_angle(g, c, v);
    if (a.vertex_type == 1) {
      flat *= a.cos_value;
    } else {
      auto [l1, l2] = crossing_labels(g, c, v);
      require_internal(l1.index != l2.index, "crossing level lines share a coordinate");
      if (l2 < l1) std::swap(l1, l2);
      pair_count[{l1, l2}] += 1;
    }
  }
  for (const auto& [pair, count] : pair_count) {
    require_internal(count % 2 == 0, "odd sine multiplicity for a level-line label pair");
    const auto& [l1, l2] = pair;
    long diff = static_cast<long>(l1.value) - l2.value + l2.index - l1.index;
    mpq_class sin2(diff * diff - 1, diff * diff);
    sin2.canonicalize();
    for (long k = 0; k < count / 2; ++k) flat *= sin2;
  }
  return flat;
}

std::complex<double> ExactTerm::value_at(const SurfaceGraph& g) const {
  double rate = 0.0;
  for (const auto& f : g.faces) rate += f.area * casimirs.at(f.id).get_d();
  return flat.get_d() * schur_boundary * std::exp(-rate / (2.0 * g.N));
}

std::complex<double> SymbolicExpectation::value(const SurfaceGraph& g) const {
  double re = 0.0, rec = 0.0, im = 0.0, imc = 0.0;
  auto kahan = [](double& sum, double& comp, double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  for (const auto& term : terms) {
    auto v = term.value_at(g);
    kahan(re, rec, v.real());
    kahan(im, imc, v.imag());
  }
  return {re, im};
}

SymbolicExpectation wilson_expectation(const SurfaceGraph& g, const Truncation& trunc) {
  auto violations = validate(g);
  if (!violations.empty())
    throw input_error("invalid graph: " + violations.front().kind + " (" + violations.front().detail + ")");

  SymbolicExpectation out;
  out.N = g.N;
  enumerate_balanced(
      g, trunc,
      [&](const WeightConfiguration& c) {
        ExactTerm term;
        term.weights = c;
        term.flat = flat_contribution(g, c);
        if (term.flat == 0) return true;
        for (const auto& f : g.faces) {
          term.casimirs.emplace(f.id, casimir(c.at(f.id)));
          for (const auto& b : f.internal_boundaries)
            if (b.kind == BoundaryKind::Constrained)
              term.schur_boundary *= schur_eval(c.at(f.id), b.eigenvalues);
        }
        out.terms.push_back(std::move(term));
        return true;
      },
      &out.truncation);
  return out;
}

double graph_partition_function(const SurfaceGraph& g, const SeriesOptions& opt, SeriesReport* rep) {
  bool any_free = false;
  std::vector<std::vector<cplx>> constrained;
  for (const auto& f : g.faces)
    for (const auto& b : f.internal_boundaries) {
      if (b.kind == BoundaryKind::Free)
        any_free = true;
      else
        constrained.push_back(b.eigenvalues);
    }
  return partition_function(g.N, g.surface_euler_char, g.total_area(), constrained, any_free, opt, rep);
}

std::complex<double> normalized_expectation(const SurfaceGraph& g, const Truncation& trunc,
                                            const SeriesOptions& opt) {
  return wilson_expectation(g, trunc).value(g) / graph_partition_function(g, opt);
}

}  // namespace ym2d
