#include "leavitt/invariants.hpp"

#include <functional>

#include "leavitt/error.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/ideal_tools.hpp"
#include "leavitt/point.hpp"
#include "leavitt/sampling.hpp"

namespace leavitt {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }
  InvariantResult take() { return std::move(result_); }

 private:
  InvariantResult result_;
};

std::size_t paths_ending_at(const Graph& g, Vertex w) {
  std::size_t n = 0;
  for (const Path& p : all_paths(g, g.vertex_count()))
    if (g.range(p) == w) ++n;
  return n;
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite(const SkewRing& ring, const InvariantOptions& options) {
  const Graph& g = ring.graph();
  const DiagonalAlgebra& diag = ring.diag();
  std::vector<InvariantResult> out;
  ElementSampler sampler(ring, options.seed, options.word_length, 2);
  const std::vector<AdmissibleForm> forms = enumerate_forms(g, options.word_length);

  {
    Recorder r("ck-relations");
    for (const auto& v : check_ck_relations(ring))
      r.expect(false, [&] { return std::string(relation_name(v.relation)) + ": " + v.detail; });
    r.expect(true, [] { return ""; });
    out.push_back(r.take());
  }
  {
    Recorder r("alpha-identity");
    for (const auto& p : forms) {
      const AdmissibleForm p_inv = invert(g, p);
      for (const auto& q : forms) {
        DiagElement lhs = ring.alpha_apply(p, diag.mul(diag.indicator(p_inv), diag.indicator(q)));
        AdmissibleForm pq = compose(g, p, q);
        DiagElement rhs = pq.is_null() ? DiagElement{} : diag.mul(diag.indicator(p), diag.indicator(pq));
        r.expect(lhs == rhs, [&] { return "p=" + to_string(g, p) + " q=" + to_string(g, q); });
      }
    }
    out.push_back(r.take());
  }
  {
    Recorder r("ring-axioms");
    for (std::size_t i = 0; i < options.trials; ++i) {
      SkewElement x = sampler.element(), y = sampler.element(), z = sampler.element();
      r.expect(ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z)),
               [&] { return "associativity fails for x=" + ring.to_string(x); });
      r.expect(ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z)),
               [&] { return "left distributivity fails for x=" + ring.to_string(x); });
      r.expect(ring.mul(ring.add(x, y), z) == ring.add(ring.mul(x, z), ring.mul(y, z)),
               [&] { return "right distributivity fails for z=" + ring.to_string(z); });
      r.expect(ring.star(ring.mul(x, y)) == ring.mul(ring.star(y), ring.star(x)),
               [&] { return "star anti-multiplicativity fails for x=" + ring.to_string(x); });
      r.expect(ring.star(ring.star(x)) == x, [&] { return "star is not an involution on " + ring.to_string(x); });
    }
    out.push_back(r.take());
  }
  {
    Recorder r("grading");
    for (std::size_t i = 0; i < options.trials; ++i) {
      auto [zx, x] = sampler.homogeneous();
      auto [zy, y] = sampler.homogeneous();
      const SkewElement xy = ring.mul(x, y);
      for (const auto& [p, a] : xy.fibers())
        r.expect(p.grade() == zx + zy, [&] { return "product fiber " + to_string(g, p) + " has the wrong grade"; });
      SkewElement w = sampler.element();
      SkewElement sum;
      for (const auto& [z, part] : ring.grade_decompose(w)) sum = ring.add(sum, part);
      r.expect(sum == w, [&] { return "grade components do not sum to " + ring.to_string(w); });
    }
    out.push_back(r.take());
  }
  const std::vector<BoundaryPoint> points = enumerate_points(g, 4);
  {
    Recorder r("theta-alpha");
    for (const auto& p : forms) {
      const AdmissibleForm p_inv = invert(g, p);
      for (std::size_t i = 0; i < 4; ++i) {
        DiagElement f = diag.mul(diag.indicator(p_inv), sampler.diag());
        DiagElement moved = ring.alpha_apply(p, f);
        for (const auto& xi : points) {
          Scalar expected = diag.scalar(0);
          if (xi.has_prefix(p.is_neutral() ? xi.truncate(0) : p.positive_part()))
            expected = diag.evaluate(f, diag.theta_apply(p_inv, xi));
          r.expect(diag.evaluate(moved, xi) == expected,
                   [&] { return "p=" + to_string(g, p) + " at " + xi.to_string(g); });
        }
      }
    }
    out.push_back(r.take());
  }
  {
    Recorder r("zero-test");
    for (std::size_t i = 0; i < options.trials; ++i) {
      DiagElement x = sampler.diag(4);
      DiagElement y = x;
      // Add a random identity 1_μ - Σ_children 1_{μe} so zero and nonzero cases both occur.
      Path mu = sampler.index();
      if (!g.is_sink(g.range(mu))) {
        DiagElement relation = diag.indicator(mu);
        for (const Path& c : partition_basis(g, mu, 1)) relation.add(c, diag.scalar(-1));
        y += relation;
      }
      DiagElement raw = y - (i % 2 ? x : DiagElement{});
      bool all_vanish = true;
      const std::size_t depth = raw.max_depth();
      for (const auto& xi : enumerate_points(g, std::max(2 * depth, depth + 2 * g.vertex_count())))
        if (!diag.evaluate(raw, xi).is_zero()) all_vanish = false;
      r.expect(diag.is_zero(raw) == all_vanish, [&] { return "is_zero disagrees on " + diag.to_string(raw); });
    }
    out.push_back(r.take());
  }
  if (condition_L(g).holds) {
    Recorder r("reduction");
    for (std::size_t i = 0; i < options.trials; ++i) {
      SkewElement x = sampler.nonzero_element();
      VertexProjection vp = extract_vertex_projection(ring, x);
      r.expect(verify_certificate(ring, vp.certificate) && !vp.scalar.is_zero() &&
                   vp.certificate.claimed_result ==
                       ring.scale(vp.scalar, ring.monomial(AdmissibleForm::neutral(), diag.indicator(vp.vertex))),
               [&] { return "reduction of " + ring.to_string(x); });
    }
    out.push_back(r.take());
  }
  if (is_acyclic(g)) {
    Recorder r("acyclic-dimension");
    std::size_t expected = 0;
    for (Vertex w : g.vertices())
      if (g.is_sink(w)) expected += paths_ending_at(g, w) * paths_ending_at(g, w);
    std::size_t got = acyclic_dimension(ring);
    r.expect(got == expected,
             [&] { return "rank " + std::to_string(got) + " != " + std::to_string(expected); });
    out.push_back(r.take());
  }
  return out;
}

}  // namespace leavitt
