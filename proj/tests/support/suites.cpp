#include "suites.hpp"

#include "catalog.hpp"
#include "leavitt/certificate.hpp"
#include "leavitt/ideal_tools.hpp"
#include "leavitt/sampling.hpp"

namespace leavitt::testing {

void SuiteResult::check(bool passed, const std::string& what) {
  ++cases;
  if (passed) return;
  if (failures++ == 0) first_failure = what;
}

void SuiteResult::merge(const SuiteResult& other) {
  cases += other.cases;
  if (other.failures && !failures) first_failure = other.first_failure;
  failures += other.failures;
}

namespace {

using Kind = AdmissibleForm::Kind;

bool is_extension(const Path& longer, const Path& prefix) {
  if (longer.start != prefix.start || longer.length() < prefix.length()) return false;
  return std::equal(prefix.edges.begin(), prefix.edges.end(), longer.edges.begin());
}

bool has_positive_path(const AdmissibleForm& p) { return p.kind() == Kind::kPos || p.kind() == Kind::kMixed; }

// Range of b for Neg(b), read from the word itself.
Vertex neg_range(const Graph& g, const AdmissibleForm& p) { return g.range(p.word().front().edge); }

}  // namespace

SuiteResult lemma22_rows(const DiagonalAlgebra& diag, std::size_t max_len) {
  const Graph& g = diag.graph();
  SuiteResult res;
  const auto forms = enumerate_forms(g, max_len);
  const DiagElement zero;
  auto basis = [](const Path& p) { return DiagElement::basis(p); };
  auto label = [&](const std::string& row, const AdmissibleForm& p, const AdmissibleForm& q) {
    return row + " " + to_string(g, p) + " / " + to_string(g, q);
  };

  for (const auto& p : forms) {
    if (p.is_neutral()) continue;
    for (const auto& q : forms) {
      if (q.is_neutral()) continue;
      DiagElement got = diag.mul(diag.indicator(p), diag.indicator(q));
      if (p.kind() == Kind::kNeg && q.kind() == Kind::kNeg) {
        // Row 1: X_{a⁻¹} ∩ X_{c⁻¹}.
        Vertex ra = neg_range(g, p), rc = neg_range(g, q);
        DiagElement want = ra == rc ? basis(Path::trivial(ra)) : zero;
        res.check(diag.equal(got, want), label("row1", p, q));
      } else if (p.kind() == Kind::kNeg && has_positive_path(q)) {
        // Row 2: X_{a⁻¹} ∩ X_{cd⁻¹}.
        const Path& c = q.positive_part();
        DiagElement want = neg_range(g, p) == c.start ? basis(c) : zero;
        res.check(diag.equal(got, want), label("row2", p, q));
      } else if (has_positive_path(p) && has_positive_path(q)) {
        // Row 3: X_{ab⁻¹} ∩ X_{cd⁻¹}.
        const Path& a = p.positive_part();
        const Path& c = q.positive_part();
        DiagElement want = is_extension(a, c) ? basis(a) : is_extension(c, a) ? basis(c) : zero;
        res.check(diag.equal(got, want), label("row3", p, q));
      }
    }
    for (Vertex v : g.vertices()) {
      DiagElement got = diag.mul(diag.indicator(v), diag.indicator(p));
      if (p.kind() == Kind::kNeg) {
        // Row 4: X_v ∩ X_{b⁻¹}.
        DiagElement want = neg_range(g, p) == v ? basis(Path::trivial(v)) : zero;
        res.check(diag.equal(got, want), "row4 " + g.name(v) + " / " + to_string(g, p));
      } else {
        // Row 5: X_v ∩ X_{ab⁻¹}.
        DiagElement want = p.positive_part().start == v ? basis(p.positive_part()) : zero;
        res.check(diag.equal(got, want), "row5 " + g.name(v) + " / " + to_string(g, p));
      }
    }
  }
  // Row 5, second half: X_v is the disjoint union of X_e over edges leaving v.
  for (Vertex v : g.vertices()) {
    if (g.is_sink(v)) continue;
    DiagElement cover;
    for (Edge e : g.out_edges(v)) cover += basis(g.path({e}));
    res.check(diag.equal(diag.indicator(v), cover), "row5 cover at " + g.name(v));
  }
  return res;
}

SuiteResult alpha_identity(const SkewRing& ring, std::size_t max_len) {
  const Graph& g = ring.graph();
  const DiagonalAlgebra& diag = ring.diag();
  SuiteResult res;
  const auto forms = enumerate_forms(g, max_len);
  for (const auto& p : forms) {
    const DiagElement dom = diag.indicator(invert(g, p));
    const DiagElement img = diag.indicator(p);
    for (const auto& q : forms) {
      DiagElement lhs = ring.alpha_apply(p, diag.mul(dom, diag.indicator(q)));
      AdmissibleForm pq = compose(g, p, q);
      DiagElement rhs = pq.is_null() ? DiagElement{} : diag.mul(img, diag.indicator(pq));
      res.check(diag.equal(lhs, rhs), "p=" + to_string(g, p) + " q=" + to_string(g, q));
    }
  }
  return res;
}

SuiteResult partial_action_laws(const SkewRing& ring, std::size_t max_len) {
  const Graph& g = ring.graph();
  const DiagonalAlgebra& diag = ring.diag();
  SuiteResult res;
  const auto forms = enumerate_forms(g, max_len);
  const auto indices = all_paths(g, max_len);
  for (const Path& mu : indices) {
    DiagElement f = DiagElement::basis(mu);
    res.check(diag.equal(ring.alpha_apply(AdmissibleForm::neutral(), f), f), "alpha_0 on " + g.to_string(mu));
  }
  for (const auto& q : forms) {
    const AdmissibleForm q_inv = invert(g, q);
    for (const Path& mu : indices) {
      DiagElement f = DiagElement::basis(mu);
      if (!diag.in_domain(f, q_inv)) continue;
      DiagElement moved = ring.alpha_apply(q, f);
      for (const auto& p : forms) {
        AdmissibleForm pq = compose(g, p, q);
        if (pq.is_null() || !diag.in_domain(moved, invert(g, p))) continue;
        res.check(diag.equal(ring.alpha_apply(p, moved), ring.alpha_apply(pq, f)),
                  "p=" + to_string(g, p) + " q=" + to_string(g, q) + " f=" + g.to_string(mu));
      }
    }
  }
  return res;
}

SuiteResult theta_alpha(const SkewRing& ring, std::size_t point_size, std::size_t form_len, std::size_t depth) {
  const Graph& g = ring.graph();
  const DiagonalAlgebra& diag = ring.diag();
  SuiteResult res;
  const auto points = enumerate_points(g, point_size);
  const auto indices = all_paths(g, depth);
  for (const auto& p : enumerate_forms(g, form_len)) {
    const AdmissibleForm p_inv = invert(g, p);
    auto in_image = [&](const BoundaryPoint& xi) {
      if (p.is_neutral()) return true;
      if (p.kind() == Kind::kNeg) return xi.source() == neg_range(g, p);
      const Path& a = p.positive_part();
      for (std::size_t k = 0; k < a.length(); ++k)
        if (xi.edge_at(k) != a.edges[k]) return false;
      return xi.source() == a.start;
    };
    for (const Path& mu : indices) {
      DiagElement f = diag.mul(diag.indicator(p_inv), DiagElement::basis(mu));
      DiagElement moved = ring.alpha_apply(p, f);
      for (const auto& xi : points) {
        Scalar want = diag.scalar(0);
        if (in_image(xi)) want = oracle_evaluate(f, diag.theta_apply(p_inv, xi), diag.field());
        res.check(oracle_evaluate(moved, xi, diag.field()) == want,
                  "p=" + to_string(g, p) + " f=1_" + g.to_string(mu) + " at " + xi.to_string(g));
      }
    }
  }
  return res;
}

SuiteResult zero_test(const SkewRing& ring, std::uint64_t seed, std::size_t count) {
  const Graph& g = ring.graph();
  const DiagonalAlgebra& diag = ring.diag();
  SuiteResult res;
  ElementSampler sampler(ring, seed, 2, 3);
  std::vector<std::vector<BoundaryPoint>> points_by_depth;
  // Size 2·d alone misses every point at a vertex whose nearest sink or
  // cycle is far away (v1 in A3 at depth 0); every cell of depth d extends to
  // a point of size <= d + 2|E⁰|, so the union of both bounds is exhaustive.
  for (std::size_t d = 0; d <= 4; ++d)
    points_by_depth.push_back(enumerate_points(g, std::max(2 * d, d + 2 * g.vertex_count())));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < count; ++i) {
    DiagElement x = sampler.diag(4);
    // Half the time add relations 1_μ − Σ_e 1_{μe}, which vanish as functions.
    if (coin(sampler.rng())) {
      DiagElement y;
      for (int k = 0; k < 2; ++k) {
        Path mu = sampler.index();
        if (g.is_sink(g.range(mu))) continue;
        Scalar c = sampler.scalar();
        y.add(mu, c);
        for (const Path& child : partition_basis(g, mu, 1)) y.add(child, -c);
      }
      x = coin(sampler.rng()) ? y : x + y;
    }
    bool vanishes = true;
    for (const auto& xi : points_by_depth.at(x.max_depth()))
      if (!oracle_evaluate(x, xi, diag.field()).is_zero()) vanishes = false;
    res.check(diag.is_zero(x) == vanishes, "is_zero on " + diag.to_string(x));
  }
  return res;
}

SuiteResult ring_axioms(const SkewRing& ring, std::uint64_t seed, std::size_t triples, std::size_t star_pairs) {
  SuiteResult res;
  ElementSampler sampler(ring, seed, 3, 3);
  for (std::size_t i = 0; i < triples; ++i) {
    SkewElement x = sampler.element(4), y = sampler.element(4), z = sampler.element(4);
    const std::string at = " at x=" + ring.to_string(x);
    res.check(ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z)), "associativity" + at);
    res.check(ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z)), "left distributivity" + at);
    res.check(ring.mul(ring.add(x, y), z) == ring.add(ring.mul(x, z), ring.mul(y, z)), "right distributivity" + at);
  }
  for (std::size_t i = 0; i < star_pairs; ++i) {
    SkewElement x = sampler.element(4), y = sampler.element(4);
    res.check(ring.star(ring.mul(x, y)) == ring.mul(ring.star(y), ring.star(x)), "star" + ring.to_string(x));
    res.check(ring.star(ring.star(x)) == x, "star involution " + ring.to_string(x));
  }
  return res;
}

SuiteResult grading(const SkewRing& ring, std::uint64_t seed, std::size_t pairs) {
  SuiteResult res;
  ElementSampler sampler(ring, seed, 3, 2);
  for (std::size_t i = 0; i < pairs; ++i) {
    auto [zx, x] = sampler.homogeneous();
    auto [zy, y] = sampler.homogeneous();
    const SkewElement xy = ring.mul(x, y);
    for (const auto& [p, a] : xy.fibers())
      res.check(p.grade() == zx + zy, "grade of " + to_string(ring.graph(), p) + " in " + ring.to_string(xy));
    for (const SkewElement& w : {x, y, ring.add(x, y), sampler.element(4)}) {
      SkewElement sum;
      for (const auto& [z, part] : ring.grade_decompose(w)) {
        for (const auto& [p, a] : part.fibers()) res.check(p.grade() == z, "component grade");
        sum = ring.add(sum, part);
      }
      res.check(sum == w, "components of " + ring.to_string(w));
    }
  }
  return res;
}

SuiteResult reduction(const SkewRing& ring, std::uint64_t seed, std::size_t count) {
  SuiteResult res;
  ElementSampler sampler(ring, seed, 2, 2);
  for (std::size_t i = 0; i < count; ++i) {
    SkewElement x = sampler.nonzero_element(3);
    try {
      VertexProjection vp = extract_vertex_projection(ring, x);
      const Certificate& cert = vp.certificate;
      bool sourced = !cert.chains.empty() &&
                     std::all_of(cert.chains.begin(), cert.chains.end(), [&](const auto& c) { return c.source == x; });
      SkewElement target = ring.scale(vp.scalar, ring.monomial(AdmissibleForm::neutral(), ring.diag().indicator(vp.vertex)));
      res.check(sourced && verify_certificate(ring, cert) && !vp.scalar.is_zero() && cert.claimed_result == target,
                "reduction of " + ring.to_string(x));
    } catch (const std::exception& e) {
      res.check(false, "reduction of " + ring.to_string(x) + " threw: " + e.what());
    }
  }
  return res;
}

}  // namespace leavitt::testing
