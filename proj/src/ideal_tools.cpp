#include "leavitt/ideal_tools.hpp"

#include <algorithm>

#include "leavitt/error.hpp"
#include "leavitt/expression.hpp"

namespace leavitt {

namespace {

Path power(const Graph& g, const Path& b, std::size_t m) {
  Path out = Path::trivial(g.source(b));
  for (std::size_t i = 0; i < m; ++i) out = g.concat(out, b);
  return out;
}

// 1_μ δ_0
SkewElement projection(const SkewRing& ring, const Path& mu) {
  return ring.monomial(AdmissibleForm::neutral(), ring.diag().indicator(mu));
}

SkewElement projection(const SkewRing& ring, Vertex v) { return projection(ring, Path::trivial(v)); }

// 1_c δ_c and 1_{c⁻¹} δ_{c⁻¹}
SkewElement forward(const SkewRing& ring, const Path& c) {
  return ring.canonical(AdmissibleForm::positive(ring.graph(), c));
}
SkewElement backward(const SkewRing& ring, const Path& c) {
  return ring.canonical(AdmissibleForm::negative(ring.graph(), c));
}

class ChainBuilder {
 public:
  ChainBuilder(const SkewRing& ring, CertificateChain chain, SkewElement current)
      : ring_(ring), chain_(std::move(chain)), current_(std::move(current)) {}
  ChainBuilder(const SkewRing& ring, const SkewElement& source) : ChainBuilder(ring, {source, {}}, source) {}

  // Steps that leave the element unchanged are not recorded.
  void left(SkewElement m) { apply(Side::kLeft, std::move(m)); }
  void right(SkewElement m) { apply(Side::kRight, std::move(m)); }

  const SkewElement& current() const { return current_; }
  Certificate finish() const { return {{chain_}, current_}; }

 private:
  void apply(Side side, SkewElement m) {
    SkewElement next = side == Side::kLeft ? ring_.mul(m, current_) : ring_.mul(current_, m);
    if (next == current_) return;
    current_ = std::move(next);
    chain_.steps.push_back({side, std::move(m)});
  }

  const SkewRing& ring_;
  CertificateChain chain_;
  SkewElement current_;
};

std::size_t non_neutral_count(const SkewElement& x) {
  return static_cast<std::size_t>(std::count_if(x.fibers().begin(), x.fibers().end(),
                                                [](const auto& f) { return !f.first.is_neutral(); }));
}

// Keys other than Neutral, by (length, path) of their positive part.
std::vector<Path> positive_keys(const SkewElement& x) {
  std::vector<Path> out;
  for (const auto& [p, a] : x.fibers()) {
    if (p.is_neutral()) continue;
    ensure(p.kind() == AdmissibleForm::Kind::kPos, "only positive keys expected");
    out.push_back(p.positive_part());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Non-neutral keys are closed paths at one vertex, each a beginning of the next.
bool is_closed_prefix_chain(const Graph& g, const std::vector<Path>& keys) {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (g.range(keys[i]) != g.source(keys[i]) || g.source(keys[i]) != g.source(keys.front())) return false;
    if (i > 0 && !is_prefix(keys[i - 1], keys[i])) return false;
  }
  return true;
}

void require_condition_L(const Graph& g) {
  auto verdict = condition_L(g);
  if (!verdict.holds)
    throw Error(Errc::kConditionLViolated, "condition (L) fails: cycle (" + g.to_string(*verdict.exitless_cycle) +
                                               ") has no exit");
}

// λ when x = λ·1_μ as functions, nothing otherwise.
std::optional<Scalar> multiple_of(const DiagonalAlgebra& diag, const DiagElement& x, const Path& mu) {
  DiagElement cells = diag.refine_to_depth(x, std::max(mu.length(), x.max_depth()));
  if (cells.empty()) return std::nullopt;
  Scalar lambda = cells.terms().begin()->second;
  if (!diag.equal(x, diag.indicator(mu).scaled(lambda))) return std::nullopt;
  return lambda;
}

}  // namespace

ExitWitness find_exit_witness(const SkewRing& ring, const Path& b, const DiagElement& x_b) {
  const Graph& g = ring.graph();
  const DiagonalAlgebra& diag = ring.diag();
  if (b.is_trivial() || g.range(b) != g.source(b)) throw Error(Errc::kPrecondition, "b must be a closed path");
  if (diag.is_zero(x_b)) throw Error(Errc::kZeroInput, "x_b is zero");
  if (!diag.supported_in(x_b, b)) throw Error(Errc::kDomainViolation, "x_b is not in D_b");

  auto times_power = [&](std::size_t m) { return diag.mul(x_b, diag.indicator(power(g, b, m))); };
  const std::size_t len = b.length();
  std::size_t m = std::max<std::size_t>(1, (x_b.max_depth() + len - 1) / len);
  while (m > 1 && times_power(m).empty()) --m;

  // Past the depth of x_b, x_b·1_{b^m} is a multiple of 1_{b^m}, so one
  // extra round always suffices when b has an exit.
  const std::size_t limit = m + 2;
  for (; m <= limit; ++m) {
    const Path bm = power(g, b, m);
    bool any_deviation = false;
    for (const Path& cell : partition_basis(g, bm, len)) {
      Path t = strip_prefix(g, bm, cell);
      if (t == b) continue;
      any_deviation = true;
      DiagElement prod = diag.mul(x_b, diag.indicator(cell));
      if (!prod.empty()) return {m, std::move(t), std::move(prod)};
    }
    if (!any_deviation)
      throw Error(Errc::kConditionLViolated, "closed path (" + g.to_string(b) + ") has no exit");
  }
  throw Error(Errc::kConditionLViolated, "no deviation found for (" + g.to_string(b) + ")");
}

Certificate ideal_reduce(const SkewRing& ring, const SkewElement& x) {
  const Graph& g = ring.graph();
  if (x.is_zero()) throw Error(Errc::kZeroInput, "cannot reduce the zero element");
  require_condition_L(g);
  ChainBuilder chain(ring, x);

  // Kill negative parts with 1_{b_m}δ_{b_m}, |b_m| maximal.
  std::optional<Path> longest_neg;
  for (const auto& [p, a] : x.fibers()) {
    if (p.is_neutral()) continue;
    const Path& b = p.negative_part();
    if (!b.is_trivial() && (!longest_neg || b.length() > longest_neg->length() ||
                            (b.length() == longest_neg->length() && b < *longest_neg)))
      longest_neg = b;
  }
  if (longest_neg) {
    chain.right(forward(ring, *longest_neg));
    ensure(!chain.current().is_zero(), "negative-part removal: product vanished");
  }
  for (const auto& [p, a] : chain.current().fibers())
    ensure(p.is_neutral() || p.kind() == AdmissibleForm::Kind::kPos, "negative-part removal: left a negative part");

  // Cut down to a prefix chain of closed paths with a nonzero δ_0 fiber.
  std::vector<Path> keys = positive_keys(chain.current());
  if (keys.empty()) return chain.finish();
  Path longest = keys.back();
  for (const Path& k : keys)
    if (k.length() == longest.length()) {
      longest = k;
      break;
    }
  chain.left(projection(ring, longest));
  chain.right(projection(ring, g.range(longest)));
  chain.left(projection(ring, g.source(longest)));
  ensure(!chain.current().is_zero(), "cycle cut: element vanished");
  if (chain.current().fiber(AdmissibleForm::neutral()).empty()) {
    const Path c = positive_keys(chain.current()).front();
    chain.left(backward(ring, c));
  }
  ensure(!chain.current().fiber(AdmissibleForm::neutral()).empty(), "cycle cut: pull left an empty δ_0 fiber");
  ensure(is_closed_prefix_chain(g, positive_keys(chain.current())), "cycle cut: keys are not a closed prefix chain");

  // Each round removes at least one non-neutral fiber.
  while (non_neutral_count(chain.current()) > 0) {
    const std::size_t before = non_neutral_count(chain.current());
    const Path b = positive_keys(chain.current()).back();
    const DiagElement x_b = chain.current().fiber(AdmissibleForm::positive(g, b));
    const ExitWitness w = find_exit_witness(ring, b, x_b);
    chain.left(projection(ring, power(g, b, w.power)));
    chain.right(projection(ring, g.concat(power(g, b, w.power - 1), w.deviation)));
    ensure(!chain.current().is_zero(), "exit round: element vanished");
    ensure(chain.current().fiber(AdmissibleForm::neutral()).empty(), "exit round: left a δ_0 fiber before the pull");
    const Path c = positive_keys(chain.current()).front();
    chain.left(backward(ring, c));
    ensure(!chain.current().fiber(AdmissibleForm::neutral()).empty(), "exit round: pull left an empty δ_0 fiber");
    ensure(non_neutral_count(chain.current()) < before, "exit round: did not reduce the fiber count");
    ensure(is_closed_prefix_chain(g, positive_keys(chain.current())), "exit round: keys are not a closed prefix chain");
  }
  return chain.finish();
}

VertexProjection extract_vertex_projection(const SkewRing& ring, const SkewElement& x) {
  const Graph& g = ring.graph();
  const DiagonalAlgebra& diag = ring.diag();
  Certificate reduced = ideal_reduce(ring, x);
  ChainBuilder chain(ring, reduced.chains.front(), reduced.claimed_result);
  const DiagElement x0 = reduced.claimed_result.fiber(AdmissibleForm::neutral());

  std::optional<Vertex> v;
  for (Vertex u : g.vertices())
    if (!diag.mul(diag.indicator(u), x0).empty()) {
      v = u;
      break;
    }
  ensure(v.has_value(), "reduced element has no vertex support");

  // Sink vertices, and more generally 1_v·x0 = β·1_v: one projection suffices.
  const DiagElement at_v = diag.mul(diag.indicator(*v), x0);
  if (auto beta = multiple_of(diag, at_v, Path::trivial(*v))) {
    if (!diag.equal(at_v, x0)) chain.left(projection(ring, *v));
    ensure(chain.current() == ring.scale(*beta, projection(ring, *v)), "vertex projection mismatch");
    return {*v, *beta, chain.finish()};
  }

  std::size_t depth = 1;
  for (const auto& [mu, c] : x0.terms()) depth = std::max(depth, mu.length());
  for (const Path& c : partition_basis(g, Path::trivial(*v), depth)) {
    const DiagElement collapsed = diag.mul(diag.indicator(c), x0);
    if (collapsed.empty()) continue;
    const auto lambda = multiple_of(diag, collapsed, c);
    ensure(lambda.has_value() && !lambda->is_zero(), "1_c·x0 is not a multiple of 1_c");
    chain.left(projection(ring, c));
    chain.left(backward(ring, c));
    chain.right(forward(ring, c));
    const Vertex w = g.range(c);
    ensure(chain.current() == ring.scale(*lambda, projection(ring, w)), "conjugation did not land on 1_{r(c)}δ_0");
    return {w, *lambda, chain.finish()};
  }
  throw Error(Errc::kInternal, "partition scan found no support");
}

Certificate propagate_projection(const SkewRing& ring, Vertex v, const PropagationDirection& direction) {
  const Graph& g = ring.graph();
  if (const auto* h = std::get_if<Hereditary>(&direction)) {
    if (g.source(h->edge) != v)
      throw Error(Errc::kPrecondition, "edge '" + g.name(h->edge) + "' does not start at '" + g.name(v) + "'");
    const Path e = g.path({h->edge});
    ChainBuilder chain(ring, projection(ring, v));
    chain.right(forward(ring, e));
    chain.left(backward(ring, e));
    ensure(chain.current() == projection(ring, g.range(h->edge)), "hereditary step mismatch");
    return chain.finish();
  }
  if (g.is_sink(v)) throw Error(Errc::kPrecondition, "saturation needs a vertex that emits edges");
  Certificate cert;
  for (Edge edge : g.out_edges(v)) {
    const Path e = g.path({edge});
    ChainBuilder chain(ring, projection(ring, g.range(edge)));
    chain.left(forward(ring, e));
    chain.right(backward(ring, e));
    cert.chains.push_back(chain.finish().chains.front());
    cert.claimed_result = ring.add(cert.claimed_result, chain.current());
  }
  ensure(cert.claimed_result == projection(ring, v), "saturation sum mismatch");
  return cert;
}

SimplicityReport simplicity_report(const Graph& g, std::size_t cap) {
  SimplicityReport report;
  report.condition_L = condition_L(g);
  report.hs_subsets = enumerate_hs_subsets(g, cap);
  const VertexSet everything = g.vertices();
  report.criteria_met = report.condition_L.holds && report.hs_subsets.size() == 2 &&
                        report.hs_subsets[0].empty() && report.hs_subsets[1] == everything;
  return report;
}

namespace {

// Replaces each chain of `step` (sourced at a certified projection) by the
// chains of that projection's certificate extended with the step's multipliers.
Certificate compose_through(const Certificate& step, const std::map<Vertex, Certificate>& certified,
                            const SkewRing& ring) {
  Certificate out;
  out.claimed_result = step.claimed_result;
  for (const auto& chain : step.chains) {
    const Certificate* base = nullptr;
    for (const auto& [u, cert] : certified)
      if (cert.claimed_result == chain.source) base = &cert;
    ensure(base != nullptr, "step source is not a certified projection");
    for (const auto& inner : base->chains) {
      CertificateChain extended = inner;
      extended.steps.insert(extended.steps.end(), chain.steps.begin(), chain.steps.end());
      out.chains.push_back(std::move(extended));
    }
  }
  ensure(verify_certificate(ring, out), "composed certificate does not verify");
  return out;
}

}  // namespace

SimplicityDemonstration demonstrate_simplicity(const SkewRing& ring, const SkewElement& x,
                                               std::size_t spanning_depth) {
  const Graph& g = ring.graph();
  if (x.is_zero()) throw Error(Errc::kZeroInput, "x is zero");
  if (!simplicity_report(g).criteria_met)
    throw Error(Errc::kCriteriaNotMet, "graph fails condition (L) or has nontrivial hereditary saturated subsets");

  SimplicityDemonstration demo;
  VertexProjection first = extract_vertex_projection(ring, x);
  Certificate cert = first.certificate;
  if (!first.scalar.is_one()) {
    SkewElement rescale = ring.scale(first.scalar.inverse(), projection(ring, first.vertex));
    cert.chains.front().steps.push_back({Side::kLeft, rescale});
    cert.claimed_result = ring.mul(rescale, cert.claimed_result);
  }
  demo.vertex_certificates.emplace(first.vertex, std::move(cert));

  auto& certified = demo.vertex_certificates;
  for (bool changed = true; changed;) {
    changed = false;
    for (Edge e : g.edges()) {
      if (!certified.count(g.source(e)) || certified.count(g.range(e))) continue;
      Certificate step = propagate_projection(ring, g.source(e), Hereditary{e});
      certified.emplace(g.range(e), compose_through(step, certified, ring));
      changed = true;
    }
    for (Vertex v : g.vertices()) {
      auto out = g.out_edges(v);
      if (certified.count(v) || out.empty()) continue;
      if (!std::all_of(out.begin(), out.end(), [&](Edge e) { return certified.count(g.range(e)) > 0; })) continue;
      Certificate step = propagate_projection(ring, v, Saturation{});
      certified.emplace(v, compose_through(step, certified, ring));
      changed = true;
    }
  }
  ensure(certified.size() == g.vertex_count(), "propagation did not reach every vertex");

  const DiagonalAlgebra& diag = ring.diag();
  const std::vector<AdmissibleForm> forms = enumerate_forms(g, spanning_depth);
  for (const AdmissibleForm& p : forms) {
    if (p.is_neutral()) continue;
    const Vertex v = g.source(p.positive_part());
    for (const AdmissibleForm& q : forms) {
      SkewElement element = ring.monomial(q, diag.mul(diag.indicator(p), diag.indicator(q)));
      if (element.is_zero()) continue;
      bool verified = ring.mul(certified.at(v).claimed_result, element) == element;
      demo.spanning.push_back({p, q, v, std::move(element), verified});
    }
  }
  return demo;
}

std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Scalar inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col] * inv;
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t acyclic_dimension(const SkewRing& ring) {
  const Graph& g = ring.graph();
  if (!is_acyclic(g)) throw Error(Errc::kGraphHasCycle, "graph has a cycle");
  const std::size_t max_len = g.vertex_count();
  const std::vector<Path> paths = all_paths(g, max_len);

  std::vector<SkewElement> images;
  for (const Path& a : paths)
    for (const Path& b : paths)
      if (g.range(a) == g.range(b)) images.push_back(phi_embed(ring, path_monomial(g, a, b)));

  // Coordinates: (fiber key, cell of the full-depth partition).
  std::map<std::pair<AdmissibleForm, Path>, std::size_t> coords;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse;
  for (const SkewElement& img : images) {
    auto& row = sparse.emplace_back();
    for (const auto& [p, a] : img.fibers()) {
      const DiagElement cells = ring.diag().refine_to_depth(a, max_len);
      for (const auto& [mu, c] : cells.terms()) {
        auto [it, inserted] = coords.try_emplace({p, mu}, coords.size());
        row.emplace_back(it->second, c);
      }
    }
  }
  std::vector<std::vector<Scalar>> dense(sparse.size(), std::vector<Scalar>(coords.size(), ring.diag().scalar(0)));
  for (std::size_t r = 0; r < sparse.size(); ++r)
    for (const auto& [col, c] : sparse[r]) dense[r][col] = c;
  return matrix_rank(std::move(dense));
}

}  // namespace leavitt
