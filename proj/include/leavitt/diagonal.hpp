#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "leavitt/graph.hpp"
#include "leavitt/group_word.hpp"
#include "leavitt/point.hpp"
#include "leavitt/scalar.hpp"

namespace leavitt {

// Finite linear combination of characteristic functions 1_μ, μ a path or a
// vertex (trivial path). Zero coefficients are never stored. Elements
// produced by DiagonalAlgebra are in normal form; hand-built ones may have
// overlapping supports until normalized.
class DiagElement {
 public:
  using Terms = std::map<Path, Scalar>;

  DiagElement() = default;
  static DiagElement basis(Path index, Scalar coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t max_depth() const;

  // Accumulates; a coefficient that cancels to zero is erased.
  void add(const Path& index, const Scalar& coefficient);

  DiagElement& operator+=(const DiagElement& rhs);
  DiagElement& operator-=(const DiagElement& rhs);
  friend DiagElement operator+(DiagElement a, const DiagElement& b) { return a += b; }
  friend DiagElement operator-(DiagElement a, const DiagElement& b) { return a -= b; }
  DiagElement scaled(const Scalar& s) const;

  // Structural; agrees with functional equality on normal forms only.
  friend bool operator==(const DiagElement&, const DiagElement&) = default;

 private:
  Terms terms_;
};

// Fault-injection switch for the relation-checker's mutation harness.
enum class ProductRule { kStandard, kInvertedPrefix };

// The commutative algebra D(X) spanned by the 1_μ over a fixed graph and field.
class DiagonalAlgebra {
 public:
  explicit DiagonalAlgebra(std::shared_ptr<const Graph> graph, Field field = {},
                           ProductRule rule = ProductRule::kStandard);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  Field field() const { return field_; }
  ProductRule rule() const { return rule_; }
  Scalar scalar(long v) const { return Scalar(mpq_class(v), field_); }

  // 1_c for a non-null form: unit for Neutral, 1_a for Pos(a) and Mixed(a, b),
  // 1_{r(b)} for Neg(b).
  DiagElement indicator(const AdmissibleForm& c) const;
  DiagElement indicator(Vertex v) const;
  DiagElement indicator(const Path& mu) const;
  DiagElement unit() const;

  DiagElement mul(const DiagElement& x, const DiagElement& y) const;

  // Rewrites x on the depth-L partition basis. Requires L >= x.max_depth().
  DiagElement refine_to_depth(const DiagElement& x, std::size_t depth) const;

  // Canonical form: common-depth refinement, zero pruning, then merging of
  // sibling families that carry equal coefficients.
  DiagElement normalize(const DiagElement& x) const;

  bool is_zero(const DiagElement& x) const;
  bool equal(const DiagElement& x, const DiagElement& y) const { return is_zero(x - y); }

  // x ∈ D_p, i.e. 1_p · x = x.
  bool in_domain(const DiagElement& x, const AdmissibleForm& p) const;

  // Support of x lies inside X_mu; independent of the product rule.
  bool supported_in(const DiagElement& x, const Path& mu) const;

  Scalar evaluate(const DiagElement& x, const BoundaryPoint& xi) const;

  // θ_p: X_{p⁻¹} → X_p. Throws PointNotInDomain.
  BoundaryPoint theta_apply(const AdmissibleForm& p, const BoundaryPoint& xi) const;

  // Terms by (index length, index), e.g. `1/2*[e] + 1*[e f] - 1*[v2]`; zero is `0`.
  std::string to_string(const DiagElement& x) const;
  DiagElement parse(std::string_view text) const;

 private:
  // Expands every index shorter than `depth` down to the depth-`depth` cells.
  DiagElement expand_below(const DiagElement& x, std::size_t depth) const;

  std::shared_ptr<const Graph> graph_;
  Field field_;
  ProductRule rule_;
};

}  // namespace leavitt
