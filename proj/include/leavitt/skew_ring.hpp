#pragma once

#include <map>
#include <string>
#include <string_view>

#include "leavitt/diagonal.hpp"
#include "leavitt/group_word.hpp"

namespace leavitt {

// Σ a_p δ_p with a_p ∈ D_p. Keys are non-null forms, coefficients are
// normalized and nonzero; SkewRing maintains both invariants.
class SkewElement {
 public:
  using Fibers = std::map<AdmissibleForm, DiagElement>;

  SkewElement() = default;

  const Fibers& fibers() const { return fibers_; }
  bool is_zero() const { return fibers_.empty(); }
  std::size_t fiber_count() const { return fibers_.size(); }
  // Coefficient at key p, or the empty element.
  DiagElement fiber(const AdmissibleForm& p) const;

  friend bool operator==(const SkewElement&, const SkewElement&) = default;

 private:
  friend class SkewRing;
  Fibers fibers_;
};

// The partial skew group ring D(X) ⋊_α 𝔽.
class SkewRing {
 public:
  explicit SkewRing(DiagonalAlgebra diag) : diag_(std::move(diag)) {}
  explicit SkewRing(std::shared_ptr<const Graph> graph, Field field = {},
                    ProductRule rule = ProductRule::kStandard)
      : diag_(std::move(graph), field, rule) {}

  const DiagonalAlgebra& diag() const { return diag_; }
  const Graph& graph() const { return diag_.graph(); }
  Field field() const { return diag_.field(); }

  // a δ_p. Throws DomainViolation unless a ∈ D_p; a zero coefficient gives 0.
  SkewElement monomial(const AdmissibleForm& p, const DiagElement& a) const;
  // 1_p δ_p.
  SkewElement canonical(const AdmissibleForm& p) const;
  SkewElement one() const { return canonical(AdmissibleForm::neutral()); }

  // α_p: D_{p⁻¹} → D_p by prefix substitution b ↦ a. Throws DomainViolation.
  DiagElement alpha_apply(const AdmissibleForm& p, const DiagElement& f) const;

  SkewElement mul(const SkewElement& x, const SkewElement& y) const;
  SkewElement add_scale(const Scalar& lambda, const SkewElement& x, const Scalar& mu,
                        const SkewElement& y) const;
  SkewElement add(const SkewElement& x, const SkewElement& y) const;
  SkewElement sub(const SkewElement& x, const SkewElement& y) const;
  SkewElement scale(const Scalar& lambda, const SkewElement& x) const;
  SkewElement star(const SkewElement& x) const;

  std::map<int, SkewElement> grade_decompose(const SkewElement& x) const;

  // Fibers by (grade, word): `[1*[v]]·δ(0) + [1*[e]]·δ(e f~)`; zero prints `0`.
  std::string to_string(const SkewElement& x) const;
  // Accepts the printed form; coefficients are normalized and checked for domain.
  SkewElement parse(std::string_view text) const;

 private:
  // α_p without the domain check; f must already lie in D_{p⁻¹}.
  DiagElement alpha_unchecked(const AdmissibleForm& p, const DiagElement& f) const;
  void accumulate(SkewElement& into, const AdmissibleForm& p, const DiagElement& a) const;

  DiagonalAlgebra diag_;
};

}  // namespace leavitt
