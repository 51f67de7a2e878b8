#pragma once

#include <map>
#include <variant>
#include <vector>

#include "leavitt/certificate.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/skew_ring.hpp"

namespace leavitt {

struct ExitWitness {
  std::size_t power = 1;  // m
  Path deviation;         // t = t_1…t_k, starting at r(b), differing from b somewhere
  DiagElement product;    // x_b · 1_{b^m t}, nonzero
};

// For a closed path b and nonzero x_b ∈ D_b, finds m >= 1 and t with
// x_b · 1_{b^m t} != 0. Throws ConditionLViolated when b has no exit.
ExitWitness find_exit_witness(const SkewRing& ring, const Path& b, const DiagElement& x_b);

// Multiplies x on both sides until a nonzero element of D(X)δ_0 remains.
// Requires condition (L) and x != 0.
Certificate ideal_reduce(const SkewRing& ring, const SkewElement& x);

struct VertexProjection {
  Vertex vertex{};
  Scalar scalar;  // claimed_result = scalar · 1_vδ_0
  Certificate certificate;
};

VertexProjection extract_vertex_projection(const SkewRing& ring, const SkewElement& x);

struct Hereditary {
  Edge edge{};
};
struct Saturation {};
using PropagationDirection = std::variant<Hereditary, Saturation>;

// Hereditary(e): 1_{s(e)}δ_0 ↦ 1_{r(e)}δ_0, requiring s(e) = v.
// Saturation: 1_vδ_0 assembled from the projections at the ranges of v's edges.
Certificate propagate_projection(const SkewRing& ring, Vertex v, const PropagationDirection& direction);

struct SimplicityReport {
  ConditionLVerdict condition_L;
  std::vector<VertexSet> hs_subsets;
  bool criteria_met = false;
};

SimplicityReport simplicity_report(const Graph& g, std::size_t cap = hs_enumeration_cap());

// 1_p 1_q δ_q = 1_vδ_0 · 1_p 1_q δ_q with 1_v 1_p = 1_p.
struct SpanningRecord {
  AdmissibleForm p;
  AdmissibleForm q;
  Vertex vertex{};
  SkewElement element;
  bool verified = false;
};

struct SimplicityDemonstration {
  std::map<Vertex, Certificate> vertex_certificates;  // every chain sourced at x
  std::vector<SpanningRecord> spanning;
};

SimplicityDemonstration demonstrate_simplicity(const SkewRing& ring, const SkewElement& x,
                                               std::size_t spanning_depth = 2);

// Rank of the φ-images of all monomials a b* on an acyclic graph.
std::size_t acyclic_dimension(const SkewRing& ring);

// Rank over the field by Gaussian elimination.
std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows);

}  // namespace leavitt
