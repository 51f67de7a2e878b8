#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "leavitt/diagonal.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/group_word.hpp"
#include "leavitt/point.hpp"

namespace leavitt::testing {

using GraphPtr = std::shared_ptr<const Graph>;

GraphPtr make_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

GraphPtr rose2();        // v; loops e, f
GraphPtr a2();           // v1 -e-> v2
GraphPtr a3();           // v1 -e1-> v2 -e2-> v3
GraphPtr t_graph();      // u, w; loop g at u; h: u -> w
GraphPtr single_loop();  // v; loop e
GraphPtr lone_vertex();  // v, no edges

struct NamedGraph {
  std::string name;
  GraphPtr graph;
};
std::vector<NamedGraph> catalog();  // R2, A2, A3, T, single-loop
std::vector<NamedGraph> condition_l_catalog();  // R2, A2, A3, T

// Vertices v0..v{n-1}, edges e0..; acyclic graphs only use edges vi -> vj, i < j.
GraphPtr random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges, bool acyclic);

// Helpers for writing expectations by id.
Path P(const Graph& g, const std::string& ids);  // "e f" or a vertex id
AdmissibleForm F(const Graph& g, const std::string& word);  // "e f~", "0" for neutral

// ---- independent oracles ----

// Closed paths of length <= |E⁰| found by walking; true iff each has an
// edge leaving one of its vertices other than the next path edge.
bool oracle_condition_L(const Graph& g);

// All subsets of E⁰ closed under the literal hereditary and saturation rules.
std::vector<VertexSet> oracle_hs_subsets(const Graph& g);

// Σ c_μ over indices μ that are prefixes of ξ, checked edge by edge.
Scalar oracle_evaluate(const DiagElement& x, const BoundaryPoint& xi, Field field);

// Σ_{sinks w} (number of paths ending at w)².
std::size_t oracle_acyclic_dimension(const Graph& g);

}  // namespace leavitt::testing
