#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leavitt {

// Indices into a Graph's sorted vertex and edge tables. Index order equals
// lexicographic id order, so comparing indices compares ids.
enum class Vertex : std::uint32_t {};
enum class Edge : std::uint32_t {};

constexpr std::uint32_t index(Vertex v) { return static_cast<std::uint32_t>(v); }
constexpr std::uint32_t index(Edge e) { return static_cast<std::uint32_t>(e); }

// A finite path. A trivial path is a bare vertex; otherwise `start` is s(edges[0]).
struct Path {
  Vertex start{};
  std::vector<Edge> edges;

  static Path trivial(Vertex v) { return {v, {}}; }

  bool is_trivial() const { return edges.empty(); }
  std::size_t length() const { return edges.size(); }

  // Canonical order: length, then edge ids lexicographically, then start.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) = default;
};

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
};

class Graph {
 public:
  // Validates ids and endpoints. Vertex and edge ids must be distinct from
  // each other as well, since printed indices do not tag their kind.
  static Graph build(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edge_names_.size(); }

  std::vector<Vertex> vertices() const;
  std::vector<Edge> edges() const;

  const std::string& name(Vertex v) const { return vertex_names_[index(v)]; }
  const std::string& name(Edge e) const { return edge_names_[index(e)]; }

  std::optional<Vertex> find_vertex(std::string_view id) const;
  std::optional<Edge> find_edge(std::string_view id) const;
  Vertex vertex(std::string_view id) const;  // throws UnknownId
  Edge edge(std::string_view id) const;      // throws UnknownId

  Vertex source(Edge e) const { return src_[index(e)]; }
  Vertex range(Edge e) const { return dst_[index(e)]; }
  Vertex source(const Path& p) const { return p.start; }
  Vertex range(const Path& p) const { return p.is_trivial() ? p.start : range(p.edges.back()); }

  std::span<const Edge> out_edges(Vertex v) const { return out_[index(v)]; }
  bool is_sink(Vertex v) const { return out_[index(v)].empty(); }

  // Builds a path from an edge sequence, throwing if consecutive edges do not compose.
  Path path(std::vector<Edge> edges) const;
  Path path_from_ids(const std::vector<std::string>& ids) const;
  bool composable(std::span<const Edge> edges) const;

  // a·b; requires r(a) = s(b). Trivial paths act as identities.
  Path concat(const Path& a, const Path& b) const;

  // Space-separated edge ids, or the vertex id for a trivial path.
  std::string to_string(const Path& p) const;

  std::vector<EdgeSpec> edge_specs() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<Vertex> src_;
  std::vector<Vertex> dst_;
  std::vector<std::vector<Edge>> out_;
};

// True when `prefix` is the beginning of `p`; a trivial prefix v matches every
// path with s(p) = v.
bool is_prefix(const Path& prefix, const Path& p);

// Remainder of `p` after removing `prefix`; trivial at r(prefix) when equal.
Path strip_prefix(const Graph& g, const Path& prefix, const Path& p);

using VertexSet = std::vector<Vertex>;  // sorted, unique

struct ConditionLVerdict {
  bool holds = true;
  std::optional<Path> exitless_cycle;
};

// Simple cycles in canonical order, each rotated to its least rotation.
std::vector<Path> simple_cycles(const Graph& g);

ConditionLVerdict condition_L(const Graph& g);

bool is_hereditary(const Graph& g, const VertexSet& set);
bool is_saturated(const Graph& g, const VertexSet& set);

VertexSet hs_closure(const Graph& g, const VertexSet& seed);

inline constexpr std::size_t kDefaultHsCap = 16;

// Reads LEAVITT_HS_CAP from the environment, falling back to kDefaultHsCap.
std::size_t hs_enumeration_cap();

// All hereditary and saturated subsets, ordered by size then lexicographically.
std::vector<VertexSet> enumerate_hs_subsets(const Graph& g, std::size_t cap = hs_enumeration_cap());

// Extensions of `root` by exactly `depth` edges, plus shorter ones that end at
// a sink (the root itself when r(root) is a sink). The sets X_c they index
// partition X_root.
std::vector<Path> partition_basis(const Graph& g, const Path& root, std::size_t depth);

bool is_acyclic(const Graph& g);

// Every path of length <= max_length, trivial paths included, in canonical order.
std::vector<Path> all_paths(const Graph& g, std::size_t max_length);

}  // namespace leavitt
