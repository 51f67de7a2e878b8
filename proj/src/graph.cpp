#include "leavitt/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "leavitt/error.hpp"

namespace leavitt {

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.edges.size() <=> b.edges.size(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.edges.begin(), a.edges.end(), b.edges.begin(),
                                                      b.edges.end());
      c != 0)
    return c;
  return a.start <=> b.start;
}

namespace {

void check_id(const std::string& id, const char* kind) {
  auto ok_first = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto ok_rest = [&](char c) { return ok_first(c) || (c >= '0' && c <= '9'); };
  if (id.empty() || !ok_first(id[0]) || !std::all_of(id.begin() + 1, id.end(), ok_rest))
    throw Error(Errc::kInvalidId, std::string("invalid ") + kind + " id '" + id +
                                      "': ids are alphanumeric and start with a letter or '_'");
}

}  // namespace

Graph Graph::build(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  if (vertices.empty()) throw Error(Errc::kEmptyVertexSet, "graph has no vertices");
  for (const auto& v : vertices) check_id(v, "vertex");
  for (const auto& e : edges) check_id(e.id, "edge");

  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end())
    throw Error(Errc::kDuplicateId, "duplicate vertex id '" + *dup + "'");
  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].id == edges[i - 1].id) throw Error(Errc::kDuplicateId, "duplicate edge id '" + edges[i].id + "'");
  for (const auto& e : edges)
    if (std::binary_search(vertices.begin(), vertices.end(), e.id))
      throw Error(Errc::kDuplicateId, "id '" + e.id + "' names both a vertex and an edge");

  Graph g;
  g.vertex_names_ = std::move(vertices);
  g.out_.resize(g.vertex_names_.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto s = g.find_vertex(edges[i].src);
    auto r = g.find_vertex(edges[i].dst);
    if (!s || !r)
      throw Error(Errc::kDanglingEndpoint, "edge '" + edges[i].id + "' has undeclared endpoint '" +
                                               (s ? edges[i].dst : edges[i].src) + "'");
    g.edge_names_.push_back(edges[i].id);
    g.src_.push_back(*s);
    g.dst_.push_back(*r);
    g.out_[index(*s)].push_back(Edge{static_cast<std::uint32_t>(i)});
  }
  return g;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out(vertex_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Vertex{static_cast<std::uint32_t>(i)};
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out(edge_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Edge{static_cast<std::uint32_t>(i)};
  return out;
}

std::optional<Vertex> Graph::find_vertex(std::string_view id) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), id);
  if (it == vertex_names_.end() || *it != id) return std::nullopt;
  return Vertex{static_cast<std::uint32_t>(it - vertex_names_.begin())};
}

std::optional<Edge> Graph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edge_names_.begin(), edge_names_.end(), id);
  if (it == edge_names_.end() || *it != id) return std::nullopt;
  return Edge{static_cast<std::uint32_t>(it - edge_names_.begin())};
}

Vertex Graph::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error(Errc::kUnknownId, "unknown vertex '" + std::string(id) + "'");
}

Edge Graph::edge(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw Error(Errc::kUnknownId, "unknown edge '" + std::string(id) + "'");
}

bool Graph::composable(std::span<const Edge> edges) const {
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (range(edges[i - 1]) != source(edges[i])) return false;
  return true;
}

Path Graph::path(std::vector<Edge> edges) const {
  if (edges.empty()) throw Error(Errc::kPrecondition, "a nonempty edge sequence is required");
  if (!composable(edges)) throw Error(Errc::kPrecondition, "edges do not form a path");
  Vertex start = source(edges.front());
  return {start, std::move(edges)};
}

Path Graph::path_from_ids(const std::vector<std::string>& ids) const {
  if (ids.size() == 1)
    if (auto v = find_vertex(ids[0])) return Path::trivial(*v);
  std::vector<Edge> edges;
  for (const auto& id : ids) edges.push_back(edge(id));
  return path(std::move(edges));
}

Path Graph::concat(const Path& a, const Path& b) const {
  if (range(a) != b.start) throw Error(Errc::kPrecondition, "paths do not compose");
  if (a.is_trivial()) return b;
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

std::string Graph::to_string(const Path& p) const {
  if (p.is_trivial()) return name(p.start);
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ' ';
    out += name(p.edges[i]);
  }
  return out;
}

std::vector<EdgeSpec> Graph::edge_specs() const {
  std::vector<EdgeSpec> out;
  for (Edge e : edges()) out.push_back({name(e), name(source(e)), name(range(e))});
  return out;
}

bool is_prefix(const Path& prefix, const Path& p) {
  if (prefix.start != p.start) return false;
  if (prefix.edges.size() > p.edges.size()) return false;
  return std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
}

Path strip_prefix(const Graph& g, const Path& prefix, const Path& p) {
  if (!is_prefix(prefix, p)) throw Error(Errc::kPrecondition, "not a prefix");
  if (prefix.length() == p.length()) return Path::trivial(g.range(p));
  std::vector<Edge> rest(p.edges.begin() + static_cast<std::ptrdiff_t>(prefix.length()), p.edges.end());
  Vertex start = g.source(rest.front());
  return {start, std::move(rest)};
}

namespace {

Path least_rotation(const Graph& g, const std::vector<Edge>& cycle) {
  std::vector<Edge> best = cycle;
  std::vector<Edge> cur = cycle;
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return g.path(std::move(best));
}

}  // namespace

std::vector<Path> simple_cycles(const Graph& g) {
  std::vector<Path> cycles;
  const std::size_t n = g.vertex_count();
  for (std::size_t s = 0; s < n; ++s) {
    const Vertex root{static_cast<std::uint32_t>(s)};
    std::vector<bool> on_path(n, false);
    std::vector<Edge> stack;
    // Only vertices >= root, so each cycle is found once from its least vertex.
    auto dfs = [&](auto&& self, Vertex v) -> void {
      for (Edge e : g.out_edges(v)) {
        Vertex w = g.range(e);
        if (index(w) < s) continue;
        stack.push_back(e);
        if (w == root) {
          cycles.push_back(least_rotation(g, stack));
        } else if (!on_path[index(w)]) {
          on_path[index(w)] = true;
          self(self, w);
          on_path[index(w)] = false;
        }
        stack.pop_back();
      }
    };
    on_path[s] = true;
    dfs(dfs, root);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

ConditionLVerdict condition_L(const Graph& g) {
  for (const Path& cycle : simple_cycles(g)) {
    bool has_exit = false;
    for (Edge e : cycle.edges)
      if (g.out_edges(g.source(e)).size() > 1) has_exit = true;
    if (!has_exit) return {false, cycle};
  }
  return {true, std::nullopt};
}

namespace {

bool contains(const VertexSet& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

void check_members(const Graph& g, const VertexSet& set) {
  for (Vertex v : set)
    if (index(v) >= g.vertex_count()) throw Error(Errc::kUnknownId, "unknown vertex index " + std::to_string(index(v)));
}

}  // namespace

bool is_hereditary(const Graph& g, const VertexSet& set) {
  for (Edge e : g.edges())
    if (contains(set, g.source(e)) && !contains(set, g.range(e))) return false;
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& set) {
  for (Vertex v : g.vertices()) {
    auto out = g.out_edges(v);
    if (out.empty() || contains(set, v)) continue;
    if (std::all_of(out.begin(), out.end(), [&](Edge e) { return contains(set, g.range(e)); })) return false;
  }
  return true;
}

VertexSet hs_closure(const Graph& g, const VertexSet& seed) {
  check_members(g, seed);
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : seed) in[index(v)] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (Edge e : g.edges()) {
      if (in[index(g.source(e))] && !in[index(g.range(e))]) {
        in[index(g.range(e))] = true;
        changed = true;
      }
    }
    for (Vertex v : g.vertices()) {
      auto out = g.out_edges(v);
      if (in[index(v)] || out.empty()) continue;
      if (std::all_of(out.begin(), out.end(), [&](Edge e) { return in[index(g.range(e))]; })) {
        in[index(v)] = true;
        changed = true;
      }
    }
  }
  VertexSet out;
  for (Vertex v : g.vertices())
    if (in[index(v)]) out.push_back(v);
  return out;
}

std::size_t hs_enumeration_cap() {
  if (const char* env = std::getenv("LEAVITT_HS_CAP")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultHsCap;
}

std::vector<VertexSet> enumerate_hs_subsets(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap || n >= 63)
    throw Error(Errc::kCapExceeded,
                std::to_string(n) + " vertices exceeds the enumeration cap of " + std::to_string(cap));
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet set;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) set.push_back(Vertex{static_cast<std::uint32_t>(i)});
    if (is_hereditary(g, set) && is_saturated(g, set)) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Path> partition_basis(const Graph& g, const Path& root, std::size_t depth) {
  if (depth == 0) throw Error(Errc::kPrecondition, "partition depth must be at least 1");
  std::vector<Path> out;
  Path cur = root;
  auto walk = [&](auto&& self, std::size_t remaining) -> void {
    Vertex end = g.range(cur);
    if (remaining == 0 || g.is_sink(end)) {
      out.push_back(cur);
      return;
    }
    for (Edge e : g.out_edges(end)) {
      cur.edges.push_back(e);
      self(self, remaining - 1);
      cur.edges.pop_back();
    }
  };
  walk(walk, depth);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_acyclic(const Graph& g) {
  std::vector<int> indegree(g.vertex_count(), 0);
  for (Edge e : g.edges()) ++indegree[index(g.range(e))];
  std::vector<Vertex> ready;
  for (Vertex v : g.vertices())
    if (indegree[index(v)] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Edge e : g.out_edges(v))
      if (--indegree[index(g.range(e))] == 0) ready.push_back(g.range(e));
  }
  return seen == g.vertex_count();
}

std::vector<Path> all_paths(const Graph& g, std::size_t max_length) {
  std::vector<Path> out;
  for (Vertex v : g.vertices()) {
    Path cur = Path::trivial(v);
    auto walk = [&](auto&& self) -> void {
      out.push_back(cur);
      if (cur.length() == max_length) return;
      for (Edge e : g.out_edges(g.range(cur))) {
        cur.edges.push_back(e);
        self(self);
        cur.edges.pop_back();
      }
    };
    walk(walk);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace leavitt
