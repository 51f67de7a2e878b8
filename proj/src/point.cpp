#include "leavitt/point.hpp"

#include <algorithm>

#include "leavitt/error.hpp"

namespace leavitt {

BoundaryPoint BoundaryPoint::sink_vertex(const Graph& g, Vertex v) {
  if (!g.is_sink(v)) throw Error(Errc::kPrecondition, "vertex '" + g.name(v) + "' is not a sink");
  BoundaryPoint p;
  p.stem_ = Path::trivial(v);
  return p;
}

BoundaryPoint BoundaryPoint::finite(const Graph& g, Path path) {
  if (!g.composable(path.edges)) throw Error(Errc::kPrecondition, "edges do not form a path");
  if (!g.is_sink(g.range(path))) throw Error(Errc::kPrecondition, "finite point must end at a sink");
  BoundaryPoint p;
  p.stem_ = std::move(path);
  return p;
}

BoundaryPoint BoundaryPoint::periodic(const Graph& g, Path stem, std::vector<Edge> cycle) {
  if (cycle.empty()) throw Error(Errc::kPrecondition, "periodic point needs a nonempty cycle");
  if (!g.composable(stem.edges) || !g.composable(cycle) || g.range(cycle.back()) != g.source(cycle.front()) ||
      g.range(stem) != g.source(cycle.front()))
    throw Error(Errc::kPrecondition, "stem and cycle do not compose into an infinite path");

  // Reduce the cycle to its primitive root.
  const std::size_t n = cycle.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = cycle[i] == cycle[i - d];
    if (periodic) {
      cycle.resize(d);
      break;
    }
  }
  // Absorb stem suffixes that repeat the cycle.
  while (!stem.is_trivial() && stem.edges.back() == cycle.back()) {
    stem.edges.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }
  if (stem.is_trivial()) stem.start = g.source(cycle.front());

  BoundaryPoint p;
  p.stem_ = std::move(stem);
  p.cycle_ = std::move(cycle);
  return p;
}

BoundaryPoint::Kind BoundaryPoint::kind() const {
  if (!cycle_.empty()) return Kind::kEventuallyPeriodic;
  return stem_.is_trivial() ? Kind::kSinkVertex : Kind::kFiniteToSink;
}

std::optional<Edge> BoundaryPoint::edge_at(std::size_t i) const {
  if (i < stem_.length()) return stem_.edges[i];
  if (cycle_.empty()) return std::nullopt;
  return cycle_[(i - stem_.length()) % cycle_.size()];
}

bool BoundaryPoint::has_prefix(const Path& prefix) const {
  if (prefix.start != source()) return false;
  for (std::size_t i = 0; i < prefix.length(); ++i)
    if (edge_at(i) != prefix.edges[i]) return false;
  return true;
}

Path BoundaryPoint::truncate(std::size_t n) const {
  Path out = Path::trivial(source());
  for (std::size_t i = 0; i < n; ++i) {
    auto e = edge_at(i);
    if (!e) break;
    out.edges.push_back(*e);
  }
  return out;
}

std::string BoundaryPoint::to_string(const Graph& g) const {
  switch (kind()) {
    case Kind::kSinkVertex:
    case Kind::kFiniteToSink:
      return g.to_string(stem_);
    case Kind::kEventuallyPeriodic: {
      std::string out = stem_.is_trivial() ? "" : g.to_string(stem_) + " ";
      return out + "(" + g.to_string(Path{stem_.start, cycle_}) + ")^inf";
    }
  }
  return {};
}

std::vector<BoundaryPoint> enumerate_points(const Graph& g, std::size_t max_size) {
  std::vector<BoundaryPoint> out;
  // Walk all paths of length <= max_size; a path ending at a sink is a finite
  // point, and every way of splitting a path into stem + closed tail is a
  // periodic point.
  std::vector<Edge> edges;
  auto visit = [&](Vertex start) {
    Path p{start, edges};
    if (g.is_sink(g.range(p))) out.push_back(BoundaryPoint::finite(g, p));
    for (std::size_t split = 0; split < edges.size(); ++split) {
      if (g.source(edges[split]) != g.range(edges.back())) continue;
      Path stem{start, {edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(split)}};
      std::vector<Edge> cycle(edges.begin() + static_cast<std::ptrdiff_t>(split), edges.end());
      out.push_back(BoundaryPoint::periodic(g, std::move(stem), std::move(cycle)));
    }
  };
  for (Vertex v : g.vertices()) {
    auto walk = [&](auto&& self, Vertex at) -> void {
      visit(v);
      if (edges.size() == max_size) return;
      for (Edge e : g.out_edges(at)) {
        edges.push_back(e);
        self(self, g.range(e));
        edges.pop_back();
      }
    };
    walk(walk, v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace leavitt
