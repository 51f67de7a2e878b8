#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leavitt/graph.hpp"

namespace leavitt {

// A representable point of the boundary path space X: a finite path ending at
// a sink, a sink vertex, or an eventually periodic infinite path stem·cycle^∞.
// Periodic points are kept canonical (primitive cycle, shortest stem), so
// structural equality is equality of points.
class BoundaryPoint {
 public:
  enum class Kind { kSinkVertex, kFiniteToSink, kEventuallyPeriodic };

  static BoundaryPoint sink_vertex(const Graph& g, Vertex v);
  // A trivial path yields the sink vertex point.
  static BoundaryPoint finite(const Graph& g, Path path);
  static BoundaryPoint periodic(const Graph& g, Path stem, std::vector<Edge> cycle);

  Kind kind() const;
  const Path& stem() const { return stem_; }
  const std::vector<Edge>& cycle() const { return cycle_; }
  Vertex source() const { return stem_.start; }

  // The i-th edge (0-based), or nothing past the end of a finite point.
  std::optional<Edge> edge_at(std::size_t i) const;

  // Whether this point lies in X_prefix (X_v for a trivial prefix v).
  bool has_prefix(const Path& prefix) const;

  // Leading edges; for a finite point, the whole path.
  Path truncate(std::size_t n) const;

  std::size_t description_size() const { return stem_.length() + cycle_.size(); }

  std::string to_string(const Graph& g) const;

  friend auto operator<=>(const BoundaryPoint& a, const BoundaryPoint& b) {
    if (auto c = a.cycle_.size() <=> b.cycle_.size(); c != 0) return c;
    if (auto c = a.stem_ <=> b.stem_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.cycle_.begin(), a.cycle_.end(), b.cycle_.begin(),
                                                  b.cycle_.end());
  }
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  Path stem_;
  std::vector<Edge> cycle_;
};

// Every point with description size at most `max_size`, sorted and unique.
// Sizes count stem plus cycle edges; sink vertices have size 0.
std::vector<BoundaryPoint> enumerate_points(const Graph& g, std::size_t max_size);

}  // namespace leavitt
