#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "catalog.hpp"
#include "leavitt/error.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/point.hpp"

namespace leavitt {
namespace {

using namespace testing;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInternal;
}

TEST(BuildGraph, CatalogGraphsAreValid) {
  auto r2 = rose2();
  EXPECT_EQ(r2->vertex_count(), 1u);
  EXPECT_EQ(r2->edge_count(), 2u);
  auto g = a2();
  EXPECT_EQ(g->source(g->edge("e")), g->vertex("v1"));
  EXPECT_EQ(g->range(g->edge("e")), g->vertex("v2"));
  EXPECT_TRUE(g->is_sink(g->vertex("v2")));
}

TEST(BuildGraph, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { Graph::build({"v"}, {{"e", "x", "v"}}); }), Errc::kDanglingEndpoint);
  EXPECT_EQ(code_of([] { Graph::build({"v", "v"}, {}); }), Errc::kDuplicateId);
  EXPECT_EQ(code_of([] { Graph::build({"v"}, {{"e", "v", "v"}, {"e", "v", "v"}}); }), Errc::kDuplicateId);
  EXPECT_EQ(code_of([] { Graph::build({"v"}, {{"v", "v", "v"}}); }), Errc::kDuplicateId);
  EXPECT_EQ(code_of([] { Graph::build({}, {}); }), Errc::kEmptyVertexSet);
  EXPECT_EQ(code_of([] { Graph::build({"1v"}, {}); }), Errc::kInvalidId);
  EXPECT_EQ(code_of([] { rose2()->vertex("nope"); }), Errc::kUnknownId);
}

TEST(BuildGraph, IdsAreSortedCanonically) {
  auto g = make_graph({"b", "a"}, {{"y", "b", "a"}, {"x", "a", "b"}});
  EXPECT_EQ(g->name(Vertex{0}), "a");
  EXPECT_EQ(g->name(Edge{0}), "x");
}

TEST(Paths, OrderIsLengthThenLexicographic) {
  auto g = rose2();
  EXPECT_LT(P(*g, "v"), P(*g, "f"));
  EXPECT_LT(P(*g, "f"), P(*g, "e e"));
  EXPECT_LT(P(*g, "e f"), P(*g, "f e"));
  EXPECT_EQ(g->to_string(P(*g, "e f")), "e f");
  EXPECT_EQ(code_of([] { auto t = a2(); t->path({t->edge("e"), t->edge("e")}); }), Errc::kPrecondition);
}

TEST(ConditionL, CatalogVerdicts) {
  EXPECT_TRUE(condition_L(*rose2()).holds);
  auto loop = single_loop();
  auto verdict = condition_L(*loop);
  ASSERT_FALSE(verdict.holds);
  ASSERT_TRUE(verdict.exitless_cycle.has_value());
  EXPECT_EQ(loop->to_string(*verdict.exitless_cycle), "e");
  EXPECT_TRUE(condition_L(*a2()).holds);
  EXPECT_TRUE(condition_L(*t_graph()).holds);
}

TEST(ConditionL, MatchesClosedPathOracleAndWitnessHasNoExit) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    auto g = random_graph(rng, 5, 8, false);
    auto verdict = condition_L(*g);
    EXPECT_EQ(verdict.holds, oracle_condition_L(*g));
    if (!verdict.holds) {
      const Path& c = *verdict.exitless_cycle;
      EXPECT_EQ(g->range(c), c.start);
      for (Edge e : c.edges) EXPECT_EQ(g->out_edges(g->source(e)).size(), 1u);
    }
  }
}

TEST(SimpleCycles, TwoLoopsAndATwoCycle) {
  auto g = make_graph({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"z", "a", "a"}});
  auto cycles = simple_cycles(*g);
  ASSERT_EQ(cycles.size(), 2u);
  EXPECT_EQ(g->to_string(cycles[0]), "z");
  EXPECT_EQ(g->to_string(cycles[1]), "x y");
}

TEST(HsClosure, Examples) {
  auto t = t_graph();
  EXPECT_EQ(hs_closure(*t, {t->vertex("w")}), VertexSet{t->vertex("w")});
  EXPECT_TRUE(hs_closure(*t, {}).empty());
  auto g = a2();
  EXPECT_EQ(hs_closure(*g, {g->vertex("v2")}), (VertexSet{g->vertex("v1"), g->vertex("v2")}));
  EXPECT_EQ(code_of([&] { hs_closure(*g, {Vertex{9}}); }), Errc::kUnknownId);
}

TEST(HsClosure, IdempotentMonotoneAndClosed) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    auto g = random_graph(rng, 6, 9, false);
    const std::size_t n = g->vertex_count();
    for (std::uint64_t mask = 0; mask < (1u << n); mask += 3) {
      VertexSet s;
      for (Vertex v : g->vertices())
        if ((mask >> index(v)) & 1) s.push_back(v);
      VertexSet c = hs_closure(*g, s);
      EXPECT_EQ(hs_closure(*g, c), c);
      EXPECT_TRUE(std::includes(c.begin(), c.end(), s.begin(), s.end()));
      EXPECT_TRUE(is_hereditary(*g, c));
      EXPECT_TRUE(is_saturated(*g, c));
      if (!s.empty()) {
        VertexSet smaller(s.begin() + 1, s.end());
        VertexSet cs = hs_closure(*g, smaller);
        EXPECT_TRUE(std::includes(c.begin(), c.end(), cs.begin(), cs.end()));
      }
    }
  }
}

TEST(HsSubsets, Examples) {
  auto g = a2();
  EXPECT_EQ(enumerate_hs_subsets(*g), (std::vector<VertexSet>{{}, {g->vertex("v1"), g->vertex("v2")}}));
  auto t = t_graph();
  EXPECT_EQ(enumerate_hs_subsets(*t),
            (std::vector<VertexSet>{{}, {t->vertex("w")}, {t->vertex("u"), t->vertex("w")}}));
  auto r = rose2();
  EXPECT_EQ(enumerate_hs_subsets(*r), (std::vector<VertexSet>{{}, {r->vertex("v")}}));
}

TEST(HsSubsets, MatchBruteForceAndFixedPoints) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    auto g = random_graph(rng, 6, 10, false);
    auto subsets = enumerate_hs_subsets(*g);
    EXPECT_EQ(subsets, oracle_hs_subsets(*g));
    for (const auto& s : subsets) EXPECT_EQ(hs_closure(*g, s), s);
  }
}

TEST(HsSubsets, CapIsEnforced) {
  std::vector<std::string> ids;
  for (int i = 0; i < 5; ++i) ids.push_back("v" + std::to_string(i));
  auto g = make_graph(ids, {});
  EXPECT_EQ(code_of([&] { enumerate_hs_subsets(*g, 4); }), Errc::kCapExceeded);
  EXPECT_EQ(enumerate_hs_subsets(*g, 5).size(), 32u);
}

TEST(HsSubsets, CapFromEnvironment) {
  ::setenv("LEAVITT_HS_CAP", "3", 1);
  EXPECT_EQ(hs_enumeration_cap(), 3u);
  ::setenv("LEAVITT_HS_CAP", "junk", 1);
  EXPECT_EQ(hs_enumeration_cap(), kDefaultHsCap);
  ::unsetenv("LEAVITT_HS_CAP");
  EXPECT_EQ(hs_enumeration_cap(), kDefaultHsCap);
}

TEST(PartitionBasis, Examples) {
  auto r = rose2();
  std::vector<Path> expect{P(*r, "e e"), P(*r, "e f"), P(*r, "f e"), P(*r, "f f")};
  EXPECT_EQ(partition_basis(*r, P(*r, "v"), 2), expect);
  auto g = a2();
  EXPECT_EQ(partition_basis(*g, P(*g, "v1"), 2), std::vector<Path>{P(*g, "e")});
  auto t = t_graph();
  EXPECT_EQ(partition_basis(*t, P(*t, "u"), 1), (std::vector<Path>{P(*t, "g"), P(*t, "h")}));
  EXPECT_EQ(code_of([&] { partition_basis(*t, P(*t, "u"), 0); }), Errc::kPrecondition);
}

TEST(PartitionBasis, EveryPointExtendsExactlyOneCell) {
  for (const auto& [name, g] : catalog()) {
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto points = enumerate_points(*g, 2 * d);
      for (Vertex v : g->vertices()) {
        auto cells = partition_basis(*g, Path::trivial(v), d);
        for (std::size_t i = 0; i < cells.size(); ++i)
          for (std::size_t j = 0; j < cells.size(); ++j)
            if (i != j) EXPECT_FALSE(is_prefix(cells[i], cells[j]));
        for (const auto& xi : points) {
          if (xi.source() != v) continue;
          std::size_t hits = 0;
          for (const auto& c : cells) hits += xi.has_prefix(c) ? 1 : 0;
          EXPECT_EQ(hits, 1u) << name << " " << xi.to_string(*g);
        }
      }
    }
  }
}

TEST(Points, CanonicalForms) {
  auto r = rose2();
  Vertex v = r->vertex("v");
  Edge e = r->edge("e"), f = r->edge("f");
  auto p1 = BoundaryPoint::periodic(*r, P(*r, "e f"), {f, f});
  EXPECT_EQ(p1, BoundaryPoint::periodic(*r, P(*r, "e"), {f}));
  EXPECT_EQ(p1.to_string(*r), "e (f)^inf");
  // e (f e)^∞ = (e f)^∞
  EXPECT_EQ(BoundaryPoint::periodic(*r, P(*r, "e"), {f, e}), BoundaryPoint::periodic(*r, Path::trivial(v), {e, f}));
  auto g = a2();
  EXPECT_THROW(BoundaryPoint::finite(*g, P(*g, "v1")), Error);
  EXPECT_EQ(BoundaryPoint::finite(*g, P(*g, "e")).to_string(*g), "e");
}

TEST(Points, EnumerationCounts) {
  auto g = a2();
  EXPECT_EQ(enumerate_points(*g, 3).size(), 2u);  // v2 and e
  auto loop = single_loop();
  EXPECT_EQ(enumerate_points(*loop, 6).size(), 1u);  // e^∞
  auto r = rose2();
  for (const auto& xi : enumerate_points(*r, 4)) EXPECT_LE(xi.description_size(), 4u);
}

}  // namespace
}  // namespace leavitt
