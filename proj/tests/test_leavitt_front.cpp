#include <gtest/gtest.h>

#include <random>

#include "catalog.hpp"
#include "leavitt/error.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/sampling.hpp"

namespace leavitt {
namespace {

using namespace testing;
using Gen = Generator;

TEST(Parse, Examples) {
  auto g = rose2();
  LeavittExpr ef = parse_expression("e f*", *g);
  EXPECT_EQ(ef, LeavittExpr::product({LeavittExpr::generator(Gen::edge(g->edge("e"))),
                                      LeavittExpr::generator(Gen::star(g->edge("f")))}));
  LeavittExpr sum = parse_expression("1/2 e + v", *g);
  EXPECT_EQ(sum, LeavittExpr::sum({LeavittExpr::scaled(Scalar::from_string("1/2", {}),
                                                       LeavittExpr::generator(Gen::edge(g->edge("e")))),
                                   LeavittExpr::generator(Gen::vertex(g->vertex("v")))}));
  try {
    parse_expression("e g*", *g);
    FAIL() << "expected UnknownId";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownId);
    EXPECT_NE(std::string(e.what()).find('g'), std::string::npos);
  }
}

TEST(Parse, SyntaxErrors) {
  auto g = rose2();
  for (const char* bad : {"", "e +", "(e", "e )", "1/0 e", "2", "e ** f"}) {
    EXPECT_THROW(parse_expression(bad, *g), Error) << bad;
  }
}

TEST(Parse, PrintRoundTrip) {
  auto g = rose2();
  for (const char* text : {"e f*", "1/2 e + v", "e (f + e)* - 3 v", "-e* e"}) {
    LeavittExpr x = parse_expression(text, *g);
    EXPECT_EQ(parse_expression(to_string(*g, x), *g), x) << text;
  }
}

struct R2Front : ::testing::Test {
  GraphPtr g = rose2();
  SkewRing ring{g};
  SkewElement phi(const std::string& text) { return phi_embed(ring, parse_expression(text, *g)); }
};

TEST_F(R2Front, Embedding) {
  EXPECT_EQ(ring.to_string(phi("v")), "[1*[v]]·δ(0)");
  EXPECT_EQ(ring.to_string(phi("e f*")), "[1*[e]]·δ(e f~)");
  EXPECT_TRUE(phi("e* f").is_zero());
  EXPECT_EQ(ring.to_string(phi("e* e")), "[1*[v]]·δ(0)");
  EXPECT_EQ(phi("e e* + f f*"), phi("v"));
  EXPECT_EQ(ring.to_string(phi("e*")), "[1*[v]]·δ(e~)");
}

TEST(Front, CkRelationsHoldOnCatalogAndRandomGraphs) {
  for (const auto& [name, g] : catalog()) EXPECT_TRUE(check_ck_relations(SkewRing(g)).empty()) << name;
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(check_ck_relations(SkewRing(random_graph(rng, 6, 10, false))).empty());
}

TEST(Front, MutantProductViolatesRelationThree) {
  SkewRing mutant(rose2(), {}, ProductRule::kInvertedPrefix);
  auto violations = check_ck_relations(mutant);
  bool saw_three = std::any_of(violations.begin(), violations.end(), [](const CkViolation& v) {
    return v.relation == CkViolation::Relation::kStarProduct;
  });
  EXPECT_TRUE(saw_three);
}

LeavittExpr random_expr(std::mt19937_64& rng, const Graph& g, int depth) {
  std::uniform_int_distribution<int> pick(0, 5);
  int k = depth == 0 ? pick(rng) % 3 : pick(rng);
  auto gen = [&]() {
    std::uniform_int_distribution<std::size_t> any(0, g.vertex_count() + 2 * g.edge_count() - 1);
    std::size_t i = any(rng);
    if (i < g.vertex_count()) return LeavittExpr::generator(Gen::vertex(Vertex{static_cast<std::uint32_t>(i)}));
    i -= g.vertex_count();
    Edge e{static_cast<std::uint32_t>(i / 2)};
    return LeavittExpr::generator(i % 2 ? Gen::star(e) : Gen::edge(e));
  };
  switch (k) {
    case 3:
      return LeavittExpr::sum({random_expr(rng, g, depth - 1), random_expr(rng, g, depth - 1)});
    case 4:
      return LeavittExpr::product({random_expr(rng, g, depth - 1), random_expr(rng, g, depth - 1)});
    case 5:
      return LeavittExpr::scaled(Scalar(std::uniform_int_distribution<long>(-3, 3)(rng)), random_expr(rng, g, depth - 1));
    default:
      return gen();
  }
}

TEST(Front, HomomorphismAndAdjoint) {
  std::mt19937_64 rng(41);
  for (const auto& [name, g] : catalog()) {
    SkewRing ring(g);
    for (int i = 0; i < 200; ++i) {
      LeavittExpr x = random_expr(rng, *g, 3), y = random_expr(rng, *g, 3);
      SkewElement px = phi_embed(ring, x), py = phi_embed(ring, y);
      EXPECT_EQ(phi_embed(ring, LeavittExpr::product({x, y})), ring.mul(px, py)) << name;
      EXPECT_EQ(phi_embed(ring, LeavittExpr::sum({x, y})), ring.add(px, py)) << name;
      EXPECT_EQ(phi_embed(ring, adjoint(x)), ring.star(px)) << name;
    }
  }
}

TEST(Front, MonomialImagesAndNonvanishing) {
  for (const auto& [name, g] : catalog()) {
    SkewRing ring(g);
    for (Vertex v : g->vertices()) EXPECT_FALSE(phi_embed(ring, LeavittExpr::generator(Gen::vertex(v))).is_zero());
    auto paths = all_paths(*g, 3);
    for (const auto& a : paths) {
      for (const auto& b : paths) {
        if (g->range(a) != g->range(b)) continue;
        // a b* is a reduced monomial only when the last edges differ.
        if (!a.is_trivial() && !b.is_trivial() && a.edges.back() == b.edges.back()) continue;
        AdmissibleForm p = AdmissibleForm::from_pair(*g, a, b);
        SkewElement want = a.is_trivial() && b.is_trivial()
                               ? ring.monomial(p, ring.diag().indicator(a.start))
                               : ring.canonical(p);
        EXPECT_EQ(phi_embed(ring, path_monomial(*g, a, b)), want) << name << " " << to_string(*g, p);
      }
    }
  }
}

// 1_p 1_q δ_q = φ(a a*) φ(c d*) for p = ab⁻¹, q = cd⁻¹, using 1_pδ_0 = 1_pδ_p 1_{p⁻¹}δ_{p⁻¹}.
TEST(Front, SurjectivityOnSmallWords) {
  for (const auto& [name, g] : catalog()) {
    SkewRing ring(g);
    const DiagonalAlgebra& d = ring.diag();
    for (const auto& p : enumerate_forms(*g, 3)) {
      for (const auto& q : enumerate_forms(*g, 3)) {
        DiagElement coeff = d.mul(d.indicator(p), d.indicator(q));
        SkewElement target = ring.monomial(q, coeff);
        auto image = [&](const AdmissibleForm& f, bool projection) {
          if (f.is_neutral()) return ring.one();
          const Path& a = f.positive_part();
          return phi_embed(ring, path_monomial(*g, a, projection ? a : f.negative_part()));
        };
        EXPECT_EQ(ring.mul(image(p, true), image(q, false)), target) << name << " " << to_string(*g, p) << " " << to_string(*g, q);
      }
    }
  }
}

}  // namespace
}  // namespace leavitt
