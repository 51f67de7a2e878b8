#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/scalar.hpp"
#include "leavitt/skew_ring.hpp"

namespace leavitt {

struct Generator {
  enum class Kind { kVertex, kEdge, kStarredEdge };
  Kind kind = Kind::kVertex;
  std::uint32_t id = 0;  // vertex or edge index

  static Generator vertex(Vertex v) { return {Kind::kVertex, index(v)}; }
  static Generator edge(Edge e) { return {Kind::kEdge, index(e)}; }
  static Generator star(Edge e) { return {Kind::kStarredEdge, index(e)}; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

// Expression over the generators v, e, e* of the Leavitt path algebra.
struct LeavittExpr {
  enum class Kind { kSum, kScalarMul, kProduct, kGen };

  Kind kind = Kind::kGen;
  std::vector<LeavittExpr> children;  // Sum/Product operands; ScalarMul has one
  Scalar scalar;                      // ScalarMul only
  Generator gen;                      // Gen only

  static LeavittExpr generator(Generator g);
  static LeavittExpr sum(std::vector<LeavittExpr> terms);
  static LeavittExpr product(std::vector<LeavittExpr> factors);
  static LeavittExpr scaled(Scalar s, LeavittExpr inner);

  friend bool operator==(const LeavittExpr&, const LeavittExpr&) = default;
};

// Grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := [scalar] factor+          juxtaposition is the product
//   factor := ident ['*'] | '(' expr ')' ['*']
//   scalar := digits ['/' digits]
// A postfix '*' is the adjoint; on a vertex it is the vertex itself.
LeavittExpr parse_expression(std::string_view text, const Graph& g, Field field = {});

std::string to_string(const Graph& g, const LeavittExpr& expr);

// Adjoint extended anti-multiplicatively: reverses products, swaps e and e*.
LeavittExpr adjoint(const LeavittExpr& expr);

// a b* as an expression; trivial paths contribute their vertex.
LeavittExpr path_monomial(const Graph& g, const Path& a, const Path& b);

// φ(v) = 1_v δ_0, φ(e) = 1_e δ_e, φ(e*) = 1_{e⁻¹} δ_{e⁻¹}, extended homomorphically.
SkewElement phi_embed(const SkewRing& ring, const LeavittExpr& expr);

struct CkViolation {
  enum class Relation { kOrthogonalIdempotents, kSourceRange, kStarRangeSource, kStarProduct, kVertexSum };
  Relation relation;
  std::string detail;
};

std::string_view relation_name(CkViolation::Relation r);

// Evaluates the Cuntz–Krieger relations on φ-images of all generators.
// The vertex-sum relation is checked only at vertices that emit edges.
std::vector<CkViolation> check_ck_relations(const SkewRing& ring);

}  // namespace leavitt
