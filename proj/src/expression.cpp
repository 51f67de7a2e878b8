#include "leavitt/expression.hpp"

#include "leavitt/error.hpp"
#include "text_cursor.hpp"

namespace leavitt {

LeavittExpr LeavittExpr::generator(Generator g) {
  LeavittExpr e;
  e.kind = Kind::kGen;
  e.gen = g;
  return e;
}

LeavittExpr LeavittExpr::sum(std::vector<LeavittExpr> terms) {
  if (terms.size() == 1) return std::move(terms.front());
  LeavittExpr e;
  e.kind = Kind::kSum;
  e.children = std::move(terms);
  return e;
}

LeavittExpr LeavittExpr::product(std::vector<LeavittExpr> factors) {
  if (factors.size() == 1) return std::move(factors.front());
  LeavittExpr e;
  e.kind = Kind::kProduct;
  e.children = std::move(factors);
  return e;
}

LeavittExpr LeavittExpr::scaled(Scalar s, LeavittExpr inner) {
  LeavittExpr e;
  e.kind = Kind::kScalarMul;
  e.scalar = std::move(s);
  e.children.push_back(std::move(inner));
  return e;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const Graph& g, Field field) : cur_(text), g_(g), field_(field) {}

  LeavittExpr parse() {
    LeavittExpr e = expr();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    return e;
  }

 private:
  LeavittExpr expr() {
    std::vector<LeavittExpr> terms;
    bool negate = cur_.consume("-");
    terms.push_back(signed_term(negate));
    for (;;) {
      if (cur_.consume("+"))
        terms.push_back(signed_term(false));
      else if (cur_.consume("-"))
        terms.push_back(signed_term(true));
      else
        break;
    }
    return LeavittExpr::sum(std::move(terms));
  }

  LeavittExpr signed_term(bool negate) {
    LeavittExpr t = term();
    if (!negate) return t;
    if (t.kind == LeavittExpr::Kind::kScalarMul) {
      t.scalar = -t.scalar;
      return t;
    }
    return LeavittExpr::scaled(Scalar(mpq_class(-1), field_), std::move(t));
  }

  LeavittExpr term() {
    std::optional<Scalar> scalar;
    if (detail::Cursor::is_digit(cur_.peek())) scalar = Scalar::from_string(cur_.number(), field_);
    std::vector<LeavittExpr> factors;
    while (starts_factor(cur_.peek())) factors.push_back(factor());
    if (factors.empty()) cur_.fail("expected a generator or '('");
    LeavittExpr product = LeavittExpr::product(std::move(factors));
    return scalar ? LeavittExpr::scaled(*scalar, std::move(product)) : product;
  }

  static bool starts_factor(char c) {
    return c == '(' || c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  }

  LeavittExpr factor() {
    if (cur_.consume("(")) {
      LeavittExpr inner = expr();
      cur_.expect(")");
      return cur_.consume("*") ? adjoint(inner) : inner;
    }
    std::string_view id = cur_.identifier();
    bool starred = cur_.consume("*");
    if (auto v = g_.find_vertex(id)) return LeavittExpr::generator(Generator::vertex(*v));
    if (auto e = g_.find_edge(id))
      return LeavittExpr::generator(starred ? Generator::star(*e) : Generator::edge(*e));
    throw Error(Errc::kUnknownId, "unknown id '" + std::string(id) + "'");
  }

  detail::Cursor cur_;
  const Graph& g_;
  Field field_;
};

}  // namespace

LeavittExpr parse_expression(std::string_view text, const Graph& g, Field field) {
  return ExprParser(text, g, field).parse();
}

std::string to_string(const Graph& g, const LeavittExpr& expr) {
  switch (expr.kind) {
    case LeavittExpr::Kind::kGen:
      switch (expr.gen.kind) {
        case Generator::Kind::kVertex: return g.name(Vertex{expr.gen.id});
        case Generator::Kind::kEdge: return g.name(Edge{expr.gen.id});
        case Generator::Kind::kStarredEdge: return g.name(Edge{expr.gen.id}) + "*";
      }
      break;
    case LeavittExpr::Kind::kScalarMul: {
      const LeavittExpr& inner = expr.children.front();
      std::string body = to_string(g, inner);
      if (inner.kind == LeavittExpr::Kind::kSum || inner.kind == LeavittExpr::Kind::kScalarMul)
        body = "(" + body + ")";
      return expr.scalar.to_string() + " " + body;
    }
    case LeavittExpr::Kind::kProduct: {
      std::string out;
      for (const auto& f : expr.children) {
        if (!out.empty()) out += ' ';
        bool wrap = f.kind == LeavittExpr::Kind::kSum || f.kind == LeavittExpr::Kind::kScalarMul;
        out += wrap ? "(" + to_string(g, f) + ")" : to_string(g, f);
      }
      return out;
    }
    case LeavittExpr::Kind::kSum: {
      std::string out;
      for (const auto& t : expr.children) {
        std::string term = to_string(g, t);
        if (out.empty())
          out = term;
        else if (term[0] == '-')
          out += " - " + term.substr(1);
        else
          out += " + " + term;
      }
      return out;
    }
  }
  return {};
}

LeavittExpr adjoint(const LeavittExpr& expr) {
  switch (expr.kind) {
    case LeavittExpr::Kind::kGen: {
      Generator gen = expr.gen;
      if (gen.kind == Generator::Kind::kEdge)
        gen.kind = Generator::Kind::kStarredEdge;
      else if (gen.kind == Generator::Kind::kStarredEdge)
        gen.kind = Generator::Kind::kEdge;
      return LeavittExpr::generator(gen);
    }
    case LeavittExpr::Kind::kScalarMul:
      return LeavittExpr::scaled(expr.scalar, adjoint(expr.children.front()));
    case LeavittExpr::Kind::kProduct: {
      std::vector<LeavittExpr> factors;
      for (auto it = expr.children.rbegin(); it != expr.children.rend(); ++it) factors.push_back(adjoint(*it));
      return LeavittExpr::product(std::move(factors));
    }
    case LeavittExpr::Kind::kSum: {
      std::vector<LeavittExpr> terms;
      for (const auto& t : expr.children) terms.push_back(adjoint(t));
      return LeavittExpr::sum(std::move(terms));
    }
  }
  return expr;
}

LeavittExpr path_monomial(const Graph& g, const Path& a, const Path& b) {
  if (g.range(a) != g.range(b)) throw Error(Errc::kPrecondition, "a b* needs r(a) = r(b)");
  std::vector<LeavittExpr> factors;
  for (Edge e : a.edges) factors.push_back(LeavittExpr::generator(Generator::edge(e)));
  for (auto it = b.edges.rbegin(); it != b.edges.rend(); ++it)
    factors.push_back(LeavittExpr::generator(Generator::star(*it)));
  if (factors.empty()) factors.push_back(LeavittExpr::generator(Generator::vertex(a.start)));
  return LeavittExpr::product(std::move(factors));
}

SkewElement phi_embed(const SkewRing& ring, const LeavittExpr& expr) {
  const Graph& g = ring.graph();
  switch (expr.kind) {
    case LeavittExpr::Kind::kGen: {
      switch (expr.gen.kind) {
        case Generator::Kind::kVertex:
          return ring.monomial(AdmissibleForm::neutral(), ring.diag().indicator(Vertex{expr.gen.id}));
        case Generator::Kind::kEdge:
          return ring.canonical(AdmissibleForm::positive(g, g.path({Edge{expr.gen.id}})));
        case Generator::Kind::kStarredEdge:
          return ring.canonical(AdmissibleForm::negative(g, g.path({Edge{expr.gen.id}})));
      }
      break;
    }
    case LeavittExpr::Kind::kScalarMul:
      return ring.scale(expr.scalar, phi_embed(ring, expr.children.front()));
    case LeavittExpr::Kind::kProduct: {
      SkewElement acc = phi_embed(ring, expr.children.front());
      for (std::size_t i = 1; i < expr.children.size(); ++i) acc = ring.mul(acc, phi_embed(ring, expr.children[i]));
      return acc;
    }
    case LeavittExpr::Kind::kSum: {
      SkewElement acc;
      for (const auto& t : expr.children) acc = ring.add(acc, phi_embed(ring, t));
      return acc;
    }
  }
  return {};
}

std::string_view relation_name(CkViolation::Relation r) {
  switch (r) {
    case CkViolation::Relation::kOrthogonalIdempotents: return "orthogonal-idempotents";
    case CkViolation::Relation::kSourceRange: return "(1) s(e)e = e r(e) = e";
    case CkViolation::Relation::kStarRangeSource: return "(2) r(e)e* = e* s(e) = e*";
    case CkViolation::Relation::kStarProduct: return "(3) e*f = δ_{e,f} r(e)";
    case CkViolation::Relation::kVertexSum: return "(4) v = Σ e e*";
  }
  return "?";
}

std::vector<CkViolation> check_ck_relations(const SkewRing& ring) {
  using R = CkViolation::Relation;
  const Graph& g = ring.graph();
  std::vector<CkViolation> out;
  auto gen = [&](Generator x) { return phi_embed(ring, LeavittExpr::generator(x)); };
  auto expect = [&](R rel, const SkewElement& lhs, const SkewElement& rhs, const std::string& what) {
    if (lhs != rhs) out.push_back({rel, what + ": got " + ring.to_string(lhs) + ", expected " + ring.to_string(rhs)});
  };

  for (Vertex v : g.vertices()) {
    for (Vertex w : g.vertices()) {
      SkewElement prod = ring.mul(gen(Generator::vertex(v)), gen(Generator::vertex(w)));
      expect(R::kOrthogonalIdempotents, prod, v == w ? gen(Generator::vertex(v)) : SkewElement{},
             g.name(v) + " " + g.name(w));
    }
  }
  for (Edge e : g.edges()) {
    SkewElement pe = gen(Generator::edge(e));
    SkewElement ps = gen(Generator::star(e));
    SkewElement src = gen(Generator::vertex(g.source(e)));
    SkewElement rng = gen(Generator::vertex(g.range(e)));
    const std::string& n = g.name(e);
    expect(R::kSourceRange, ring.mul(src, pe), pe, "s(" + n + ") " + n);
    expect(R::kSourceRange, ring.mul(pe, rng), pe, n + " r(" + n + ")");
    expect(R::kStarRangeSource, ring.mul(rng, ps), ps, "r(" + n + ") " + n + "*");
    expect(R::kStarRangeSource, ring.mul(ps, src), ps, n + "* s(" + n + ")");
    for (Edge f : g.edges()) {
      SkewElement prod = ring.mul(ps, gen(Generator::edge(f)));
      expect(R::kStarProduct, prod, e == f ? rng : SkewElement{}, n + "* " + g.name(f));
    }
  }
  for (Vertex v : g.vertices()) {
    if (g.is_sink(v)) continue;
    SkewElement sum;
    for (Edge e : g.out_edges(v)) sum = ring.add(sum, ring.mul(gen(Generator::edge(e)), gen(Generator::star(e))));
    expect(R::kVertexSum, sum, gen(Generator::vertex(v)), "vertex " + g.name(v));
  }
  return out;
}

}  // namespace leavitt
