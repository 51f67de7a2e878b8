#include "leavitt/diagonal.hpp"

#include <algorithm>

#include "leavitt/error.hpp"
#include "text_cursor.hpp"

namespace leavitt {

DiagElement DiagElement::basis(Path index, Scalar coefficient) {
  DiagElement x;
  x.add(index, coefficient);
  return x;
}

std::size_t DiagElement::max_depth() const {
  std::size_t d = 0;
  for (const auto& [mu, c] : terms_) d = std::max(d, mu.length());
  return d;
}

void DiagElement::add(const Path& index, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

DiagElement& DiagElement::operator+=(const DiagElement& rhs) {
  for (const auto& [mu, c] : rhs.terms_) add(mu, c);
  return *this;
}

DiagElement& DiagElement::operator-=(const DiagElement& rhs) {
  for (const auto& [mu, c] : rhs.terms_) add(mu, -c);
  return *this;
}

DiagElement DiagElement::scaled(const Scalar& s) const {
  DiagElement out;
  if (s.is_zero()) return out;
  for (const auto& [mu, c] : terms_) out.terms_.emplace(mu, c * s);
  return out;
}

DiagonalAlgebra::DiagonalAlgebra(std::shared_ptr<const Graph> graph, Field field, ProductRule rule)
    : graph_(std::move(graph)), field_(field), rule_(rule) {
  if (!graph_) throw Error(Errc::kPrecondition, "null graph");
}

DiagElement DiagonalAlgebra::indicator(const AdmissibleForm& c) const {
  switch (c.kind()) {
    case AdmissibleForm::Kind::kNull:
      throw Error(Errc::kNullForm, "indicator of null form " + leavitt::to_string(*graph_, c));
    case AdmissibleForm::Kind::kNeutral:
      return unit();
    default:
      return indicator(c.positive_part());
  }
}

DiagElement DiagonalAlgebra::indicator(Vertex v) const { return indicator(Path::trivial(v)); }

DiagElement DiagonalAlgebra::indicator(const Path& mu) const { return DiagElement::basis(mu, scalar(1)); }

DiagElement DiagonalAlgebra::unit() const {
  DiagElement x;
  for (Vertex v : graph_->vertices()) x.add(Path::trivial(v), scalar(1));
  return x;
}

DiagElement DiagonalAlgebra::mul(const DiagElement& x, const DiagElement& y) const {
  DiagElement out;
  for (const auto& [mu, a] : x.terms()) {
    for (const auto& [nu, b] : y.terms()) {
      const bool comparable = is_prefix(mu, nu) || is_prefix(nu, mu);
      if (rule_ == ProductRule::kInvertedPrefix) {
        if (!comparable) out.add(std::min(mu, nu), a * b);
        continue;
      }
      if (is_prefix(mu, nu))
        out.add(nu, a * b);
      else if (is_prefix(nu, mu))
        out.add(mu, a * b);
    }
  }
  return normalize(out);
}

DiagElement DiagonalAlgebra::expand_below(const DiagElement& x, std::size_t depth) const {
  const Graph& g = *graph_;
  DiagElement out;
  for (const auto& [mu, c] : x.terms()) {
    if (mu.length() >= depth) {
      out.add(mu, c);
      continue;
    }
    for (const Path& cell : partition_basis(g, mu, depth - mu.length())) out.add(cell, c);
  }
  return out;
}

DiagElement DiagonalAlgebra::refine_to_depth(const DiagElement& x, std::size_t depth) const {
  if (depth < x.max_depth())
    throw Error(Errc::kPrecondition, "refinement depth " + std::to_string(depth) + " is below the element depth " +
                                         std::to_string(x.max_depth()));
  return expand_below(x, depth);
}

DiagElement DiagonalAlgebra::normalize(const DiagElement& x) const {
  const Graph& g = *graph_;
  const std::size_t depth = x.max_depth();
  DiagElement::Terms cells;
  const Scalar one = scalar(1);
  const DiagElement expanded = expand_below(x, depth);
  for (const auto& [mu, c] : expanded.terms()) cells.emplace(mu, c * one);

  // Fold complete sibling families with a common coefficient into their
  // parent, deepest level first.
  for (std::size_t len = depth; len >= 1; --len) {
    std::map<Path, std::vector<std::pair<Edge, Scalar>>> families;
    for (const auto& [mu, c] : cells) {
      if (mu.length() != len) continue;
      Path parent{mu.start, {mu.edges.begin(), mu.edges.end() - 1}};
      families[parent].emplace_back(mu.edges.back(), c);
    }
    for (auto& [parent, children] : families) {
      const auto out = g.out_edges(g.range(parent));
      if (children.size() != out.size()) continue;
      const Scalar& c0 = children.front().second;
      if (!std::all_of(children.begin(), children.end(), [&](const auto& ch) { return ch.second == c0; })) continue;
      Scalar merged = c0;
      for (const auto& [e, c] : children) {
        Path child = parent;
        child.edges.push_back(e);
        cells.erase(child);
      }
      cells.emplace(parent, merged);
    }
  }
  DiagElement result;
  for (const auto& [mu, c] : cells) result.add(mu, c);
  return result;
}

bool DiagonalAlgebra::is_zero(const DiagElement& x) const {
  DiagElement cells = refine_to_depth(x, x.max_depth());
  return cells.empty();
}

bool DiagonalAlgebra::in_domain(const DiagElement& x, const AdmissibleForm& p) const {
  return equal(mul(indicator(p), x), x);
}

bool DiagonalAlgebra::supported_in(const DiagElement& x, const Path& mu) const {
  DiagElement cells = refine_to_depth(x, std::max(mu.length(), x.max_depth()));
  return std::all_of(cells.terms().begin(), cells.terms().end(),
                     [&](const auto& term) { return is_prefix(mu, term.first); });
}

Scalar DiagonalAlgebra::evaluate(const DiagElement& x, const BoundaryPoint& xi) const {
  Scalar sum = scalar(0);
  for (const auto& [mu, c] : x.terms())
    if (xi.has_prefix(mu)) sum += c;
  return sum;
}

BoundaryPoint DiagonalAlgebra::theta_apply(const AdmissibleForm& p, const BoundaryPoint& xi) const {
  const Graph& g = *graph_;
  if (p.is_null()) throw Error(Errc::kNullForm, "θ of a null form");
  if (p.is_neutral()) return xi;
  const Path& a = p.positive_part();
  const Path& b = p.negative_part();
  if (!xi.has_prefix(b))
    throw Error(Errc::kPointNotInDomain,
                "point " + xi.to_string(g) + " is not in the domain of θ_" + leavitt::to_string(g, p));

  // Erase b.
  Path rest;
  std::vector<Edge> cycle = xi.cycle();
  if (b.length() <= xi.stem().length()) {
    rest = strip_prefix(g, b, xi.stem());
  } else {
    std::size_t shift = (b.length() - xi.stem().length()) % cycle.size();
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(shift), cycle.end());
    rest = Path::trivial(g.source(cycle.front()));
  }
  // Add a.
  Path stem = g.concat(a, rest);
  if (cycle.empty()) return BoundaryPoint::finite(g, std::move(stem));
  return BoundaryPoint::periodic(g, std::move(stem), std::move(cycle));
}

std::string DiagonalAlgebra::to_string(const DiagElement& x) const {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mu, c] : x.terms()) {
    bool negative = field_.is_rational() && c.value() < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += (negative ? -c : c).to_string() + "*[" + graph_->to_string(mu) + "]";
    first = false;
  }
  return out;
}

DiagElement DiagonalAlgebra::parse(std::string_view text) const {
  detail::Cursor cur(text);
  DiagElement out;
  if (cur.consume("0") && cur.at_end()) return out;
  cur = detail::Cursor(text);
  bool first = true;
  while (!cur.at_end()) {
    bool negative = false;
    if (cur.consume("-"))
      negative = true;
    else if (!first)
      cur.expect("+");
    first = false;
    Scalar c = Scalar::from_string(cur.number(), field_);
    cur.expect("*");
    cur.expect("[");
    std::vector<std::string> ids;
    while (cur.peek() != ']') ids.emplace_back(cur.identifier());
    cur.expect("]");
    if (ids.empty()) cur.fail("empty index");
    out.add(graph_->path_from_ids(ids), negative ? -c : c);
  }
  return out;
}

}  // namespace leavitt
