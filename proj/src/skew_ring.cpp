#include "leavitt/skew_ring.hpp"

#include <algorithm>

#include "leavitt/error.hpp"

namespace leavitt {

DiagElement SkewElement::fiber(const AdmissibleForm& p) const {
  auto it = fibers_.find(p);
  return it == fibers_.end() ? DiagElement{} : it->second;
}

SkewElement SkewRing::monomial(const AdmissibleForm& p, const DiagElement& a) const {
  if (p.is_null()) throw Error(Errc::kNullForm, "δ of a null form");
  SkewElement out;
  DiagElement coeff = diag_.normalize(a);
  if (coeff.empty()) return out;
  if (!p.is_neutral() && !diag_.supported_in(coeff, p.positive_part()))
    throw Error(Errc::kDomainViolation, "coefficient " + diag_.to_string(coeff) + " is not in D_" +
                                            leavitt::to_string(graph(), p));
  out.fibers_.emplace(p, std::move(coeff));
  return out;
}

SkewElement SkewRing::canonical(const AdmissibleForm& p) const { return monomial(p, diag_.indicator(p)); }

DiagElement SkewRing::alpha_unchecked(const AdmissibleForm& p, const DiagElement& f) const {
  if (p.is_neutral() || f.empty()) return diag_.normalize(f);
  const Graph& g = graph();
  const Path& a = p.positive_part();
  const Path& b = p.negative_part();
  DiagElement cells = diag_.refine_to_depth(f, std::max(b.length(), f.max_depth()));
  DiagElement out;
  for (const auto& [mu, c] : cells.terms()) {
    if (!is_prefix(b, mu))
      throw Error(Errc::kDomainViolation, "coefficient " + diag_.to_string(f) + " is not in D_" +
                                              leavitt::to_string(g, invert(g, p)));
    out.add(g.concat(a, strip_prefix(g, b, mu)), c);
  }
  return diag_.normalize(out);
}

DiagElement SkewRing::alpha_apply(const AdmissibleForm& p, const DiagElement& f) const {
  if (p.is_null()) throw Error(Errc::kNullForm, "α of a null form");
  return alpha_unchecked(p, diag_.normalize(f));
}

void SkewRing::accumulate(SkewElement& into, const AdmissibleForm& p, const DiagElement& a) const {
  if (a.empty()) return;
  auto [it, inserted] = into.fibers_.try_emplace(p, a);
  if (inserted) return;
  it->second = diag_.normalize(it->second + a);
  if (it->second.empty()) into.fibers_.erase(it);
}

SkewElement SkewRing::mul(const SkewElement& x, const SkewElement& y) const {
  const Graph& g = graph();
  // Under a fault-injected product the fiber rule can leave D_{p⁻¹}; such
  // terms are dropped so relation checks report the damage instead of aborting.
  const bool faithful = diag_.rule() == ProductRule::kStandard;
  SkewElement out;
  for (const auto& [p, a] : x.fibers()) {
    const AdmissibleForm p_inv = invert(g, p);
    // α_{p⁻¹}(a_p) ∈ D_{p⁻¹}
    const DiagElement pulled = alpha_unchecked(p_inv, a);
    for (const auto& [q, b] : y.fibers()) {
      DiagElement overlap = diag_.mul(pulled, b);
      if (overlap.empty()) continue;
      AdmissibleForm pq = compose(g, p, q);
      if (!faithful && (pq.is_null() || !diag_.supported_in(overlap, p.negative_part()))) continue;
      DiagElement c = alpha_unchecked(p, overlap);
      if (c.empty()) continue;
      ensure(!pq.is_null(), "nonzero coefficient on a null product key");
      accumulate(out, pq, c);
    }
  }
  return out;
}

SkewElement SkewRing::add_scale(const Scalar& lambda, const SkewElement& x, const Scalar& mu,
                                const SkewElement& y) const {
  SkewElement out;
  if (!lambda.is_zero())
    for (const auto& [p, a] : x.fibers()) accumulate(out, p, a.scaled(lambda));
  if (!mu.is_zero())
    for (const auto& [p, a] : y.fibers()) accumulate(out, p, a.scaled(mu));
  return out;
}

SkewElement SkewRing::add(const SkewElement& x, const SkewElement& y) const {
  return add_scale(diag_.scalar(1), x, diag_.scalar(1), y);
}

SkewElement SkewRing::sub(const SkewElement& x, const SkewElement& y) const {
  return add_scale(diag_.scalar(1), x, diag_.scalar(-1), y);
}

SkewElement SkewRing::scale(const Scalar& lambda, const SkewElement& x) const {
  return add_scale(lambda, x, diag_.scalar(0), SkewElement{});
}

SkewElement SkewRing::star(const SkewElement& x) const {
  SkewElement out;
  for (const auto& [p, a] : x.fibers()) {
    AdmissibleForm p_inv = invert(graph(), p);
    accumulate(out, p_inv, alpha_unchecked(p_inv, a));
  }
  return out;
}

std::map<int, SkewElement> SkewRing::grade_decompose(const SkewElement& x) const {
  std::map<int, SkewElement> out;
  for (const auto& [p, a] : x.fibers()) out[p.grade()].fibers_.emplace(p, a);
  return out;
}

std::string SkewRing::to_string(const SkewElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [p, a] : x.fibers()) {
    if (!out.empty()) out += " + ";
    out += "[" + diag_.to_string(a) + "]·δ(" + leavitt::to_string(graph(), p) + ")";
  }
  return out;
}

SkewElement SkewRing::parse(std::string_view text) const {
  auto fail = [&](std::size_t at, const std::string& what) -> Error {
    return Error(Errc::kSyntaxError, what + " at position " + std::to_string(at));
  };
  auto skip = [&](std::size_t i) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    return i;
  };
  SkewElement out;
  std::size_t i = skip(0);
  if (text.substr(i) == "0" || text.substr(i, 2) == "0 ") {
    if (skip(i + 1) == text.size()) return out;
  }
  bool first = true;
  while ((i = skip(i)) < text.size()) {
    if (!first) {
      if (text[i] != '+') throw fail(i, "expected '+'");
      i = skip(i + 1);
    }
    first = false;
    if (i >= text.size() || text[i] != '[') throw fail(i, "expected '['");
    std::size_t depth = 0, j = i;
    for (; j < text.size(); ++j) {
      if (text[j] == '[') ++depth;
      if (text[j] == ']' && --depth == 0) break;
    }
    if (j == text.size()) throw fail(i, "unbalanced '['");
    DiagElement coeff = diag_.parse(text.substr(i + 1, j - i - 1));
    i = skip(j + 1);
    constexpr std::string_view kDelta = "·δ(";
    if (text.substr(i, kDelta.size()) != kDelta) throw fail(i, "expected '·δ('");
    i += kDelta.size();
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw fail(i, "expected ')'");
    AdmissibleForm p = classify(graph(), parse_word(graph(), text.substr(i, close - i)));
    i = close + 1;
    SkewElement term = monomial(p, coeff);
    for (const auto& [key, a] : term.fibers()) accumulate(out, key, a);
  }
  return out;
}

}  // namespace leavitt
