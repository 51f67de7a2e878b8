#include "leavitt/group_word.hpp"

#include <algorithm>

#include "leavitt/error.hpp"

namespace leavitt {

Word free_reduce(Word word) {
  Word out;
  out.reserve(word.size());
  for (const Letter& l : word) {
    if (!out.empty() && out.back() == l.inverted())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

AdmissibleForm classify(const Graph& g, Word word) {
  for (const Letter& l : word)
    if (index(l.edge) >= g.edge_count())
      throw Error(Errc::kUnknownId, "unknown edge index " + std::to_string(index(l.edge)));
  AdmissibleForm out;
  out.word_ = free_reduce(std::move(word));
  const Word& w = out.word_;
  if (w.empty()) return out;

  // Shape a b⁻¹: all generators precede all inverses.
  auto split = std::find_if(w.begin(), w.end(), [](const Letter& l) { return l.inverse; });
  if (std::any_of(split, w.end(), [](const Letter& l) { return !l.inverse; })) {
    out.kind_ = AdmissibleForm::Kind::kNull;
    return out;
  }
  std::vector<Edge> a, b;
  for (auto it = w.begin(); it != split; ++it) a.push_back(it->edge);
  for (auto it = w.rbegin(); it != std::make_reverse_iterator(split); ++it) b.push_back(it->edge);
  if (!g.composable(a) || !g.composable(b) || (!a.empty() && !b.empty() && g.range(a.back()) != g.range(b.back()))) {
    out.kind_ = AdmissibleForm::Kind::kNull;
    return out;
  }
  if (b.empty()) {
    out.kind_ = AdmissibleForm::Kind::kPos;
    out.pos_ = g.path(std::move(a));
    out.neg_ = Path::trivial(g.range(out.pos_));
  } else if (a.empty()) {
    out.kind_ = AdmissibleForm::Kind::kNeg;
    out.neg_ = g.path(std::move(b));
    out.pos_ = Path::trivial(g.range(out.neg_));
  } else {
    out.kind_ = AdmissibleForm::Kind::kMixed;
    out.pos_ = g.path(std::move(a));
    out.neg_ = g.path(std::move(b));
  }
  return out;
}

namespace {

Word pair_word(const Path& a, const Path& b) {
  Word w;
  for (Edge e : a.edges) w.push_back({e, false});
  for (auto it = b.edges.rbegin(); it != b.edges.rend(); ++it) w.push_back({*it, true});
  return w;
}

}  // namespace

AdmissibleForm AdmissibleForm::positive(const Graph& g, const Path& a) {
  if (a.is_trivial()) throw Error(Errc::kPrecondition, "Pos requires a nonempty path");
  return classify(g, pair_word(a, Path::trivial(g.range(a))));
}

AdmissibleForm AdmissibleForm::negative(const Graph& g, const Path& b) {
  if (b.is_trivial()) throw Error(Errc::kPrecondition, "Neg requires a nonempty path");
  return classify(g, pair_word(Path::trivial(g.range(b)), b));
}

AdmissibleForm AdmissibleForm::from_pair(const Graph& g, const Path& a, const Path& b) {
  if (g.range(a) != g.range(b)) throw Error(Errc::kPrecondition, "a b⁻¹ needs r(a) = r(b)");
  return classify(g, pair_word(a, b));
}

int AdmissibleForm::grade() const {
  int z = 0;
  for (const Letter& l : word_) z += l.inverse ? -1 : 1;
  return z;
}

std::strong_ordering operator<=>(const AdmissibleForm& a, const AdmissibleForm& b) {
  if (auto c = a.grade() <=> b.grade(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(), b.word_.begin(), b.word_.end());
}

AdmissibleForm compose(const Graph& g, const AdmissibleForm& p, const AdmissibleForm& q) {
  if (p.is_null() || q.is_null()) throw Error(Errc::kNullForm, "compose of a null form");
  Word w = p.word();
  w.insert(w.end(), q.word().begin(), q.word().end());
  return classify(g, std::move(w));
}

AdmissibleForm invert(const Graph& g, const AdmissibleForm& p) {
  if (p.is_null()) throw Error(Errc::kNullForm, "invert of a null form");
  Word w;
  for (auto it = p.word().rbegin(); it != p.word().rend(); ++it) w.push_back(it->inverted());
  return classify(g, std::move(w));
}

int grade(const AdmissibleForm& p) {
  if (p.is_null()) throw Error(Errc::kNullForm, "grade of a null form");
  return p.grade();
}

std::vector<AdmissibleForm> enumerate_forms(const Graph& g, std::size_t max_length) {
  std::vector<AdmissibleForm> out{AdmissibleForm::neutral()};
  const std::vector<Path> paths = all_paths(g, max_length);
  for (const Path& a : paths) {
    for (const Path& b : paths) {
      if (a.length() + b.length() > max_length || (a.is_trivial() && b.is_trivial())) continue;
      if (g.range(a) != g.range(b)) continue;
      if (!a.is_trivial() && !b.is_trivial() && a.edges.back() == b.edges.back()) continue;
      out.push_back(AdmissibleForm::from_pair(g, a, b));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const Graph& g, const Word& word) {
  if (word.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += g.name(word[i].edge);
    if (word[i].inverse) out += '~';
  }
  return out;
}

std::string to_string(const Graph& g, const AdmissibleForm& p) { return to_string(g, p.word()); }

Word parse_word(const Graph& g, std::string_view text) {
  Word out;
  std::size_t i = 0;
  auto is_id = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (c == '~') {
      if (out.empty() || out.back().inverse)
        throw Error(Errc::kSyntaxError, "misplaced '~' at position " + std::to_string(i));
      out.back().inverse = true;
      ++i;
    } else if (is_id(c)) {
      std::size_t j = i;
      while (j < text.size() && is_id(text[j])) ++j;
      std::string_view id = text.substr(i, j - i);
      if (id == "0" && out.empty() && text.find_first_not_of(" \t", j) == std::string_view::npos) return out;
      out.push_back({g.edge(id), false});
      i = j;
    } else {
      throw Error(Errc::kSyntaxError, std::string("unexpected '") + c + "' at position " + std::to_string(i));
    }
  }
  return out;
}

}  // namespace leavitt
