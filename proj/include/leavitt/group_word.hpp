#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/graph.hpp"

namespace leavitt {

// A generator of the free group on E¹ or its inverse.
struct Letter {
  Edge edge{};
  bool inverse = false;

  Letter inverted() const { return {edge, !inverse}; }
  // Edge order first; a generator sorts before its inverse.
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Cancels adjacent x x⁻¹ and x⁻¹ x pairs.
Word free_reduce(Word word);

// A reduced free-group word classified by the shape of its set X_c.
//
// Non-neutral, non-null forms are stored uniformly as a pair of paths
// (positive part a, negative part b) with r(a) = r(b), either of which may be
// trivial: Pos(a) = (a, r(a)), Neg(b) = (r(b), b), Mixed(a, b) = a b⁻¹.
class AdmissibleForm {
 public:
  enum class Kind { kNeutral, kPos, kNeg, kMixed, kNull };

  AdmissibleForm() = default;  // neutral element

  static AdmissibleForm neutral() { return {}; }
  static AdmissibleForm positive(const Graph& g, const Path& a);
  static AdmissibleForm negative(const Graph& g, const Path& b);
  // a b⁻¹ for arbitrary (possibly trivial) paths with r(a) = r(b); the
  // word is reduced first, so the result may be of any kind.
  static AdmissibleForm from_pair(const Graph& g, const Path& a, const Path& b);

  Kind kind() const { return kind_; }
  bool is_neutral() const { return kind_ == Kind::kNeutral; }
  bool is_null() const { return kind_ == Kind::kNull; }

  // Valid for Pos/Neg/Mixed.
  const Path& positive_part() const { return pos_; }
  const Path& negative_part() const { return neg_; }

  const Word& word() const { return word_; }
  int grade() const;  // generators minus inverses

  // Canonical order: grade, then reduced word lexicographically.
  friend std::strong_ordering operator<=>(const AdmissibleForm& a, const AdmissibleForm& b);
  friend bool operator==(const AdmissibleForm& a, const AdmissibleForm& b) { return a.word_ == b.word_; }

 private:
  friend AdmissibleForm classify(const Graph& g, Word word);

  Kind kind_ = Kind::kNeutral;
  Path pos_;
  Path neg_;
  Word word_;
};

// Free reduction followed by shape classification. Throws UnknownId for
// letters outside the graph.
AdmissibleForm classify(const Graph& g, Word word);

AdmissibleForm compose(const Graph& g, const AdmissibleForm& p, const AdmissibleForm& q);
AdmissibleForm invert(const Graph& g, const AdmissibleForm& p);
int grade(const AdmissibleForm& p);

// Every non-null form whose reduced word has length <= max_length, in canonical order.
std::vector<AdmissibleForm> enumerate_forms(const Graph& g, std::size_t max_length);

// Edge ids separated by spaces, inverses marked with a postfix '~';
// the neutral word prints as "0".
std::string to_string(const Graph& g, const Word& word);
std::string to_string(const Graph& g, const AdmissibleForm& p);
Word parse_word(const Graph& g, std::string_view text);

}  // namespace leavitt
