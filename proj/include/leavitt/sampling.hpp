#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "leavitt/skew_ring.hpp"

namespace leavitt {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'1ea7'7a11ULL;

// Seeded generator of random algebra elements for property checks.
class ElementSampler {
 public:
  ElementSampler(const SkewRing& ring, std::uint64_t seed, std::size_t max_word_length = 2,
                 std::size_t max_depth = 2);

  std::mt19937_64& rng() { return rng_; }

  Scalar scalar();  // nonzero, small numerator and denominator
  const AdmissibleForm& form();
  Path index();  // path or vertex of length <= max_depth
  DiagElement diag(std::size_t max_terms = 3);
  // Nonzero element of D_p.
  DiagElement coefficient(const AdmissibleForm& p, std::size_t max_terms = 3);
  SkewElement element(std::size_t max_fibers = 3);
  SkewElement nonzero_element(std::size_t max_fibers = 3);
  // Nonzero element of the grade-z component for some z; returns z too.
  std::pair<int, SkewElement> homogeneous(std::size_t max_fibers = 3);

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  const SkewRing& ring_;
  std::mt19937_64 rng_;
  std::vector<AdmissibleForm> forms_;
  std::vector<Path> indices_;
};

}  // namespace leavitt
