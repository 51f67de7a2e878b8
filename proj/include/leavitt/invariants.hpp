#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leavitt/skew_ring.hpp"

namespace leavitt {

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, if any
};

struct InvariantOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 50;
  std::size_t word_length = 2;
};

// Self-check battery run by the `check` subcommand: relations, partial-action
// identities, ring axioms, grading, θ/α agreement, zero test, and (when the
// graph allows) the reduction pipeline and the acyclic dimension formula.
std::vector<InvariantResult> run_invariant_suite(const SkewRing& ring, const InvariantOptions& options);

}  // namespace leavitt
