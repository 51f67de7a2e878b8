#pragma once

#include <vector>

#include "leavitt/skew_ring.hpp"

namespace leavitt {

enum class Side { kLeft, kRight };

struct CertificateStep {
  Side side = Side::kLeft;
  SkewElement multiplier;
};

// source, then each multiplier applied on its side in order.
struct CertificateChain {
  SkewElement source;
  std::vector<CertificateStep> steps;
};

// Witness that claimed_result lies in the two-sided ideal generated by the
// chain sources: claimed_result = Σ replay(chain). Most certificates have a
// single chain; assembling a vertex projection by saturation needs a sum.
struct Certificate {
  std::vector<CertificateChain> chains;
  SkewElement claimed_result;

  const SkewElement& source() const { return chains.front().source; }
  const std::vector<CertificateStep>& steps() const { return chains.front().steps; }
};

SkewElement replay(const SkewRing& ring, const CertificateChain& chain);

// Replays every chain exactly and checks the sum equals a nonzero claimed_result.
bool verify_certificate(const SkewRing& ring, const Certificate& cert);

}  // namespace leavitt
