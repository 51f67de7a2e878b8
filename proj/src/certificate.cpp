#include "leavitt/certificate.hpp"

namespace leavitt {

SkewElement replay(const SkewRing& ring, const CertificateChain& chain) {
  SkewElement cur = chain.source;
  for (const auto& step : chain.steps)
    cur = step.side == Side::kLeft ? ring.mul(step.multiplier, cur) : ring.mul(cur, step.multiplier);
  return cur;
}

bool verify_certificate(const SkewRing& ring, const Certificate& cert) {
  if (cert.chains.empty() || cert.claimed_result.is_zero()) return false;
  SkewElement total;
  for (const auto& chain : cert.chains) total = ring.add(total, replay(ring, chain));
  return total == cert.claimed_result;
}

}  // namespace leavitt
