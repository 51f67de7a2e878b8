#include "leavitt/sampling.hpp"

namespace leavitt {

ElementSampler::ElementSampler(const SkewRing& ring, std::uint64_t seed, std::size_t max_word_length,
                               std::size_t max_depth)
    : ring_(ring),
      rng_(seed),
      forms_(enumerate_forms(ring.graph(), max_word_length)),
      indices_(all_paths(ring.graph(), max_depth)) {}

Scalar ElementSampler::scalar() {
  static constexpr long kNumerators[] = {1, 2, 3, -1, -2, 5};
  static constexpr long kDenominators[] = {1, 1, 1, 2, 3};
  long num = kNumerators[pick(std::size(kNumerators))];
  long den = kDenominators[pick(std::size(kDenominators))];
  mpq_class q(num, den);
  q.canonicalize();
  Scalar s(q, ring_.field());
  return s.is_zero() ? Scalar(mpq_class(1), ring_.field()) : s;
}

const AdmissibleForm& ElementSampler::form() { return forms_[pick(forms_.size())]; }

Path ElementSampler::index() { return indices_[pick(indices_.size())]; }

DiagElement ElementSampler::diag(std::size_t max_terms) {
  DiagElement x;
  std::size_t n = 1 + pick(max_terms);
  for (std::size_t i = 0; i < n; ++i) x.add(index(), scalar());
  return ring_.diag().normalize(x);
}

DiagElement ElementSampler::coefficient(const AdmissibleForm& p, std::size_t max_terms) {
  const DiagonalAlgebra& d = ring_.diag();
  for (;;) {
    DiagElement a = d.mul(d.indicator(p), diag(max_terms));
    if (!a.empty()) return a;
  }
}

SkewElement ElementSampler::element(std::size_t max_fibers) {
  SkewElement x;
  std::size_t n = pick(max_fibers + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const AdmissibleForm& p = form();
    x = ring_.add(x, ring_.monomial(p, coefficient(p)));
  }
  return x;
}

SkewElement ElementSampler::nonzero_element(std::size_t max_fibers) {
  for (;;) {
    SkewElement x = element(max_fibers);
    if (!x.is_zero()) return x;
  }
}

std::pair<int, SkewElement> ElementSampler::homogeneous(std::size_t max_fibers) {
  auto parts = ring_.grade_decompose(nonzero_element(max_fibers));
  auto it = parts.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(pick(parts.size())));
  return *it;
}

}  // namespace leavitt
