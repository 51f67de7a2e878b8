#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace leavitt {

// Coefficient field selector. modulus == 0 means the rationals.
struct Field {
  std::uint64_t modulus = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus == 0; }
  std::string to_string() const;
  friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime(std::uint64_t n);

// Exact field element: an arbitrary-precision rational, or a residue modulo
// a prime. A rational with modulus 0 combined with a residue is reduced into
// the prime field first, so integer literals mix freely with either kind.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& value, Field field);

  static Scalar from_string(std::string_view text, Field field);

  Field field() const { return {modulus_}; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  const mpq_class& value() const { return value_; }

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  // Compares values only; a rational literal equals its residue image.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  // `p/q` or an integer; residues print as their representative in [0, p).
  std::string to_string() const;

 private:
  void unify(Scalar& other);
  void reduce();

  mpq_class value_{0};
  std::uint64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace leavitt
