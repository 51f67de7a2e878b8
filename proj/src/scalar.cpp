#include "leavitt/scalar.hpp"

#include <charconv>
#include <ostream>

#include "leavitt/error.hpp"

namespace leavitt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::kInvalidInput, "field modulus " + std::to_string(p) + " is not prime");
  return {p};
}

std::string Field::to_string() const {
  return is_rational() ? "rationals" : "prime:" + std::to_string(modulus);
}

namespace {

mpz_class to_mpz(std::uint64_t n) { return mpz_class(std::to_string(n)); }

}  // namespace

Scalar::Scalar(const mpq_class& value, Field field) : value_(value), modulus_(field.modulus) {
  value_.canonicalize();
  reduce();
}

Scalar Scalar::from_string(std::string_view text, Field field) {
  auto valid = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw Error(Errc::kSyntaxError, "malformed scalar '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d{std::string(den)};
  if (d == 0) throw Error(Errc::kDivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return Scalar(mpq_class(mpz_class(n), d), field);
}

void Scalar::reduce() {
  if (modulus_ == 0) return;
  mpz_class p = to_mpz(modulus_);
  mpz_class num = value_.get_num() % p;
  mpz_class den = value_.get_den() % p;
  if (den == 0) throw Error(Errc::kDivisionByZero, "denominator vanishes modulo " + std::to_string(modulus_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  if (r < 0) r += p;
  value_ = mpq_class(r);
}

void Scalar::unify(Scalar& other) {
  if (modulus_ == other.modulus_) return;
  if (modulus_ == 0) {
    modulus_ = other.modulus_;
    reduce();
  } else if (other.modulus_ == 0) {
    other.modulus_ = modulus_;
    other.reduce();
  } else {
    throw Error(Errc::kFieldMismatch, "scalars from different prime fields");
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::kDivisionByZero, "inverse of zero");
  Scalar out = *this;
  out.value_ = 1 / value_;
  out.reduce();
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.value_ = -value_;
  out.reduce();
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  Scalar r = rhs;
  unify(r);
  value_ += r.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  Scalar r = rhs;
  unify(r);
  value_ -= r.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  Scalar r = rhs;
  unify(r);
  value_ *= r.value_;
  reduce();
  return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.modulus_ == rhs.modulus_) return lhs.value_ == rhs.value_;
  Scalar a = lhs;
  Scalar b = rhs;
  a.unify(b);
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace leavitt
