#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace colalg {

/// Exact field element: an arbitrary-precision rational (characteristic 0)
/// or a residue modulo a prime p.
///
/// A rational with invertible denominator combined with a residue is coerced
/// into GF(p); combining residues of different primes is a logic error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT: integers are scalars
  Scalar(int v) : q_(v) {}   // NOLINT
  explicit Scalar(mpq_class q);

  static Scalar residue(std::int64_t value, std::uint32_t prime);

  std::uint32_t characteristic() const { return p_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return q_; }
  std::int64_t residue_value() const { return r_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Throws std::domain_error on zero.
  Scalar inverse() const;
  /// Integer power; negative exponents invert.
  Scalar pow(std::int64_t e) const;

  /// Canonical text: "n" or "n/d" for rationals, "r" in [0, p) for residues.
  std::string to_string() const;

  /// Reduce into GF(p); throws std::domain_error if p divides the denominator.
  Scalar reduce_mod(std::uint32_t prime) const;

 private:
  mpq_class q_;           // p_ == 0
  std::int64_t r_ = 0;    // p_ != 0, in [0, p_)
  std::uint32_t p_ = 0;
};

/// Coefficient field of an algebra: the rationals, or GF(p) for an odd prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InputError unless p is prime; p == 2 requires allow_char2.
  static Field prime(std::uint32_t p, bool allow_char2 = false);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(std::int64_t v) const;
  /// Coerce a scalar into this field.
  Scalar coerce(const Scalar& s) const;
  /// Parse "n" or "n/d". Rejects zero or negative denominators, non-reduced
  /// fractions and anything that is not an exact integer ratio.
  Scalar parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace colalg
