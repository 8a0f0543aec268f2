#pragma once

// Exact coefficient arithmetic: the rationals, or a prime field F_p with p an
// odd prime.  Every scalar carries its field; mixing fields in one operation
// is a usage error and throws.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oinv {

// Deterministic Miller-Rabin primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

class FieldDesc {
 public:
  enum class Kind { Rational, Prime };

  static FieldDesc rationals() { return FieldDesc(Kind::Rational, 0); }
  // Throws std::invalid_argument unless p is an odd prime (p >= 3).
  static FieldDesc prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  // 0 for the rationals, p for F_p.
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;

 private:
  FieldDesc(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

class FieldElement {
 public:
  // Default-constructs rational zero (so containers work); prefer the named
  // constructors below.
  FieldElement() : field_(FieldDesc::rationals()), rat_(0), res_(0) {}

  static FieldElement zero(const FieldDesc& f);
  static FieldElement one(const FieldDesc& f);
  static FieldElement integer(const FieldDesc& f, long v);
  static FieldElement rational(const mpq_class& q);
  static FieldElement rational(long num, long den);
  // Residue class of v in F_p.
  static FieldElement residue(const FieldDesc& f, std::uint64_t v);
  // Image of an arbitrary rational in f; throws if the denominator is
  // divisible by the characteristic.
  static FieldElement from_mpq(const FieldDesc& f, const mpq_class& q);

  const FieldDesc& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }

  // Throws std::domain_error on zero.
  FieldElement inverse() const;
  FieldElement pow(unsigned long e) const;

  // Elements of distinct fields are never equal.
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Value accessors; throw std::logic_error when the kind does not match.
  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const;

  // "5", "-2/3" over the rationals; the least nonnegative residue over F_p.
  std::string to_string() const;

 private:
  FieldElement(FieldDesc f, mpq_class q, std::uint64_t r)
      : field_(f), rat_(std::move(q)), res_(r) {}
  void check_same_field(const FieldElement& o) const;

  FieldDesc field_;
  mpq_class rat_;      // used when rational
  std::uint64_t res_;  // used when prime
};

}  // namespace oinv
