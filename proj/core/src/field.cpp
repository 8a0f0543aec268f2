#include "oinv/field.hpp"

namespace oinv {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is known to decide primality for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldDesc FieldDesc::prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw std::invalid_argument("field modulus must be an odd prime");
  return FieldDesc(Kind::Prime, p);
}

std::string FieldDesc::to_string() const {
  if (is_rational()) return "Q";
  return "F" + std::to_string(p_);
}

FieldElement FieldElement::zero(const FieldDesc& f) {
  return FieldElement(f, mpq_class(0), 0);
}

FieldElement FieldElement::one(const FieldDesc& f) {
  return f.is_rational() ? FieldElement(f, mpq_class(1), 0)
                         : FieldElement(f, mpq_class(0), 1);
}

FieldElement FieldElement::integer(const FieldDesc& f, long v) {
  if (f.is_rational()) return FieldElement(f, mpq_class(v), 0);
  std::uint64_t p = f.characteristic();
  long m = static_cast<long>(v % static_cast<long>(p));
  if (m < 0) m += static_cast<long>(p);
  return FieldElement(f, mpq_class(0), static_cast<std::uint64_t>(m));
}

FieldElement FieldElement::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return FieldElement(FieldDesc::rationals(), std::move(c), 0);
}

FieldElement FieldElement::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return FieldElement(FieldDesc::rationals(), std::move(q), 0);
}

FieldElement FieldElement::residue(const FieldDesc& f, std::uint64_t v) {
  if (f.is_rational()) throw std::logic_error("residue requires a prime field");
  return FieldElement(f, mpq_class(0), v % f.characteristic());
}

FieldElement FieldElement::from_mpq(const FieldDesc& f, const mpq_class& q) {
  if (f.is_rational()) return rational(q);
  std::uint64_t p = f.characteristic();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class num = q.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0)
    throw std::domain_error("denominator vanishes in F" + std::to_string(p));
  FieldElement n = residue(f, num.get_ui());
  FieldElement d = residue(f, den.get_ui());
  return n * d.inverse();
}

bool FieldElement::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("coefficient field mismatch: " +
                                field_.to_string() + " vs " +
                                o.field_.to_string());
}

FieldElement FieldElement::operator-() const {
  if (field_.is_rational()) return FieldElement(field_, -rat_, 0);
  std::uint64_t p = field_.characteristic();
  return FieldElement(field_, mpq_class(0), res_ == 0 ? 0 : p - res_);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    rat_ += o.rat_;
  } else {
    std::uint64_t p = field_.characteristic();
    res_ += o.res_;  // p < 2^63, no overflow
    if (res_ >= p) res_ -= p;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  return *this += -o;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  if (field_.is_rational())
    rat_ *= o.rat_;
  else
    res_ = mulmod_u64(res_, o.res_, field_.characteristic());
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_rational())
    return FieldElement(field_, 1 / rat_, 0);
  std::uint64_t p = field_.characteristic();
  return FieldElement(field_, mpq_class(0), powmod_u64(res_, p - 2, p));
}

FieldElement FieldElement::pow(unsigned long e) const {
  if (field_.is_rational()) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), rat_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), rat_.get_den_mpz_t(), e);
    return FieldElement(field_, r, 0);
  }
  return FieldElement(field_, mpq_class(0),
                      powmod_u64(res_, e, field_.characteristic()));
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

const mpq_class& FieldElement::rational_value() const {
  if (!field_.is_rational())
    throw std::logic_error("not a rational element");
  return rat_;
}

std::uint64_t FieldElement::residue_value() const {
  if (field_.is_rational())
    throw std::logic_error("not a prime-field element");
  return res_;
}

std::string FieldElement::to_string() const {
  return field_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

}  // namespace oinv
