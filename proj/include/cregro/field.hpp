#ifndef CREGRO_FIELD_HPP
#define CREGRO_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cregro {

/// The field of rational numbers with arbitrary-precision numerators and
/// denominators. Elements are always canonical (lowest terms, positive
/// denominator), which mpq_class guarantees after every arithmetic operation.
class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }

  Element from_int(long v) const { return Element(v); }

  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw std::domain_error("division by zero in coefficient");
    Element r(num, den);
    r.canonicalize();
    return r;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
  std::uint64_t characteristic() const { return 0; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// GF(p) for a prime p < 2^31. Elements are residues in [0, p); printing uses
/// the symmetric range so that x - y reads naturally instead of x + (p-1)y.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
      throw std::invalid_argument("GF argument must be prime");
  }

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }

  Element from_mpz(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }

  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_mpz(den);
    if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
    return mul(from_mpz(num), inv(d));
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool is_negative(Element a) const { return a > p_ / 2; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid on signed 64-bit values
    std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t s2 = s0 - q * s1;
      s0 = s1;
      s1 = s2;
    }
    if (s0 < 0) s0 += p_;
    return static_cast<Element>(s0);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  std::string to_string(Element a) const {
    if (is_negative(a)) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::uint64_t characteristic() const { return p_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace cregro

#endif  // CREGRO_FIELD_HPP
