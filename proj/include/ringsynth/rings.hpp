#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringsynth/errors.hpp"

namespace ringsynth {

using Integer = mpz_class;

// c0 + c1 w + c2 w^2 + c3 w^3 with w = exp(i pi/4).
class RingInt {
 public:
  RingInt() = default;
  RingInt(long v) : c_{Integer(v), 0, 0, 0} {}
  RingInt(Integer c0, Integer c1, Integer c2, Integer c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static RingInt omega() { return {0, 1, 0, 0}; }
  static RingInt imag() { return {0, 0, 1, 0}; }
  static RingInt sqrt2() { return {0, 1, 0, -1}; }
  static RingInt isqrt2() { return {0, 1, 0, 1}; }
  static RingInt omega_power(int k);

  const Integer& operator[](size_t i) const { return c_[i]; }
  Integer& operator[](size_t i) { return c_[i]; }
  const std::array<Integer, 4>& coeffs() const { return c_; }

  bool is_zero() const { return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

  RingInt& operator+=(const RingInt& o);
  RingInt& operator-=(const RingInt& o);
  RingInt& operator*=(const RingInt& o);
  RingInt& operator*=(const Integer& s);
  RingInt operator-() const;

  // multiplication by w^k is a signed rotation of the coefficients
  RingInt times_omega(int k) const;
  RingInt conj() const;
  // w -> w^k for odd k
  RingInt galois(int k) const;
  // product of the four conjugates, a nonnegative integer
  Integer norm() const;

  RingInt times_sqrt2() const;
  bool divisible_by_sqrt2() const;
  std::optional<RingInt> divide_by_root2() const;
  bool divisible_by(const Integer& d) const;
  RingInt divexact(const Integer& d) const;
  std::optional<RingInt> exact_divide(const RingInt& d) const;

  friend bool operator==(const RingInt& a, const RingInt& b) { return a.c_ == b.c_; }

 private:
  std::array<Integer, 4> c_{};
};

RingInt operator+(RingInt a, const RingInt& b);
RingInt operator-(RingInt a, const RingInt& b);
RingInt operator*(const RingInt& a, const RingInt& b);
inline RingInt conjugate(const RingInt& a) { return a.conj(); }
std::optional<RingInt> divide_by_root2(const RingInt& a);

// num / sqrt2^k, normalized.
class RingScalar {
 public:
  RingScalar() = default;
  RingScalar(long v) : num_(v) {}
  RingScalar(RingInt num, unsigned k = 0);

  static RingScalar half() { return RingScalar(1, 2); }
  static RingScalar omega_power(int k) { return RingScalar(RingInt::omega_power(k)); }

  const RingInt& num() const { return num_; }
  unsigned k() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  RingScalar operator-() const { return RingScalar(-num_, k_); }
  RingScalar conj() const { return RingScalar(num_.conj(), k_); }
  // multiply by sqrt2^e, e may be negative
  RingScalar scale_sqrt2(int e) const;
  // numerator over sqrt2^k for a k no smaller than k()
  RingInt numerator_at(unsigned k) const;

  RingScalar& operator+=(const RingScalar& o);
  RingScalar& operator-=(const RingScalar& o);
  RingScalar& operator*=(const RingScalar& o);

  friend bool operator==(const RingScalar& a, const RingScalar& b) { return a.k_ == b.k_ && a.num_ == b.num_; }

 private:
  void normalize();
  RingInt num_;
  unsigned k_ = 0;
};

RingScalar operator+(RingScalar a, const RingScalar& b);
RingScalar operator-(RingScalar a, const RingScalar& b);
RingScalar operator*(RingScalar a, const RingScalar& b);

// sqrt2^e as a ring element, e >= 0
RingInt sqrt2_power(unsigned e);

// Integer subrings of Z[w]
enum class IntRing { Z, Zsqrt2, Zisqrt2, Zi, Zomega };
bool in_ring(const RingInt& a, IntRing r);
std::string_view ring_name(IntRing r);

enum class RingTag {
  Z, Zsqrt2, Zisqrt2, Zi, Zomega,
  D, Dsqrt2, Disqrt2, Di, Domega,
  Z_over_sqrt2, Zi_over_sqrt2
};
std::string_view tag_name(RingTag t);
std::optional<RingTag> parse_tag(std::string_view s);
bool contains(RingTag t, const RingScalar& x);
// a is a subring of b
bool tag_leq(RingTag a, RingTag b);
// minimal ring of the lattice containing x
RingTag membership(const RingScalar& x);

// Residues
enum class Modulus { Two_Zsqrt2, Two_Zisqrt2, TwoIsqrt2_Zisqrt2, Two_Zi, Four_Z, OnePlusI_Zi };

struct Residue {
  Modulus modulus;
  RingInt rep;
  friend bool operator==(const Residue&, const Residue&) = default;
};

IntRing base_ring(Modulus m);
RingInt modulus_value(Modulus m);
Residue residue(const RingInt& a, Modulus m);
std::vector<RingInt> residue_classes(Modulus m);
std::string_view modulus_name(Modulus m);

struct ResidueFacts {
  IntRing base;
  Residue norm_mod2;                    // u'u mod 2
  bool odd_norm = false;                // u'u = 1 mod 2
  std::optional<Residue> mod_2isqrt2;   // Z[i sqrt2] only
  bool in_unit_classes = false;         // mod 2i sqrt2 class in {1,3,1+i sqrt2,3+i sqrt2}
  std::optional<Residue> mod2;          // Z[i] only
  std::optional<Residue> square_mod2;   // Z[i] only
  std::optional<int> phase_to_one;      // Z[i]: m in {0,1} with i^m u = 1 mod 2
};
ResidueFacts residue_facts(const RingInt& u, IntRing base);

// coordinates of a in the standard basis of a quadratic subring
// Z[sqrt2]: x0 + x1 sqrt2, Z[i sqrt2]: x0 + x1 i sqrt2, Z[i]: x0 + x1 i
std::array<Integer, 2> quadratic_coords(const RingInt& a, IntRing r);
RingInt from_quadratic(const Integer& x0, const Integer& x1, IntRing r);

// Text format (c0,c1,c2,c3)/rt2^k
std::string format_scalar(const RingScalar& x);
RingScalar parse_scalar(std::string_view s);
std::string format_ringint(const RingInt& a);

}  // namespace ringsynth
