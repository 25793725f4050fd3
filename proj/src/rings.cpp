#include "ringsynth/rings.hpp"

#include <algorithm>

namespace ringsynth {

namespace {

int mod8(int k) { return ((k % 8) + 8) % 8; }

bool is_even(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

}  // namespace

RingInt RingInt::omega_power(int k) {
  k = mod8(k);
  RingInt r;
  r.c_[k % 4] = (k < 4) ? 1 : -1;
  return r;
}

RingInt& RingInt::operator+=(const RingInt& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

RingInt& RingInt::operator-=(const RingInt& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

RingInt& RingInt::operator*=(const RingInt& o) {
  *this = *this * o;
  return *this;
}

RingInt& RingInt::operator*=(const Integer& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

RingInt RingInt::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

RingInt operator+(RingInt a, const RingInt& b) { return a += b; }
RingInt operator-(RingInt a, const RingInt& b) { return a -= b; }

RingInt operator*(const RingInt& a, const RingInt& b) {
  // w^4 = -1
  return {a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1],
          a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3],
          a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]};
}

RingInt RingInt::times_omega(int k) const {
  k = mod8(k);
  RingInt r;
  for (int j = 0; j < 4; ++j) {
    int m = j + k;
    int idx = m % 4;
    bool neg = ((m / 4) % 2) == 1;
    r.c_[idx] = neg ? Integer(-c_[j]) : c_[j];
  }
  return r;
}

RingInt RingInt::conj() const { return {c_[0], -c_[3], -c_[2], -c_[1]}; }

RingInt RingInt::galois(int k) const {
  k = mod8(k);
  if (k % 2 == 0) throw DomainError("galois: exponent must be odd");
  RingInt r;
  for (int j = 0; j < 4; ++j) {
    int m = (j * k) % 8;
    if (m < 4)
      r.c_[m] += c_[j];
    else
      r.c_[m - 4] -= c_[j];
  }
  return r;
}

Integer RingInt::norm() const {
  RingInt p = *this * galois(3) * galois(5) * galois(7);
  return p[0];
}

RingInt RingInt::times_sqrt2() const {
  return {c_[1] - c_[3], c_[0] + c_[2], c_[1] + c_[3], c_[2] - c_[0]};
}

bool RingInt::divisible_by_sqrt2() const {
  return is_even(c_[0] - c_[2]) && is_even(c_[1] - c_[3]);
}

std::optional<RingInt> RingInt::divide_by_root2() const {
  if (!divisible_by_sqrt2()) return std::nullopt;
  return times_sqrt2().divexact(2);
}

std::optional<RingInt> divide_by_root2(const RingInt& a) { return a.divide_by_root2(); }

bool RingInt::divisible_by(const Integer& d) const {
  return std::all_of(c_.begin(), c_.end(), [&](const Integer& c) {
    return mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) != 0;
  });
}

RingInt RingInt::divexact(const Integer& d) const {
  RingInt r;
  for (int i = 0; i < 4; ++i) mpz_divexact(r.c_[i].get_mpz_t(), c_[i].get_mpz_t(), d.get_mpz_t());
  return r;
}

std::optional<RingInt> RingInt::exact_divide(const RingInt& d) const {
  if (d.is_zero()) return std::nullopt;
  RingInt p = d.galois(3) * d.galois(5) * d.galois(7);
  Integer n = (d * p)[0];
  RingInt q = *this * p;
  if (!q.divisible_by(n)) return std::nullopt;
  return q.divexact(n);
}

RingInt sqrt2_power(unsigned e) {
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, e / 2);
  RingInt r(two_pow, 0, 0, 0);
  if (e % 2) r = r.times_sqrt2();
  return r;
}

RingScalar::RingScalar(RingInt num, unsigned k) : num_(std::move(num)), k_(k) { normalize(); }

void RingScalar::normalize() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ >= 2 && num_.divisible_by(2)) {
    num_ = num_.divexact(2);
    k_ -= 2;
  }
  if (k_ >= 1 && num_.divisible_by_sqrt2()) {
    num_ = *num_.divide_by_root2();
    k_ -= 1;
  }
}

RingInt RingScalar::numerator_at(unsigned k) const {
  if (k < k_) throw InvariantError("numerator_at: exponent below normalized exponent");
  if (k == k_) return num_;
  return num_ * sqrt2_power(k - k_);
}

RingScalar RingScalar::scale_sqrt2(int e) const {
  if (e >= 0) {
    if (static_cast<unsigned>(e) <= k_) return RingScalar(num_, k_ - e);
    return RingScalar(num_ * sqrt2_power(e - k_), 0);
  }
  return RingScalar(num_, k_ + static_cast<unsigned>(-e));
}

RingScalar& RingScalar::operator+=(const RingScalar& o) {
  unsigned k = std::max(k_, o.k_);
  num_ = numerator_at(k) + o.numerator_at(k);
  k_ = k;
  normalize();
  return *this;
}

RingScalar& RingScalar::operator-=(const RingScalar& o) {
  unsigned k = std::max(k_, o.k_);
  num_ = numerator_at(k) - o.numerator_at(k);
  k_ = k;
  normalize();
  return *this;
}

RingScalar& RingScalar::operator*=(const RingScalar& o) {
  num_ *= o.num_;
  k_ += o.k_;
  normalize();
  return *this;
}

RingScalar operator+(RingScalar a, const RingScalar& b) { return a += b; }
RingScalar operator-(RingScalar a, const RingScalar& b) { return a -= b; }
RingScalar operator*(RingScalar a, const RingScalar& b) { return a *= b; }

bool in_ring(const RingInt& a, IntRing r) {
  switch (r) {
    case IntRing::Z:
      return sgn(a[1]) == 0 && sgn(a[2]) == 0 && sgn(a[3]) == 0;
    case IntRing::Zsqrt2:
      return sgn(a[2]) == 0 && a[3] == -a[1];
    case IntRing::Zisqrt2:
      return sgn(a[2]) == 0 && a[3] == a[1];
    case IntRing::Zi:
      return sgn(a[1]) == 0 && sgn(a[3]) == 0;
    case IntRing::Zomega:
      return true;
  }
  return false;
}

std::string_view ring_name(IntRing r) {
  switch (r) {
    case IntRing::Z: return "Z";
    case IntRing::Zsqrt2: return "Z[rt2]";
    case IntRing::Zisqrt2: return "Z[irt2]";
    case IntRing::Zi: return "Z[i]";
    case IntRing::Zomega: return "Z[w]";
  }
  return "?";
}

namespace {

constexpr RingTag kAllTags[] = {RingTag::Z, RingTag::Zsqrt2, RingTag::Zisqrt2, RingTag::Zi,
                                RingTag::Zomega, RingTag::D, RingTag::Dsqrt2, RingTag::Disqrt2,
                                RingTag::Di, RingTag::Domega, RingTag::Z_over_sqrt2,
                                RingTag::Zi_over_sqrt2};

// y = num * sqrt2^(k mod 2); x lies in D[R] iff y lies in R
RingInt dyadic_core(const RingScalar& x) {
  return x.k() % 2 ? x.num().times_sqrt2() : x.num();
}

}  // namespace

std::string_view tag_name(RingTag t) {
  switch (t) {
    case RingTag::Z: return "Z";
    case RingTag::Zsqrt2: return "Zsqrt2";
    case RingTag::Zisqrt2: return "Zisqrt2";
    case RingTag::Zi: return "Zi";
    case RingTag::Zomega: return "Zomega";
    case RingTag::D: return "D";
    case RingTag::Dsqrt2: return "Dsqrt2";
    case RingTag::Disqrt2: return "Disqrt2";
    case RingTag::Di: return "Di";
    case RingTag::Domega: return "Domega";
    case RingTag::Z_over_sqrt2: return "Z_over_sqrt2";
    case RingTag::Zi_over_sqrt2: return "Zi_over_sqrt2";
  }
  return "?";
}

std::optional<RingTag> parse_tag(std::string_view s) {
  for (RingTag t : kAllTags)
    if (tag_name(t) == s) return t;
  return std::nullopt;
}

bool contains(RingTag t, const RingScalar& x) {
  const RingInt& n = x.num();
  switch (t) {
    case RingTag::Z: return x.k() == 0 && in_ring(n, IntRing::Z);
    case RingTag::Zsqrt2: return x.k() == 0 && in_ring(n, IntRing::Zsqrt2);
    case RingTag::Zisqrt2: return x.k() == 0 && in_ring(n, IntRing::Zisqrt2);
    case RingTag::Zi: return x.k() == 0 && in_ring(n, IntRing::Zi);
    case RingTag::Zomega: return x.k() == 0;
    case RingTag::D: return x.k() % 2 == 0 && in_ring(n, IntRing::Z);
    case RingTag::Dsqrt2: return in_ring(dyadic_core(x), IntRing::Zsqrt2);
    case RingTag::Disqrt2: return in_ring(dyadic_core(x), IntRing::Zisqrt2);
    case RingTag::Di: return in_ring(dyadic_core(x), IntRing::Zi);
    case RingTag::Domega: return true;
    case RingTag::Z_over_sqrt2:
      return in_ring(n, IntRing::Z) || in_ring(n.times_sqrt2(), IntRing::Z);
    case RingTag::Zi_over_sqrt2:
      return in_ring(n, IntRing::Zi) || in_ring(n.times_sqrt2(), IntRing::Zi);
  }
  return false;
}

bool tag_leq(RingTag a, RingTag b) {
  using T = RingTag;
  if (a == b || b == T::Domega || a == T::Z) return true;
  switch (a) {
    case T::Zsqrt2: return b == T::Zomega || b == T::Dsqrt2;
    case T::Zisqrt2: return b == T::Zomega || b == T::Disqrt2;
    case T::Zi: return b == T::Zomega || b == T::Di || b == T::Zi_over_sqrt2;
    case T::D:
      return b == T::Dsqrt2 || b == T::Disqrt2 || b == T::Di || b == T::Z_over_sqrt2 ||
             b == T::Zi_over_sqrt2;
    case T::Di: return b == T::Zi_over_sqrt2;
    case T::Z_over_sqrt2: return b == T::Dsqrt2 || b == T::Zi_over_sqrt2;
    default: return false;
  }
}

RingTag membership(const RingScalar& x) {
  using T = RingTag;
  static constexpr T order[] = {T::Z, T::Zsqrt2, T::Zisqrt2, T::Zi, T::D, T::Z_over_sqrt2,
                                T::Zomega, T::Dsqrt2, T::Disqrt2, T::Di, T::Zi_over_sqrt2,
                                T::Domega};
  for (T t : order)
    if (contains(t, x)) return t;
  return T::Domega;
}

}  // namespace ringsynth
