#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ringsynth/rings.hpp"

using namespace ringsynth;

namespace {

using cplx = std::complex<long double>;

cplx to_complex(const RingInt& a) {
  const long double h = std::sqrt(0.5L);
  const cplx w(h, h);
  cplx r = 0, p = 1;
  for (int j = 0; j < 4; ++j) {
    r += p * static_cast<long double>(a[j].get_d());
    p *= w;
  }
  return r;
}

cplx to_complex(const RingScalar& x) { return to_complex(x.num()) / std::pow(std::sqrt(2.0L), x.k()); }

bool close(cplx a, cplx b) { return std::abs(a - b) < 1e-9L * (1 + std::abs(a)); }

RingInt random_int(std::mt19937_64& rng, int span = 20) {
  auto c = [&] { return static_cast<long>(rng() % (2 * span + 1)) - span; };
  return {c(), c(), c(), c()};
}

RingScalar random_scalar(std::mt19937_64& rng) { return RingScalar(random_int(rng), rng() % 6); }

}  // namespace

TEST(RingInt, ArithmeticExamples) {
  EXPECT_EQ(RingInt::omega() * RingInt::omega_power(3), RingInt(-1));
  RingInt one_plus_w = RingInt(1) + RingInt::omega();
  RingInt one_minus_w = RingInt(1) - RingInt::omega();
  EXPECT_EQ(one_plus_w * one_minus_w, RingInt(1, 0, -1, 0));
  EXPECT_EQ(RingInt::sqrt2() * RingInt::sqrt2(), RingInt(2));
}

TEST(RingInt, Constants) {
  EXPECT_EQ(RingInt::omega() * RingInt::omega(), RingInt::imag());
  EXPECT_EQ(RingInt::omega() - RingInt::omega_power(3), RingInt::sqrt2());
  EXPECT_EQ(RingInt::omega() + RingInt::omega_power(3), RingInt::isqrt2());
}

TEST(RingInt, Conjugate) {
  EXPECT_EQ(RingInt::imag().conj(), -RingInt::imag());
  EXPECT_EQ(RingInt::sqrt2().conj(), RingInt::sqrt2());
  EXPECT_EQ(RingInt::omega().conj(), -RingInt::omega_power(3));
}

TEST(RingInt, DivideByRoot2) {
  EXPECT_EQ(divide_by_root2(RingInt(2)), RingInt::sqrt2());
  auto w = divide_by_root2(RingInt(1, 0, 1, 0));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, RingInt::omega());
  EXPECT_EQ(*w * RingInt::sqrt2(), RingInt(1, 0, 1, 0));
  EXPECT_FALSE(divide_by_root2(RingInt(1)));
}

TEST(RingInt, MatchesComplexArithmetic) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    RingInt a = random_int(rng), b = random_int(rng);
    EXPECT_TRUE(close(to_complex(a + b), to_complex(a) + to_complex(b)));
    EXPECT_TRUE(close(to_complex(a - b), to_complex(a) - to_complex(b)));
    EXPECT_TRUE(close(to_complex(a * b), to_complex(a) * to_complex(b)));
    EXPECT_TRUE(close(to_complex(a.conj()), std::conj(to_complex(a))));
    EXPECT_TRUE(close(to_complex(a.times_sqrt2()), to_complex(a) * std::sqrt(2.0L)));
  }
}

TEST(RingInt, RingAxioms) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    RingInt a = random_int(rng), b = random_int(rng), c = random_int(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), RingInt());
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}

TEST(RingInt, DivisionRoundTrip) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    RingInt a = random_int(rng);
    auto q = divide_by_root2(a.times_sqrt2());
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, a);
    if (auto d = divide_by_root2(a)) EXPECT_EQ(d->times_sqrt2(), a);
  }
}

TEST(RingScalar, ArithmeticExamples) {
  RingScalar r(1, 1);
  RingScalar s = r + r;
  EXPECT_EQ(s.num(), RingInt::sqrt2());
  EXPECT_EQ(s.k(), 0u);
  RingScalar p = r * r;
  EXPECT_EQ(p.num(), RingInt(1));
  EXPECT_EQ(p.k(), 2u);
}

TEST(RingScalar, NormalizedAndCanonical) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    RingScalar x = random_scalar(rng), y = random_scalar(rng);
    for (const RingScalar& z : {x + y, x * y, x - y}) {
      if (z.k() > 0) EXPECT_FALSE(z.num().divisible_by_sqrt2());
    }
    EXPECT_TRUE(close(to_complex(x + y), to_complex(x) + to_complex(y)));
    EXPECT_TRUE(close(to_complex(x * y), to_complex(x) * to_complex(y)));
    EXPECT_EQ(RingScalar(1) * x, x);
    // equality agrees with numeric equality
    EXPECT_EQ(x == y, close(to_complex(x), to_complex(y)) && close(to_complex(y), to_complex(x)));
  }
}

TEST(RingScalar, SameValueDifferentScale) {
  EXPECT_EQ(RingScalar(RingInt(2), 2), RingScalar(1));
  EXPECT_EQ(RingScalar(RingInt::sqrt2(), 1), RingScalar(1));
  EXPECT_EQ(RingScalar(RingInt(4), 3), RingScalar(RingInt::sqrt2()));
}

TEST(Membership, Examples) {
  EXPECT_EQ(membership(RingScalar(RingInt::omega())), RingTag::Zomega);
  EXPECT_EQ(membership(RingScalar(RingInt::omega(), 2)), RingTag::Zi_over_sqrt2);
  EXPECT_EQ(membership(RingScalar(RingInt(1) + RingInt::omega(), 2)), RingTag::Domega);
  EXPECT_EQ(membership(RingScalar::half()), RingTag::D);
  EXPECT_EQ(membership(RingScalar(RingInt::isqrt2())), RingTag::Zisqrt2);
  EXPECT_EQ(membership(RingScalar(RingInt::sqrt2(), 2)), RingTag::Z_over_sqrt2);
}

TEST(Membership, OmegaOutsideProperSubrings) {
  RingScalar w(RingInt::omega());
  for (RingTag t : {RingTag::Di, RingTag::Dsqrt2, RingTag::Disqrt2, RingTag::D}) EXPECT_FALSE(contains(t, w));
  EXPECT_TRUE(contains(RingTag::Domega, w));
}

TEST(Residue, Examples) {
  RingInt three_plus = from_quadratic(3, 2, IntRing::Zsqrt2);
  EXPECT_EQ(residue(three_plus, Modulus::Two_Zsqrt2).rep, RingInt(1));
  RingInt u = from_quadratic(5, 3, IntRing::Zisqrt2);
  EXPECT_EQ(residue(u, Modulus::TwoIsqrt2_Zisqrt2).rep, RingInt(1) + RingInt::isqrt2());
  EXPECT_EQ(residue(RingInt(-1), Modulus::TwoIsqrt2_Zisqrt2).rep, RingInt(3));
}

TEST(Residue, ClassesPartition) {
  std::mt19937_64 rng(15);
  for (Modulus m : {Modulus::Two_Zsqrt2, Modulus::Two_Zisqrt2, Modulus::TwoIsqrt2_Zisqrt2, Modulus::Two_Zi,
                    Modulus::Four_Z, Modulus::OnePlusI_Zi}) {
    const IntRing r = base_ring(m);
    const auto classes = residue_classes(m);
    const RingInt mod = modulus_value(m);
    for (int i = 0; i < 200; ++i) {
      RingInt a = from_quadratic(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 41) - 20, r);
      if (r == IntRing::Z) a = RingInt(static_cast<long>(rng() % 41) - 20);
      Residue res = residue(a, m);
      EXPECT_NE(std::find(classes.begin(), classes.end(), res.rep), classes.end());
      // a - rep is a multiple of the modulus inside the base ring
      auto q = (a - res.rep).exact_divide(mod);
      ASSERT_TRUE(q) << modulus_name(m);
      EXPECT_TRUE(in_ring(*q, r)) << modulus_name(m);
    }
  }
}

TEST(ResidueFacts, Examples) {
  auto f = residue_facts(RingInt(1) + RingInt::isqrt2(), IntRing::Zisqrt2);
  EXPECT_TRUE(f.odd_norm);
  EXPECT_EQ(f.norm_mod2.rep, RingInt(1));
  auto g = residue_facts(RingInt::imag(), IntRing::Zi);
  ASSERT_TRUE(g.mod2);
  EXPECT_EQ(g.mod2->rep, RingInt::imag());
  EXPECT_EQ(g.phase_to_one, 1);
  auto h = residue_facts(RingInt(2), IntRing::Zisqrt2);
  EXPECT_FALSE(h.odd_norm);
  EXPECT_EQ(h.norm_mod2.rep, RingInt(0));
}

TEST(ScalarText, RoundTrip) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 200; ++i) {
    RingScalar x = random_scalar(rng);
    EXPECT_EQ(parse_scalar(format_scalar(x)), x);
  }
  EXPECT_EQ(parse_scalar("1/2"), RingScalar::half());
  EXPECT_EQ(parse_scalar("i"), RingScalar(RingInt::imag()));
  EXPECT_EQ(parse_scalar("w"), RingScalar(RingInt::omega()));
  EXPECT_EQ(parse_scalar("rt2"), RingScalar(RingInt::sqrt2()));
  EXPECT_EQ(parse_scalar("irt2"), RingScalar(RingInt::isqrt2()));
  EXPECT_THROW(parse_scalar("(1,2,3)"), ParseError);
}
