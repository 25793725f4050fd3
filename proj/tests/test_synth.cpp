#include <gtest/gtest.h>

#include "ringsynth/circuit.hpp"
#include "ringsynth/random.hpp"
#include "ringsynth/synth.hpp"

using namespace ringsynth;

namespace {

const RingScalar kR(1, 1);

RingMatrix H() { return RingMatrix::from_rows({{kR, kR}, {kR, -kR}}); }

RingMatrix product_of_embeds(const GeneratorWord& w) {
  RingMatrix p = RingMatrix::identity(w.dim);
  for (const auto& op : w.ops) p = multiply_serial(p, embed(op));
  return p;
}

void expect_roundtrip(const SynthResult& r, const RingMatrix& v) {
  EXPECT_EQ(product_of_embeds(r.word) * v, RingMatrix::identity(v.rows()));
}

RingMatrix diag(const std::vector<RingScalar>& d) {
  RingMatrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RingMatrix column(const std::vector<RingInt>& u) {
  RingMatrix c(u.size(), 1);
  for (size_t i = 0; i < u.size(); ++i) c(i, 0) = RingScalar(u[i]);
  return c;
}

// F^m0 (-1)_[1]^m1 (-1)_[2]^m2 X^m3
RingMatrix imaginary_prefix(const std::array<int, 4>& m) {
  RingMatrix p = RingMatrix::identity(2);
  RingMatrix f = gate_kernel(GateKind::F);
  for (int i = 0; i < m[0]; ++i) p = p * f;
  p = p * diag({m[1] ? -1 : 1, m[2] ? -1 : 1});
  if (m[3]) p = p * gate_kernel(GateKind::X);
  return p;
}

bool divisible_in(const RingInt& x, const RingInt& d, IntRing r) {
  auto q = x.exact_divide(d);
  return q && in_ring(*q, r);
}

const RingInt kI = RingInt::imag();
const RingInt kISqrt2 = RingInt::isqrt2();

}  // namespace

TEST(QuadrupleIntegral, Examples) {
  auto a = reduce_quadruple_integral({1, 1, 1, 1});
  EXPECT_EQ(a.m, (std::array<int, 4>{0, 0, 0, 0}));
  EXPECT_EQ(a.out, (std::array<RingInt, 4>{2, 0, 0, 0}));
  auto b = reduce_quadruple_integral({3, 1, 1, 1});
  EXPECT_EQ(b.m, (std::array<int, 4>{1, 0, 0, 0}));
  auto c = reduce_quadruple_integral({5, 3, 7, 1});
  EXPECT_EQ(c.m, (std::array<int, 4>{0, 1, 1, 0}));
}

TEST(QuadrupleIntegral, ImageMatchesHH) {
  const RingMatrix hh = kron(H(), H());
  for (int a = 1; a < 16; a += 2)
    for (int b = 1; b < 8; b += 2)
      for (int c = -7; c < 8; c += 2) {
        std::array<RingInt, 4> u{a, b, c, 1};
        auto r = reduce_quadruple_integral(u);
        std::vector<RingInt> signed_u;
        for (int k = 0; k < 4; ++k) signed_u.push_back(r.m[k] ? -u[k] : u[k]);
        RingMatrix img = hh * column(signed_u);
        for (int k = 0; k < 4; ++k) {
          EXPECT_EQ(img(k, 0), RingScalar(r.out[k]));
          EXPECT_TRUE(r.out[k].divisible_by(2));
        }
      }
}

TEST(ColumnIntegral, Examples) {
  auto w1 = reduce_column_integral({0, 0, 1}, 1);
  ASSERT_EQ(w1.ops.size(), 1u);
  EXPECT_EQ(w1.ops[0], make_op(GenKind::X2, {1, 3}, 3));
  auto w2 = reduce_column_integral({0, -1, 0}, 2);
  ASSERT_EQ(w2.ops.size(), 1u);
  EXPECT_EQ(w2.ops[0], make_op(GenKind::NEG1, {2}, 3));
  const RingScalar h = RingScalar::half();
  auto w3 = reduce_column_integral({h, h, h, h}, 1);
  ASSERT_EQ(w3.ops.size(), 1u);
  EXPECT_EQ(w3.ops[0], make_op(GenKind::HH4, {1, 2, 3, 4}, 4));
  RingMatrix img = product_of_embeds(w3) * RingMatrix::from_rows({{h}, {h}, {h}, {h}});
  EXPECT_EQ(img, RingMatrix::from_rows({{1}, {0}, {0}, {0}}));
}

TEST(SynthIntegral, Examples) {
  EXPECT_TRUE(synth_integral(RingMatrix::identity(4)).word.ops.empty());
  RingMatrix p = permutation_matrix({2, 0, 3, 1});
  auto r = synth_integral(p);
  for (const auto& op : r.word.ops) EXPECT_EQ(op.kind, GenKind::X2);
  expect_roundtrip(r, p);
  RingMatrix hh = kron(H(), H());
  expect_roundtrip(synth_integral(hh), hh);
  EXPECT_THROW(synth_integral(H()), UnsupportedError);
}

TEST(SynthSuperintegral, Examples) {
  auto r = synth_superintegral(H());
  ASSERT_EQ(r.word.ops.size(), 1u);
  EXPECT_EQ(r.word.ops[0].kind, GenKind::GLOBAL_IH);
  EXPECT_TRUE(synth_superintegral(RingMatrix::identity(2)).word.ops.empty());
  RingMatrix m = random_matrix(GateSetTag::SUPINT, 3, 20, 5);
  expect_roundtrip(synth_superintegral(m), m);
}

TEST(PairReal, Examples) {
  auto a = reduce_pair_real(1, 1);
  EXPECT_EQ(a[0], RingInt::sqrt2());
  EXPECT_EQ(a[1], RingInt(0));
  RingInt u = RingInt(1) + RingInt::sqrt2();
  auto b = reduce_pair_real(u, u);
  EXPECT_EQ(b[0], RingInt(2) + RingInt::sqrt2());
  EXPECT_EQ(b[1], RingInt(0));
  auto c = reduce_pair_real(1, RingInt(1) + RingInt(2) * RingInt::sqrt2());
  for (const auto& x : c) EXPECT_TRUE(x.divisible_by_sqrt2());
}

TEST(SynthReal, Examples) {
  auto r = synth_real(H());
  ASSERT_EQ(r.word.ops.size(), 1u);
  EXPECT_EQ(r.word.ops[0], make_op(GenKind::H2, {1, 2}, 2));
  EXPECT_TRUE(synth_real(RingMatrix::identity(3)).word.ops.empty());
  RingMatrix m = random_matrix(GateSetTag::REAL, 2, 25, 9);
  expect_roundtrip(synth_real(m), m);
}

TEST(PairImaginary, Examples) {
  auto a = reduce_pair_imaginary(1, 1);
  EXPECT_EQ(a.out[0], kISqrt2);
  EXPECT_EQ(a.out[1], RingInt(0));
  auto b = reduce_pair_imaginary(RingInt(1) + kISqrt2, 1);
  EXPECT_EQ(b.m, (std::array<int, 4>{1, 0, 0, 0}));
  EXPECT_EQ(b.out[0], kISqrt2);
  EXPECT_EQ(b.out[1], kISqrt2);
  auto c = reduce_pair_imaginary(3, RingInt(1) + kISqrt2);
  RingMatrix img = imaginary_prefix(c.m) * column({3, RingInt(1) + kISqrt2});
  for (int k = 0; k < 2; ++k) {
    EXPECT_EQ(img(k, 0), RingScalar(c.out[k]));
    EXPECT_TRUE(divisible_in(c.out[k], kISqrt2, IntRing::Zisqrt2));
  }
}

TEST(PairImaginary, AllOddNormPairsReduce) {
  std::vector<RingInt> odd;
  for (int x0 = -3; x0 <= 3; ++x0)
    for (int x1 = -3; x1 <= 3; ++x1) {
      RingInt u = from_quadratic(x0, x1, IntRing::Zisqrt2);
      if (residue_facts(u, IntRing::Zisqrt2).odd_norm) odd.push_back(u);
    }
  for (const auto& u1 : odd)
    for (const auto& u2 : odd) {
      auto r = reduce_pair_imaginary(u1, u2);
      RingMatrix img = imaginary_prefix(r.m) * column({u1, u2});
      for (int k = 0; k < 2; ++k) {
        EXPECT_EQ(img(k, 0), RingScalar(r.out[k]));
        EXPECT_TRUE(divisible_in(r.out[k], kISqrt2, IntRing::Zisqrt2));
      }
    }
}

TEST(SynthImaginary, Examples) {
  RingMatrix f = gate_kernel(GateKind::F);
  expect_roundtrip(synth_imaginary(f), f);
  EXPECT_TRUE(synth_imaginary(RingMatrix::identity(4)).word.ops.empty());
  RingMatrix m = random_matrix(GateSetTag::IMAG, 4, 12, 2);
  expect_roundtrip(synth_imaginary(m), m);
}

TEST(PairGaussian, Examples) {
  auto a = reduce_pair_gaussian(1, 1);
  EXPECT_EQ(a.m, (std::array<int, 2>{0, 0}));
  EXPECT_EQ(a.out[0], RingInt(1) + kI);
  EXPECT_EQ(a.out[1], RingInt(0));
  auto b = reduce_pair_gaussian(1, kI);
  EXPECT_EQ(b.m, (std::array<int, 2>{0, 3}));
  auto c = reduce_pair_gaussian(kI, kI);
  EXPECT_EQ(c.m, (std::array<int, 2>{3, 3}));
}

TEST(SynthGaussian, Examples) {
  RingMatrix s = gate_kernel(GateKind::S);
  auto r = synth_gaussian(s);
  expect_roundtrip(r, s);
  for (const auto& op : r.word.ops) EXPECT_EQ(op.kind, GenKind::I4);
  RingMatrix wh = gate_kernel(GateKind::WH);
  expect_roundtrip(synth_gaussian(wh), wh);
  EXPECT_TRUE(synth_gaussian(RingMatrix::identity(2)).word.ops.empty());
}

TEST(SynthSupergaussian, Examples) {
  auto r = synth_supergaussian(H());
  ASSERT_FALSE(r.word.ops.empty());
  // the first generator applied to V is the last one written
  EXPECT_EQ(r.word.ops.back().kind, GenKind::GLOBAL_OMEGA);
  expect_roundtrip(r, H());
  EXPECT_TRUE(synth_supergaussian(RingMatrix::identity(2)).word.ops.empty());
  RingMatrix m = random_matrix(GateSetTag::SUPGAUSS, 3, 25, 4);
  expect_roundtrip(synth_supergaussian(m), m);
}

TEST(AncillaFree, ImaginaryMinusOnePair) {
  std::vector<RingScalar> d(16, 1);
  d[14] = d[15] = -1;
  RingMatrix v = diag(d);
  auto r = synth_imaginary_ancillafree(v);
  ASSERT_EQ(r.word.ops.size(), 1u);
  EXPECT_EQ(r.word.ops[0].kind, GenKind::Z2);
  expect_roundtrip(r, v);
}

TEST(AncillaFree, GaussianTelescope) {
  std::vector<RingScalar> d(16, 1);
  d[0] = RingScalar(kI);
  d[1] = RingScalar(-kI);
  RingMatrix v = diag(d);
  auto r = synth_gaussian_ancillafree(v);
  for (const auto& op : r.word.ops) EXPECT_EQ(op.kind, GenKind::IZ2);
  expect_roundtrip(r, v);
}

TEST(AncillaFree, RejectsDeterminant) {
  std::vector<RingScalar> d(16, 1);
  d[3] = -1;
  EXPECT_THROW(synth_imaginary_ancillafree(diag(d)), UnsupportedError);
  d[3] = RingScalar(kI);
  EXPECT_THROW(synth_gaussian_ancillafree(diag(d)), UnsupportedError);
  EXPECT_THROW(synth_gaussian_ancillafree(RingMatrix::identity(8)), UnsupportedError);
}

TEST(AncillaFree, RandomRoundTrip) {
  for (GateSetTag gs : {GateSetTag::IMAG, GateSetTag::GAUSS}) {
    for (uint64_t seed = 1; seed <= 3; ++seed) {
      RingMatrix m = random_matrix(gs, 4, 15, seed);
      auto r = synthesize({m, gs, AncillaPolicy::AncillaFree});
      EXPECT_TRUE(r.ancilla_free);
      expect_roundtrip(r, m);
    }
  }
}

TEST(Synthesize, Dispatch) {
  EXPECT_THROW(synthesize({gate_kernel(GateKind::T), std::nullopt}), UnsupportedError);
  RingMatrix ccx = gate_kernel(GateKind::CCX);
  auto r = synthesize({ccx, GateSetTag::INT});
  for (const auto& op : r.word.ops) EXPECT_EQ(op.kind, GenKind::X2);
  expect_roundtrip(r, ccx);
  RingMatrix ch = gate_kernel(GateKind::CH);
  auto s = synthesize({ch, GateSetTag::REAL});
  EXPECT_EQ(s.gateset, GateSetTag::REAL);
  expect_roundtrip(s, ch);
  auto t = synthesize({ch, std::nullopt});
  EXPECT_EQ(t.gateset, GateSetTag::REAL);
  EXPECT_THROW(synthesize({RingMatrix::from_rows({{1, 1}, {0, 1}}), std::nullopt}), NotUnitaryError);
}

TEST(Synthesize, TracesDescend) {
  for (GateSetTag gs : kAllGateSets) {
    RingMatrix m = random_matrix(gs, 3, 30, 17);
    auto r = synthesize({m, gs});
    for (const auto& t : r.trace) {
      ASSERT_FALSE(t.lde.empty());
      EXPECT_EQ(t.lde.back(), 0u);
      for (size_t i = 1; i < t.lde.size(); ++i) EXPECT_LT(t.lde[i], t.lde[i - 1]);
    }
  }
}

TEST(Word, TextRoundTrip) {
  RingMatrix m = random_matrix(GateSetTag::SUPGAUSS, 2, 20, 8);
  auto w = synthesize({m, GateSetTag::SUPGAUSS}).word;
  EXPECT_EQ(parse_word(format_word(w)).ops, w.ops);
}
