#include <gtest/gtest.h>

#include <random>

#include "ringsynth/identities.hpp"
#include "ringsynth/lowering.hpp"
#include "ringsynth/synth.hpp"

using namespace ringsynth;

namespace {

RingMatrix kernel_of(GateKind k) { return gate_kernel(k); }

std::vector<int> distinct_levels(size_t count, size_t dim, std::mt19937_64& rng) {
  std::vector<int> all(dim);
  for (size_t i = 0; i < dim; ++i) all[i] = static_cast<int>(i) + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

constexpr GenKind kAllKinds[] = {GenKind::NEG1, GenKind::X2,  GenKind::H2,  GenKind::HH4,  GenKind::F2,
                                 GenKind::I4,   GenKind::WH2, GenKind::GLOBAL_IH, GenKind::GLOBAL_OMEGA,
                                 GenKind::XZ2,  GenKind::ZX2, GenKind::FZ2, GenKind::ZF2,  GenKind::IZ2,
                                 GenKind::IX2,  GenKind::WSH2, GenKind::WHS2, GenKind::Z2};

}  // namespace

TEST(LowerPermutation, SingleQubitX) {
  Circuit c = lower_permutation(kernel_of(GateKind::X));
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0], (Gate{GateKind::X, {1}}));
}

TEST(LowerPermutation, NegatedControl) {
  RingMatrix p = embed(make_op(GenKind::X2, {1, 2}, 4));
  Circuit c = lower_permutation(p);
  EXPECT_EQ(evaluate(c).unitary, p);
  // X on wire 2 controlled on wire 1 being 0
  Circuit expect;
  expect.n_data = 2;
  expect.add(GateKind::X, {1});
  expect.add(GateKind::CX, {1, 2});
  expect.add(GateKind::X, {1});
  EXPECT_EQ(evaluate(expect).unitary, p);
}

TEST(LowerPermutation, CyclicShiftAndRandom) {
  std::vector<size_t> shift(8);
  for (size_t i = 0; i < 8; ++i) shift[i] = (i + 1) % 8;
  RingMatrix p = permutation_matrix(shift);
  EXPECT_EQ(evaluate(lower_permutation(p)).unitary, p);
  std::mt19937_64 rng(5);
  for (size_t dim : {4, 8, 16}) {
    std::vector<size_t> img(dim);
    for (size_t i = 0; i < dim; ++i) img[i] = i;
    for (int t = 0; t < 3; ++t) {
      std::shuffle(img.begin(), img.end(), rng);
      RingMatrix q = permutation_matrix(img);
      Circuit c = lower_permutation(q);
      EXPECT_TRUE(circuit_in_gateset(c, GateSetTag::INT));
      auto e = evaluate(c);
      EXPECT_TRUE(e.ancilla_ok);
      EXPECT_EQ(e.unitary, q);
    }
  }
}

TEST(McxDirty, Examples) {
  Circuit c0 = mcx_dirty({}, 2, 1);
  ASSERT_EQ(c0.gates.size(), 1u);
  EXPECT_EQ(c0.gates[0], (Gate{GateKind::X, {2}}));
  Circuit c2 = mcx_dirty({1, 2}, 3, 4);
  ASSERT_EQ(c2.gates.size(), 1u);
  EXPECT_EQ(c2.gates[0], (Gate{GateKind::CCX, {1, 2, 3}}));
  Circuit c4 = mcx_dirty({1, 2, 3, 4}, 5, 6);
  ASSERT_EQ(c4.width(), 6);
  EXPECT_EQ(evaluate_full(c4), controlled_on(kernel_of(GateKind::X), {1, 2, 3, 4}, {5}, 6));
  EXPECT_THROW(mcx_dirty({1, 2}, 2, 3), DomainError);
}

TEST(McxDirty, ScatteredWires) {
  Circuit c = mcx_dirty({5, 1, 3}, 2, 4);
  EXPECT_EQ(evaluate_full(c), controlled_on(kernel_of(GateKind::X), {5, 1, 3}, {2}, 5));
}

TEST(ControlExtend, SingleControlTemplates) {
  struct Case {
    BaseGate w;
    GateSetTag gs;
    RingMatrix u;
  };
  const std::vector<Case> cases = {
      {BaseGate::Z, GateSetTag::INT, kernel_of(GateKind::Z)},
      {BaseGate::HH, GateSetTag::INT, kernel_of(GateKind::HH)},
      {BaseGate::H, GateSetTag::REAL, kernel_of(GateKind::H)},
      {BaseGate::F, GateSetTag::IMAG, kernel_of(GateKind::F)},
      {BaseGate::WH, GateSetTag::GAUSS, kernel_of(GateKind::WH)},
      {BaseGate::S, GateSetTag::GAUSS, kernel_of(GateKind::S)},
      {BaseGate::Sdg, GateSetTag::SUPGAUSS, kernel_of(GateKind::Sdg)},
      {BaseGate::X, GateSetTag::INT, kernel_of(GateKind::X)},
  };
  for (const auto& cs : cases) {
    const int nt = cs.w == BaseGate::HH ? 2 : 1;
    for (int k = 0; k <= 3; ++k) {
      Circuit c = control_extend(cs.w, k, cs.gs);
      EXPECT_TRUE(circuit_in_gateset(c, cs.gs));
      std::vector<int> ctrls, ts;
      for (int i = 1; i <= k; ++i) ctrls.push_back(i);
      for (int i = 0; i < nt; ++i) ts.push_back(k + 1 + i);
      auto e = evaluate(c);
      EXPECT_TRUE(e.ancilla_ok) << gateset_name(cs.gs) << " k=" << k;
      EXPECT_EQ(e.unitary, controlled_on(cs.u, ctrls, ts, k + nt)) << gateset_name(cs.gs) << " k=" << k;
    }
  }
}

TEST(ControlExtend, CCZ) {
  Circuit c = control_extend(BaseGate::Z, 2, GateSetTag::INT);
  RingMatrix ccz = RingMatrix::identity(8);
  ccz(7, 7) = -1;
  EXPECT_EQ(evaluate(c).unitary, ccz);
}

TEST(LowerGenerator, MatchesEmbedding) {
  std::mt19937_64 rng(77);
  for (GateSetTag gs : kAllGateSets) {
    for (GenKind k : kAllKinds) {
      if (!generator_supported(k, gs)) continue;
      for (int n = 1; n <= 3; ++n) {
        const size_t dim = size_t{1} << n;
        if (gen_arity(k) > dim) continue;
        for (int t = 0; t < 3; ++t) {
          int ex = gen_has_exponent(k) ? 1 + static_cast<int>(rng() % 3) : 1;
          MultiLevelOp op = make_op(k, distinct_levels(gen_arity(k), dim, rng), dim, ex);
          Circuit c = lower_generator(op, gs, AncillaMode::OneClean);
          EXPECT_TRUE(circuit_in_gateset(c, gs)) << format_op(op) << " " << gateset_name(gs);
          auto e = evaluate(c);
          EXPECT_TRUE(e.ancilla_ok) << format_op(op) << " " << gateset_name(gs);
          EXPECT_EQ(e.unitary, embed(op)) << format_op(op) << " " << gateset_name(gs);
        }
      }
    }
  }
}

TEST(LowerGenerator, RejectsForeignGenerators) {
  EXPECT_THROW(lower_generator(make_op(GenKind::F2, {1, 2}, 4), GateSetTag::INT, AncillaMode::OneClean),
               UnsupportedError);
  EXPECT_THROW(lower_generator(make_op(GenKind::H2, {1, 2}, 4), GateSetTag::GAUSS, AncillaMode::OneClean),
               UnsupportedError);
}

TEST(LowerGenerator, AncillaFree) {
  std::mt19937_64 rng(78);
  const size_t dim = 16;
  for (GateSetTag gs : {GateSetTag::IMAG, GateSetTag::GAUSS}) {
    for (GenKind k : kAllKinds) {
      if (!generator_supported(k, gs) || k == GenKind::NEG1 || k == GenKind::X2 || k == GenKind::F2 ||
          k == GenKind::I4 || k == GenKind::WH2)
        continue;
      for (int t = 0; t < 2; ++t) {
        int ex = gen_has_exponent(k) ? 1 + static_cast<int>(rng() % 3) : 1;
        MultiLevelOp op = make_op(k, distinct_levels(gen_arity(k), dim, rng), dim, ex);
        Circuit c = lower_generator_ancillafree(op, gs);
        EXPECT_EQ(c.n_ancilla, 0);
        EXPECT_TRUE(circuit_in_gateset(c, gs)) << format_op(op);
        EXPECT_EQ(evaluate(c).unitary, embed(op)) << format_op(op);
      }
    }
  }
  EXPECT_THROW(lower_generator_ancillafree(make_op(GenKind::X2, {1, 2}, 16), GateSetTag::INT), UnsupportedError);
}

TEST(LowerWord, Examples) {
  GeneratorWord empty{4, {}};
  EXPECT_TRUE(lower_word(empty, GateSetTag::INT, AncillaMode::OneClean).gates.empty());

  GeneratorWord x{4, {make_op(GenKind::X2, {1, 2}, 4)}};
  Circuit c = lower_word(x, GateSetTag::INT, AncillaMode::OneClean);
  EXPECT_EQ(evaluate(c).unitary, embed(x.ops[0]));

  RingMatrix ch = gate_kernel(GateKind::CH);
  auto r = synth_real(ch);
  Circuit d = lower_synthesis(r.word, GateSetTag::REAL, AncillaMode::OneClean);
  EXPECT_TRUE(circuit_in_gateset(d, GateSetTag::REAL));
  EXPECT_EQ(evaluate(d).unitary, ch);
  // lower_word builds the word product, the inverse of the input
  EXPECT_EQ(evaluate(lower_word(r.word, GateSetTag::REAL, AncillaMode::OneClean)).unitary, dagger(ch));
}

TEST(Legalize, MergesAndRewrites) {
  Circuit c;
  c.n_data = 1;
  for (int i = 0; i < 4; ++i) c.add(GateKind::S, {1});
  EXPECT_TRUE(legalize(c, GateSetTag::GAUSS).gates.empty());

  Circuit h;
  h.n_data = 2;
  h.add(GateKind::H, {1});
  h.add(GateKind::Z, {2});
  h.add(GateKind::CX, {1, 2});
  for (GateSetTag gs : {GateSetTag::IMAG, GateSetTag::GAUSS, GateSetTag::SUPGAUSS}) {
    Circuit l = legalize(h, gs);
    EXPECT_TRUE(circuit_in_gateset(l, gs)) << gateset_name(gs);
    EXPECT_EQ(evaluate(l).unitary, evaluate(h).unitary) << gateset_name(gs);
  }
  Circuit t;
  t.n_data = 1;
  t.add(GateKind::T, {1});
  EXPECT_THROW(legalize(t, GateSetTag::SUPGAUSS), UnsupportedError);
}
