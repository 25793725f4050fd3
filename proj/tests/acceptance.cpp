// Acceptance run: one PASS/FAIL line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ringsynth/circuit.hpp"
#include "ringsynth/errors.hpp"
#include "ringsynth/identities.hpp"
#include "ringsynth/lowering.hpp"
#include "ringsynth/random.hpp"
#include "ringsynth/selftest.hpp"
#include "ringsynth/synth.hpp"

using namespace ringsynth;

namespace {

// wall-clock budgets, seconds
constexpr double kBudget1 = 60;
constexpr double kBudget2 = 120;
constexpr double kBudget3 = 120;
constexpr double kBudget4 = 10;
constexpr double kBudget5 = 30;
constexpr double kBudget6 = 60;
constexpr double kBudget7 = 10;

constexpr int kWordsPerSet = 100;
constexpr int kMaxLen = 30;
constexpr int kLoweredPerSet = 25;
constexpr int kAncillaFreePerSet = 25;
constexpr int kRejectedPerSet = 5;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<ColumnTrace> g_traces;

// G_1 ... G_l built from the embedded matrices one at a time
RingMatrix product_of_embeds(const GeneratorWord& w) {
  RingMatrix p = RingMatrix::identity(w.dim);
  for (const auto& op : w.ops) p = multiply_serial(p, embed(op));
  return p;
}

std::string instance(GateSetTag gs, int n, int len, uint64_t seed) {
  return std::string(gateset_name(gs)) + " n=" + std::to_string(n) + " len=" + std::to_string(len) +
         " seed=" + std::to_string(seed);
}

// the W/rt2^q forms generate D[rt2] and D[w] as rings
RingTag as_ring(RingTag t) {
  if (t == RingTag::Z_over_sqrt2) return RingTag::Dsqrt2;
  if (t == RingTag::Zi_over_sqrt2) return RingTag::Domega;
  return t;
}

Outcome roundtrip_synthesis() {
  Outcome o;
  std::mt19937_64 rng(101);
  int count = 0;
  for (GateSetTag gs : kAllGateSets) {
    for (int i = 0; i < kWordsPerSet; ++i) {
      const int n = 1 + i % 3;
      const int len = 1 + static_cast<int>(rng() % kMaxLen);
      const uint64_t seed = rng();
      const std::string id = instance(gs, n, len, seed);
      try {
        RingMatrix m = random_matrix(gs, n, len, seed);
        if (!matrix_in(m, gateset_ring(gs)) || !tag_leq(as_ring(classify_matrix(m)), as_ring(gateset_ring(gs)))) {
          o.fail("classification outside the gate set ring: " + id);
          continue;
        }
        SynthResult r = synthesize({m, gs, AncillaPolicy::AllowOne});
        if (!(product_of_embeds(r.word) * m == RingMatrix::identity(m.rows()))) o.fail("word product mismatch: " + id);
        g_traces.insert(g_traces.end(), r.trace.begin(), r.trace.end());
        ++count;
      } catch (const std::exception& e) {
        o.fail(id + ": " + e.what());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " words";
  return o;
}

Outcome lowered_roundtrip() {
  Outcome o;
  std::mt19937_64 rng(202);
  size_t gates = 0;
  int count = 0;
  for (GateSetTag gs : kAllGateSets) {
    for (int i = 0; i < kLoweredPerSet; ++i) {
      const int n = 2 + i % 2;
      const int len = 1 + static_cast<int>(rng() % kMaxLen);
      const uint64_t seed = rng();
      const std::string id = instance(gs, n, len, seed);
      try {
        RingMatrix m = random_matrix(gs, n, len, seed);
        SynthResult r = synthesize({m, gs, AncillaPolicy::AllowOne});
        Circuit c = lower_synthesis(r.word, gs, AncillaMode::OneClean);
        if (!circuit_in_gateset(c, gs)) o.fail("gate outside the set: " + id);
        if (c.n_data != n || c.n_ancilla > 1) o.fail("more than one ancilla: " + id);
        Evaluation e = evaluate(c);
        if (!e.ancilla_ok) o.fail("clean ancilla not restored: " + id + ": " + e.diagnostic);
        if (!(e.unitary == m)) o.fail("lowered circuit differs from input: " + id);
        gates += c.gates.size();
        ++count;
      } catch (const std::exception& e) {
        o.fail(id + ": " + e.what());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " circuits, " + std::to_string(gates) + " gates";
  return o;
}

Outcome ancilla_free() {
  Outcome o;
  std::mt19937_64 rng(303);
  const int n = 4;
  int accepted = 0, rejected = 0;
  size_t gates = 0;
  for (GateSetTag gs : {GateSetTag::IMAG, GateSetTag::GAUSS}) {
    for (int i = 0; i < kAncillaFreePerSet; ++i) {
      const int len = 1 + static_cast<int>(rng() % kMaxLen);
      const uint64_t seed = rng();
      const std::string id = instance(gs, n, len, seed);
      try {
        RingMatrix m = random_matrix(gs, n, len, seed);
        if (!(det_exact(m) == RingScalar(1))) {
          o.fail("random word does not have det 1: " + id);
          continue;
        }
        SynthResult r = synthesize({m, gs, AncillaPolicy::AncillaFree});
        if (!r.ancilla_free) o.fail("result not marked ancilla-free: " + id);
        if (!(product_of_embeds(r.word) * m == RingMatrix::identity(m.rows()))) o.fail("word product mismatch: " + id);
        g_traces.insert(g_traces.end(), r.trace.begin(), r.trace.end());
        Circuit c = lower_synthesis(r.word, gs, AncillaMode::None);
        if (c.n_ancilla != 0) o.fail("ancilla-free lowering uses an ancilla: " + id);
        if (!circuit_in_gateset(c, gs)) o.fail("gate outside the set: " + id);
        if (!(evaluate(c).unitary == m)) o.fail("lowered circuit differs from input: " + id);
        gates += c.gates.size();
        ++accepted;
      } catch (const std::exception& e) {
        o.fail(id + ": " + e.what());
      }
    }
    for (int i = 0; i < kRejectedPerSet; ++i) {
      const int len = 1 + static_cast<int>(rng() % kMaxLen);
      const uint64_t seed = rng();
      const std::string id = instance(gs, n, len, seed) + " with a -1 level";
      RingMatrix m = random_matrix(gs, n, len, seed);
      m = embed(make_op(GenKind::NEG1, {1 + static_cast<int>(rng() % 16)}, 16)) * m;
      if (det_exact(m) == RingScalar(1)) {
        o.fail("det unexpectedly 1: " + id);
        continue;
      }
      try {
        synthesize({m, gs, AncillaPolicy::AncillaFree});
        o.fail("det != 1 accepted: " + id);
      } catch (const UnsupportedError&) {
        ++rejected;
      } catch (const std::exception& e) {
        o.fail(id + ": wrong error: " + e.what());
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(accepted) + " synthesized and lowered (" + std::to_string(gates) + " gates), " +
               std::to_string(rejected) + " rejected";
  return o;
}

Outcome from_checks(const std::vector<SelfCheck>& checks) {
  Outcome o;
  for (const auto& c : checks)
    if (!c.pass) o.fail(c.name + ": " + c.detail);
  if (o.pass) o.detail = std::to_string(checks.size()) + " checks";
  return o;
}

Outcome lemma_oracles() {
  auto checks = residue_checks();
  auto more = lemma_checks();
  checks.insert(checks.end(), more.begin(), more.end());
  return from_checks(checks);
}

Outcome identities() {
  Outcome o;
  auto checks = run_identity_suite();
  for (const auto& c : checks)
    if (!c.pass) o.fail(c.name + " at width " + std::to_string(c.width) + ": " + c.detail);
  if (o.pass) o.detail = std::to_string(checks.size()) + " identities";
  return o;
}

bool integral_at(const RingMatrix& m, unsigned q) {
  for (const auto& x : m.data()) {
    if (x.k() > q) return false;
    if (!in_ring(x.numerator_at(q), IntRing::Z)) return false;
  }
  return true;
}

// least q with rt2^q m integral over Z, found by direct scan
std::optional<unsigned> least_integral_exponent(const RingMatrix& m, unsigned limit) {
  for (unsigned q = 0; q <= limit; ++q)
    if (integral_at(m, q)) return q;
  return std::nullopt;
}

RingMatrix direct_sum_one(const RingMatrix& m) {
  RingMatrix r(m.rows() + 1, m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  r(m.rows(), m.cols()) = 1;
  return r;
}

RingMatrix random_odd_word(size_t dim, int len, std::mt19937_64& rng) {
  GeneratorWord w{dim, {}};
  for (int i = 0; i < len; ++i) {
    auto lvl = [&](std::vector<int> taken) {
      for (;;) {
        int l = 1 + static_cast<int>(rng() % dim);
        bool fresh = true;
        for (int t : taken) fresh = fresh && t != l;
        if (fresh) return l;
      }
    };
    switch (rng() % 3) {
      case 0: w.ops.push_back(make_op(GenKind::NEG1, {lvl({})}, dim)); break;
      case 1: {
        int a = lvl({}), b = lvl({a});
        w.ops.push_back(make_op(GenKind::X2, {a, b}, dim));
        break;
      }
      default: {
        int a = lvl({}), b = lvl({a}), c = lvl({a, b}), d = lvl({a, b, c});
        w.ops.push_back(make_op(GenKind::HH4, {a, b, c, d}, dim));
      }
    }
  }
  return word_product(w);
}

Outcome parity() {
  Outcome o;
  std::mt19937_64 rng(606);
  int odd_dim = 0, even_odd_lde = 0, parity_checked = 0;
  auto check = [&](const RingMatrix& m, const std::string& id) {
    auto q = least_integral_exponent(m, 4 * static_cast<unsigned>(m.max_k()) + 4);
    if (!q) {
      o.fail("no integral representation: " + id);
      return;
    }
    if (*q != lde(m, DenomBase::Sqrt2, IntRing::Z)) o.fail("lde disagrees with direct scan: " + id);
    if (m.rows() % 2 == 1) {
      ++odd_dim;
      if (*q % 2 == 1) o.fail("odd dimension with odd lde: " + id);
    } else if (*q % 2 == 1) {
      ++even_odd_lde;
    }
    // every representation shares the parity of the least one
    for (unsigned p = *q; p < *q + 6; ++p) {
      bool integral = integral_at(m, p);
      if (integral != ((p - *q) % 2 == 0)) o.fail("exponent " + std::to_string(p) + " breaks parity: " + id);
    }
    ++parity_checked;
  };
  for (int i = 0; i < 3 * kWordsPerSet; ++i) {
    const int n = 1 + i % 3;
    const int len = 1 + static_cast<int>(rng() % kMaxLen);
    const uint64_t seed = rng();
    const std::string id = instance(GateSetTag::SUPINT, n, len, seed);
    RingMatrix m = random_matrix(GateSetTag::SUPINT, n, len, seed);
    check(m, id);
    // an odd block admits no integral form, so the direct sum must have none
    RingMatrix ext = direct_sum_one(m);
    if (lde(m, DenomBase::Sqrt2, IntRing::Z) % 2 == 0)
      check(ext, id + " (+) 1");
    else if (least_integral_exponent(ext, 4 * ext.max_k() + 4))
      o.fail("odd-dimensional direct sum with odd lde: " + id);
  }
  for (size_t dim : {5, 7, 9}) {
    for (int i = 0; i < 50; ++i) {
      const int len = 1 + static_cast<int>(rng() % kMaxLen);
      check(random_odd_word(dim, len, rng), "word dim=" + std::to_string(dim) + " #" + std::to_string(i));
    }
  }
  if (o.pass)
    o.detail = std::to_string(parity_checked) + " matrices, " + std::to_string(odd_dim) + " odd-dimensional, " +
               std::to_string(even_odd_lde) + " even-dimensional with odd lde";
  if (o.pass && even_odd_lde == 0) o.fail("no odd lde instance drawn");
  return o;
}

Outcome strict_descent() {
  Outcome o;
  size_t passes = 0;
  for (const auto& t : g_traces) {
    if (t.lde.empty() || t.lde.back() != 0) o.fail("trace of column " + std::to_string(t.column) + " does not end at 0");
    for (size_t i = 1; i < t.lde.size(); ++i)
      if (t.lde[i] >= t.lde[i - 1])
        o.fail("column " + std::to_string(t.column) + ": lde " + std::to_string(t.lde[i - 1]) + " then " +
               std::to_string(t.lde[i]));
    passes += t.lde.size() > 0 ? t.lde.size() - 1 : 0;
  }
  if (o.pass && g_traces.empty()) o.fail("no traces collected");
  if (o.pass) o.detail = std::to_string(g_traces.size()) + " column traces, " + std::to_string(passes) + " passes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "round-trip synthesis, all gate sets", kBudget1, roundtrip_synthesis},
      {2, "lowered circuits with one clean ancilla", kBudget2, lowered_roundtrip},
      {3, "ancilla-free synthesis at n=4", kBudget3, ancilla_free},
      {4, "residue tables and lemma oracles", kBudget4, lemma_oracles},
      {5, "circuit identities", kBudget5, identities},
      {6, "lde parity", kBudget6, parity},
      {7, "strict lde descent", kBudget7, strict_descent},
  };
  bool ok = true;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > c.budget) o.fail("over budget");
    ok = ok && o.pass;
    std::printf("criterion %d %s: %s (%s; %.2f s of %.0f s)\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                secs, c.budget);
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
