#include <algorithm>

#include "ringsynth/synth.hpp"
#include "synth_engine.hpp"

namespace ringsynth {

// ---- gate set tags

std::string_view gateset_name(GateSetTag g) {
  switch (g) {
    case GateSetTag::INT: return "int";
    case GateSetTag::SUPINT: return "supint";
    case GateSetTag::REAL: return "real";
    case GateSetTag::IMAG: return "imag";
    case GateSetTag::GAUSS: return "gauss";
    case GateSetTag::SUPGAUSS: return "supgauss";
  }
  return "?";
}

std::optional<GateSetTag> parse_gateset(std::string_view s) {
  for (GateSetTag g : kAllGateSets)
    if (gateset_name(g) == s) return g;
  return std::nullopt;
}

RingTag gateset_ring(GateSetTag g) {
  switch (g) {
    case GateSetTag::INT: return RingTag::D;
    case GateSetTag::SUPINT: return RingTag::Z_over_sqrt2;
    case GateSetTag::REAL: return RingTag::Dsqrt2;
    case GateSetTag::IMAG: return RingTag::Disqrt2;
    case GateSetTag::GAUSS: return RingTag::Di;
    case GateSetTag::SUPGAUSS: return RingTag::Zi_over_sqrt2;
  }
  return RingTag::Domega;
}

std::optional<GateSetTag> minimal_gateset(RingTag t) {
  switch (t) {
    case RingTag::Z:
    case RingTag::D: return GateSetTag::INT;
    case RingTag::Z_over_sqrt2: return GateSetTag::SUPINT;
    case RingTag::Zsqrt2:
    case RingTag::Dsqrt2: return GateSetTag::REAL;
    case RingTag::Zisqrt2:
    case RingTag::Disqrt2: return GateSetTag::IMAG;
    case RingTag::Zi:
    case RingTag::Di: return GateSetTag::GAUSS;
    case RingTag::Zi_over_sqrt2: return GateSetTag::SUPGAUSS;
    default: return std::nullopt;
  }
}

std::string gateset_listing(GateSetTag g) {
  switch (g) {
    case GateSetTag::INT: return "{X,CX,CCX,HH}";
    case GateSetTag::SUPINT: return "{X,CX,CCX,H}";
    case GateSetTag::REAL: return "{X,CX,CCX,H,CH}";
    case GateSetTag::IMAG: return "{X,CX,CCX,F}";
    case GateSetTag::GAUSS: return "{X,CX,CCX,WH,S}";
    case GateSetTag::SUPGAUSS: return "{X,CX,CCX,H,S}";
  }
  return "{}";
}

// ---- lemmas

namespace {

std::vector<RingScalar> kmul(const RingMatrix& K, const std::vector<RingScalar>& v) {
  std::vector<RingScalar> out(K.rows());
  for (size_t r = 0; r < K.rows(); ++r)
    for (size_t c = 0; c < K.cols(); ++c)
      if (!K(r, c).is_zero() && !v[c].is_zero()) out[r] += K(r, c) * v[c];
  return out;
}

std::optional<RingInt> integral_in(const RingScalar& x, IntRing r) {
  if (x.k() != 0 || !in_ring(x.num(), r)) return std::nullopt;
  return x.num();
}

// x0 even for Z[rt2]/Z[i rt2]; a + b even for Z[i]; even for Z
bool divisible_by_base(const RingInt& u, IntRing r) {
  auto c = quadratic_coords(u, r);
  if (r == IntRing::Zi) return mpz_even_p(Integer(c[0] + c[1]).get_mpz_t());
  return mpz_even_p(c[0].get_mpz_t());
}

bool is_odd_integer(const RingInt& u) { return in_ring(u, IntRing::Z) && mpz_odd_p(u[0].get_mpz_t()); }

RingMatrix build_prefix(const std::array<int, 4>& m) {
  RingMatrix p = RingMatrix::identity(2);
  RingMatrix f = kernel(GenKind::F2);
  for (int i = 0; i < m[0]; ++i) p = p * f;
  RingMatrix d = RingMatrix::from_rows({{m[1] ? -1 : 1, 0}, {0, m[2] ? -1 : 1}});
  p = p * d;
  if (m[3]) p = p * kernel(GenKind::X2);
  return p;
}

const RingMatrix& imaginary_prefix(const std::array<int, 4>& m) {
  static const auto table = [] {
    std::array<RingMatrix, 32> t;
    for (int i = 0; i < 32; ++i) t[i] = build_prefix({i >> 3, (i >> 2) & 1, (i >> 1) & 1, i & 1});
    return t;
  }();
  return table[(m[0] & 3) * 8 + m[1] * 4 + m[2] * 2 + m[3]];
}

}  // namespace

QuadrupleReduction reduce_quadruple_integral(const std::array<RingInt, 4>& u) {
  QuadrupleReduction r{};
  std::vector<RingScalar> v(4);
  for (int k = 0; k < 4; ++k) {
    if (!is_odd_integer(u[k]))
      throw InvariantError("reduce_quadruple_integral: entry " + format_ringint(u[k]) + " is not an odd integer");
    Integer md;
    mpz_fdiv_r_ui(md.get_mpz_t(), u[k][0].get_mpz_t(), 4);
    r.m[k] = md == 3 ? 1 : 0;
    v[k] = r.m[k] ? RingScalar(-u[k]) : RingScalar(u[k]);
  }
  auto out = kmul(kernel(GenKind::HH4), v);
  for (int k = 0; k < 4; ++k) {
    auto x = integral_in(out[k], IntRing::Z);
    if (!x || !divisible_by_base(*x, IntRing::Z)) throw InvariantError("reduce_quadruple_integral: output not even");
    r.out[k] = *x;
  }
  return r;
}

std::array<RingInt, 2> reduce_pair_real(const RingInt& u1, const RingInt& u2) {
  if (!(residue(u1, Modulus::Two_Zsqrt2) == residue(u2, Modulus::Two_Zsqrt2)))
    throw InvariantError("reduce_pair_real: entries not congruent mod 2");
  auto out = kmul(kernel(GenKind::H2), {RingScalar(u1), RingScalar(u2)});
  std::array<RingInt, 2> r;
  for (int k = 0; k < 2; ++k) {
    auto x = integral_in(out[k], IntRing::Zsqrt2);
    if (!x || !divisible_by_base(*x, IntRing::Zsqrt2)) throw InvariantError("reduce_pair_real: output not divisible");
    r[k] = *x;
  }
  return r;
}

std::optional<std::array<RingInt, 2>> imaginary_prefix_image(const std::array<int, 4>& m, const RingInt& u1,
                                                             const RingInt& u2) {
  auto out = kmul(imaginary_prefix(m), {RingScalar(u1), RingScalar(u2)});
  std::array<RingInt, 2> r;
  for (int k = 0; k < 2; ++k) {
    auto x = integral_in(out[k], IntRing::Zisqrt2);
    if (!x || !divisible_by_base(*x, IntRing::Zisqrt2)) return std::nullopt;
    r[k] = *x;
  }
  return r;
}

ImaginaryPairReduction reduce_pair_imaginary(const RingInt& u1, const RingInt& u2) {
  if (!residue_facts(u1, IntRing::Zisqrt2).odd_norm || !residue_facts(u2, IntRing::Zisqrt2).odd_norm)
    throw InvariantError("reduce_pair_imaginary: entries need odd norm");
  for (int m0 = 0; m0 < 4; ++m0)
    for (int m1 = 0; m1 < 2; ++m1)
      for (int m2 = 0; m2 < 2; ++m2)
        for (int m3 = 0; m3 < 2; ++m3) {
          std::array<int, 4> m{m0, m1, m2, m3};
          if (auto img = imaginary_prefix_image(m, u1, u2)) return {m, *img};
        }
  throw InvariantError("reduce_pair_imaginary: no prefix reduces the pair");
}

GaussianPairReduction reduce_pair_gaussian(const RingInt& u1, const RingInt& u2) {
  GaussianPairReduction r{};
  std::vector<RingScalar> v(2);
  const RingInt* u[2] = {&u1, &u2};
  for (int k = 0; k < 2; ++k) {
    auto f = residue_facts(*u[k], IntRing::Zi);
    if (!f.phase_to_one) throw InvariantError("reduce_pair_gaussian: entry square not 1 mod 2");
    r.m[k] = *f.phase_to_one ? 3 : 0;
    v[k] = RingScalar(u[k]->times_omega(2 * r.m[k]));
  }
  auto out = kmul(kernel(GenKind::WH2), v);
  for (int k = 0; k < 2; ++k) {
    auto x = integral_in(out[k], IntRing::Zi);
    if (!x || !divisible_by_base(*x, IntRing::Zi)) throw InvariantError("reduce_pair_gaussian: output not divisible");
    r.out[k] = *x;
  }
  return r;
}

// ---- engine

namespace detail {

void Engine::apply(const MultiLevelOp& op, size_t from_col) {
  apply_left(op, m_, from_col);
  applied_.push_back(op);
}

void Engine::reduce_column(size_t col, size_t target, const PassFn& pass, const BaseFn& base) {
  const size_t n = dim();
  ColumnTrace t{col + 1, base_, {}};
  std::vector<RingScalar> v = m_.column(col);
  unsigned q = lde(v, base_, ring_);
  t.lde.push_back(q);
  while (q > 0) {
    RingInt p = 1;
    for (unsigned i = 0; i < q; ++i) p *= base_value(base_);
    std::vector<RingInt> u(n);
    for (size_t r = 0; r < n; ++r) {
      RingScalar y(v[r].num() * p, v[r].k());
      if (y.k() != 0) throw InvariantError("column scaling left a denominator");
      u[r] = y.num();
    }
    for (const auto& op : pass(u, n, m_, col)) apply(op, col);
    v = m_.column(col);
    unsigned q2 = lde(v, base_, ring_);
    if (q2 >= q)
      throw InvariantError("lde did not decrease in column " + std::to_string(col + 1) + ": " + std::to_string(q) +
                           " -> " + std::to_string(q2));
    q = q2;
    t.lde.push_back(q);
  }
  size_t row = n;
  for (size_t r = 0; r < n; ++r) {
    if (v[r].is_zero()) continue;
    if (row != n) throw InvariantError("integral unit column has two nonzero entries");
    row = r;
  }
  if (row == n) throw NotUnitaryError("zero column");
  for (const auto& op : base(target, row, v[row].num(), n)) apply(op, col);
  trace_.push_back(std::move(t));
}

void Engine::reduce_all(const PassFn& pass, const BaseFn& base) {
  for (size_t j = 0; j < dim(); ++j) reduce_column(j, j, pass, base);
}

std::vector<PairPick> pick_pairs(std::vector<size_t> rows, const RingMatrix& cur, size_t col,
                                 const PairOptions& options) {
  const size_t nc = cur.cols();
  auto cost = [&](size_t r1, size_t r2, const RingMatrix& k) {
    std::pair<unsigned, unsigned> c{0, 0};  // max, sum
    for (size_t j = col + 1; j < nc; ++j) {
      const RingScalar &a = cur(r1, j), &b = cur(r2, j);
      if (a.is_zero() && b.is_zero()) continue;
      for (size_t r = 0; r < 2; ++r) {
        // for entries of D[i rt2] the rt2 exponent is the i rt2 exponent
        unsigned q = (k(r, 0) * a + k(r, 1) * b).k();
        c.first = std::max(c.first, q);
        c.second += q;
      }
    }
    return c;
  };
  // costs do not change within a pass, the pairs touch disjoint rows
  struct Cand {
    std::pair<unsigned, unsigned> cost;
    size_t i, j, opt;
  };
  std::vector<Cand> cands;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j)
      for (const auto& [opt, k] : options(rows[i], rows[j])) cands.push_back({cost(rows[i], rows[j], k), i, j, opt});
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.cost < b.cost; });
  std::vector<bool> used(rows.size(), false);
  std::vector<PairPick> out;
  for (const auto& c : cands) {
    if (used[c.i] || used[c.j]) continue;
    used[c.i] = used[c.j] = true;
    out.push_back({rows[c.i], rows[c.j], c.opt});
  }
  if (out.size() * 2 != rows.size()) throw InvariantError("rows could not all be paired");
  return out;
}

GeneratorWord Engine::word() const {
  GeneratorWord w;
  w.dim = dim();
  w.ops.assign(applied_.rbegin(), applied_.rend());
  return w;
}

namespace {

std::vector<size_t> rows_where(const std::vector<RingInt>& u, const std::function<bool(const RingInt&)>& pred) {
  std::vector<size_t> rows;
  for (size_t r = 0; r < u.size(); ++r)
    if (!u[r].is_zero() && pred(u[r])) rows.push_back(r);
  return rows;
}

void require_multiple(size_t count, size_t m, const char* what) {
  if (count % m)
    throw InvariantError(std::string(what) + ": " + std::to_string(count) + " entries not a multiple of " +
                         std::to_string(m));
}

}  // namespace

PassFn integral_pass() {
  return [](const std::vector<RingInt>& u, size_t n, const RingMatrix&, size_t) {
    auto odd = rows_where(u, is_odd_integer);
    require_multiple(odd.size(), 4, "integral pass");
    std::vector<MultiLevelOp> ops;
    for (size_t g = 0; g < odd.size(); g += 4) {
      std::array<RingInt, 4> quad{u[odd[g]], u[odd[g + 1]], u[odd[g + 2]], u[odd[g + 3]]};
      auto red = reduce_quadruple_integral(quad);
      for (int k = 0; k < 4; ++k)
        if (red.m[k]) ops.push_back(make_op(GenKind::NEG1, {lvl(odd[g + k])}, n));
      ops.push_back(make_op(GenKind::HH4, {lvl(odd[g]), lvl(odd[g + 1]), lvl(odd[g + 2]), lvl(odd[g + 3])}, n));
    }
    return ops;
  };
}

PassFn real_pass() {
  return [](const std::vector<RingInt>& u, size_t n, const RingMatrix&, size_t) {
    std::vector<MultiLevelOp> ops;
    for (RingInt cls : {RingInt(1), RingInt(1) + RingInt::sqrt2()}) {
      auto rows = rows_where(u, [&](const RingInt& x) { return residue(x, Modulus::Two_Zsqrt2).rep == cls; });
      require_multiple(rows.size(), 2, "real pass");
      for (size_t g = 0; g < rows.size(); g += 2) {
        reduce_pair_real(u[rows[g]], u[rows[g + 1]]);
        ops.push_back(make_op(GenKind::H2, {lvl(rows[g]), lvl(rows[g + 1])}, n));
      }
    }
    return ops;
  };
}

PassFn imaginary_pass() {
  return [](const std::vector<RingInt>& u, size_t n, const RingMatrix& cur, size_t col) {
    auto rows = rows_where(u, [](const RingInt& x) { return residue_facts(x, IntRing::Zisqrt2).odd_norm; });
    require_multiple(rows.size(), 2, "imaginary pass");
    std::vector<std::array<int, 4>> prefixes;
    for (int m0 = 0; m0 < 4; ++m0)
      for (int m1 = 0; m1 < 2; ++m1)
        for (int m2 = 0; m2 < 2; ++m2)
          for (int m3 = 0; m3 < 2; ++m3) prefixes.push_back({m0, m1, m2, m3});
    auto options = [&](size_t r1, size_t r2) {
      std::vector<std::pair<size_t, RingMatrix>> o;
      for (size_t i = 0; i < prefixes.size(); ++i)
        if (imaginary_prefix_image(prefixes[i], u[r1], u[r2])) o.push_back({i, imaginary_prefix(prefixes[i])});
      return o;
    };
    std::vector<MultiLevelOp> ops;
    for (const auto& p : pick_pairs(rows, cur, col, options)) {
      int a = lvl(p.r1), b = lvl(p.r2);
      const auto& m = prefixes[p.option];
      if (m[3]) ops.push_back(make_op(GenKind::X2, {a, b}, n));
      if (m[1]) ops.push_back(make_op(GenKind::NEG1, {a}, n));
      if (m[2]) ops.push_back(make_op(GenKind::NEG1, {b}, n));
      for (int i = 0; i < m[0]; ++i) ops.push_back(make_op(GenKind::F2, {a, b}, n));
    }
    return ops;
  };
}

PassFn gaussian_pass() {
  return [](const std::vector<RingInt>& u, size_t n, const RingMatrix&, size_t) {
    auto rows = rows_where(u, [](const RingInt& x) { return !divisible_by_base(x, IntRing::Zi); });
    require_multiple(rows.size(), 2, "gaussian pass");
    std::vector<MultiLevelOp> ops;
    for (size_t g = 0; g < rows.size(); g += 2) {
      int a = lvl(rows[g]), b = lvl(rows[g + 1]);
      auto red = reduce_pair_gaussian(u[rows[g]], u[rows[g + 1]]);
      if (red.m[0]) ops.push_back(make_op(GenKind::I4, {a}, n, red.m[0]));
      if (red.m[1]) ops.push_back(make_op(GenKind::I4, {b}, n, red.m[1]));
      ops.push_back(make_op(GenKind::WH2, {a, b}, n));
    }
    return ops;
  };
}

BaseFn sign_base() {
  return [](size_t target, size_t row, const RingInt& unit, size_t n) {
    std::vector<MultiLevelOp> ops;
    if (unit == RingInt(-1))
      ops.push_back(make_op(GenKind::NEG1, {lvl(row)}, n));
    else if (!(unit == RingInt(1)))
      throw InvariantError("base case entry " + format_ringint(unit) + " is not +-1");
    if (row != target)
      ops.push_back(make_op(GenKind::X2, {lvl(std::min(row, target)), lvl(std::max(row, target))}, n));
    return ops;
  };
}

BaseFn phase_base() {
  return [](size_t target, size_t row, const RingInt& unit, size_t n) {
    std::vector<MultiLevelOp> ops;
    int m = -1;
    for (int k = 0; k < 4; ++k)
      if (unit == RingInt::omega_power(2 * k)) m = k;
    if (m < 0) throw InvariantError("base case entry " + format_ringint(unit) + " is not a power of i");
    if (m) ops.push_back(make_op(GenKind::I4, {lvl(row)}, n, (4 - m) % 4));
    if (row != target)
      ops.push_back(make_op(GenKind::X2, {lvl(std::min(row, target)), lvl(std::max(row, target))}, n));
    return ops;
  };
}

void require_square_unitary(const RingMatrix& v) {
  if (!v.square() || v.rows() == 0) throw DomainError("synthesis needs a nonempty square matrix");
  if (!is_unitary(v)) throw NotUnitaryError("input not unitary");
}

void require_ring(const RingMatrix& v, RingTag t, const char* who) {
  if (!matrix_in(v, t))
    throw UnsupportedError(std::string(who) + ": matrix entries are not in " + std::string(tag_name(t)));
}

namespace {

bool allowed(GenKind k, GateSetTag gs, bool af) {
  using G = GenKind;
  if (af) {
    if (gs == GateSetTag::IMAG) return k == G::XZ2 || k == G::ZX2 || k == G::FZ2 || k == G::ZF2 || k == G::Z2;
    return k == G::IZ2 || k == G::IX2 || k == G::WSH2 || k == G::WHS2;
  }
  switch (gs) {
    case GateSetTag::INT: return k == G::NEG1 || k == G::X2 || k == G::HH4;
    case GateSetTag::SUPINT: return k == G::NEG1 || k == G::X2 || k == G::HH4 || k == G::GLOBAL_IH;
    case GateSetTag::REAL: return k == G::NEG1 || k == G::X2 || k == G::H2;
    case GateSetTag::IMAG: return k == G::NEG1 || k == G::X2 || k == G::F2;
    case GateSetTag::GAUSS: return k == G::I4 || k == G::X2 || k == G::WH2;
    case GateSetTag::SUPGAUSS: return k == G::I4 || k == G::X2 || k == G::WH2 || k == G::GLOBAL_OMEGA;
  }
  return false;
}

}  // namespace

SynthResult finish(GateSetTag gs, bool af, const RingMatrix& input, Engine& e) {
  SynthResult r;
  r.gateset = gs;
  r.ancilla_free = af;
  r.word = e.word();
  for (const auto& op : r.word.ops)
    if (!allowed(op.kind, gs, af))
      throw InvariantError("generator " + format_op(op) + " outside the " + std::string(gateset_name(gs)) + " set");
  if (!(e.matrix() == RingMatrix::identity(e.dim()))) throw InvariantError("reduction did not reach the identity");
  r.certificate = word_product(r.word) * input;
  if (!(r.certificate == RingMatrix::identity(input.rows())))
    throw InvariantError("certificate: word product times input is not the identity");
  r.trace = std::move(e.trace());
  return r;
}

}  // namespace detail

using namespace detail;

GeneratorWord reduce_column_integral(const std::vector<RingScalar>& v, size_t j) {
  const size_t n = v.size();
  if (j < 1 || j > n) throw DomainError("reduce_column_integral: target out of range");
  RingScalar norm;
  for (const auto& x : v) norm += x.conj() * x;
  if (!(norm == RingScalar(1))) throw NotUnitaryError("reduce_column_integral: not a unit vector");
  RingMatrix m(n, 1);
  for (size_t r = 0; r < n; ++r) {
    if (!contains(RingTag::D, v[r])) throw UnsupportedError("reduce_column_integral: entry outside D");
    m(r, 0) = v[r];
  }
  Engine e(m, DenomBase::Two, IntRing::Z);
  e.reduce_column(0, j - 1, integral_pass(), sign_base());
  return e.word();
}

SynthResult synth_integral(const RingMatrix& v) {
  require_square_unitary(v);
  require_ring(v, RingTag::D, "synth_integral");
  Engine e(v, DenomBase::Two, IntRing::Z);
  e.reduce_all(integral_pass(), sign_base());
  return finish(GateSetTag::INT, false, v, e);
}

SynthResult synth_superintegral(const RingMatrix& v) {
  require_square_unitary(v);
  require_ring(v, RingTag::Z_over_sqrt2, "synth_superintegral");
  unsigned q = lde(v, DenomBase::Sqrt2, IntRing::Z);
  Engine e(v, DenomBase::Two, IntRing::Z);
  if (q % 2) {
    if (v.rows() % 2) throw NotUnitaryError("input not unitary: odd dimension with odd rt2-exponent");
    e.apply(make_op(GenKind::GLOBAL_IH, {}, v.rows()));
  }
  e.reduce_all(integral_pass(), sign_base());
  return finish(GateSetTag::SUPINT, false, v, e);
}

SynthResult synth_real(const RingMatrix& v) {
  require_square_unitary(v);
  require_ring(v, RingTag::Dsqrt2, "synth_real");
  Engine e(v, DenomBase::Sqrt2, IntRing::Zsqrt2);
  e.reduce_all(real_pass(), sign_base());
  return finish(GateSetTag::REAL, false, v, e);
}

SynthResult synth_imaginary(const RingMatrix& v) {
  require_square_unitary(v);
  require_ring(v, RingTag::Disqrt2, "synth_imaginary");
  Engine e(v, DenomBase::ISqrt2, IntRing::Zisqrt2);
  e.reduce_all(imaginary_pass(), sign_base());
  return finish(GateSetTag::IMAG, false, v, e);
}

SynthResult synth_gaussian(const RingMatrix& v) {
  require_square_unitary(v);
  require_ring(v, RingTag::Di, "synth_gaussian");
  Engine e(v, DenomBase::OnePlusI, IntRing::Zi);
  e.reduce_all(gaussian_pass(), phase_base());
  return finish(GateSetTag::GAUSS, false, v, e);
}

SynthResult synth_supergaussian(const RingMatrix& v) {
  require_square_unitary(v);
  require_ring(v, RingTag::Zi_over_sqrt2, "synth_supergaussian");
  unsigned q = lde(v, DenomBase::Sqrt2, IntRing::Zi);
  Engine e(v, DenomBase::OnePlusI, IntRing::Zi);
  if (q % 2) e.apply(make_op(GenKind::GLOBAL_OMEGA, {}, v.rows()));
  e.reduce_all(gaussian_pass(), phase_base());
  return finish(GateSetTag::SUPGAUSS, false, v, e);
}

namespace {

bool is_power_of_two(size_t n) { return n && (n & (n - 1)) == 0; }

}  // namespace

SynthResult synthesize(const SynthRequest& req) {
  const RingMatrix& v = req.matrix;
  require_square_unitary(v);
  RingTag tag = classify_matrix(v);
  GateSetTag gs;
  if (req.gateset) {
    gs = *req.gateset;
    if (!matrix_in(v, gateset_ring(gs)))
      throw UnsupportedError("matrix (" + std::string(tag_name(tag)) + ") is not over the ring of gate set " +
                             std::string(gateset_name(gs)));
  } else {
    auto m = minimal_gateset(tag);
    if (!m) throw UnsupportedError("unsupported ring: use Giles-Selinger");
    gs = *m;
  }
  bool af = req.policy == AncillaPolicy::AncillaFree;
  if (af && gs != GateSetTag::IMAG && gs != GateSetTag::GAUSS)
    throw UnsupportedError("ancilla-free synthesis is only available for the imag and gauss gate sets");
  if (af && v.rows() >= kAncillaFreeMinDim) {
    if (!is_power_of_two(v.rows())) throw UnsupportedError("ancilla-free synthesis needs dimension 2^n");
    if (!(det_exact(v) == RingScalar(1)))
      throw UnsupportedError("not ancilla-free representable: det V = " + format_scalar(det_exact(v)));
    return gs == GateSetTag::IMAG ? synth_imaginary_ancillafree(v) : synth_gaussian_ancillafree(v);
  }
  switch (gs) {
    case GateSetTag::INT: return synth_integral(v);
    case GateSetTag::SUPINT: return synth_superintegral(v);
    case GateSetTag::REAL: return synth_real(v);
    case GateSetTag::IMAG: return synth_imaginary(v);
    case GateSetTag::GAUSS: return synth_gaussian(v);
    case GateSetTag::SUPGAUSS: return synth_supergaussian(v);
  }
  throw UnsupportedError("unknown gate set");
}

}  // namespace ringsynth
