#include "ringsynth/synth.hpp"
#include "synth_engine.hpp"

namespace ringsynth {

using namespace detail;

namespace {

struct Rewrite {
  std::array<int, 4> m;
  std::vector<GenKind> written;
};

// F^m0 (-1)_[1]^m1 (-1)_[2]^m2 X^m3 -> determinant-one two-level ops, lexicographic in m
const std::vector<Rewrite>& imaginary_table() {
  using G = GenKind;
  static const std::vector<Rewrite> t = {
      {{1, 0, 0, 1}, {G::FZ2, G::ZX2}},         {{1, 0, 1, 0}, {G::FZ2}},
      {{1, 0, 1, 1}, {G::ZF2, G::ZX2}},         {{1, 1, 0, 0}, {G::FZ2, G::XZ2, G::XZ2}},
      {{1, 1, 0, 1}, {G::ZF2, G::XZ2}},         {{1, 1, 1, 0}, {G::ZF2, G::XZ2, G::XZ2}},
      {{1, 1, 1, 1}, {G::FZ2, G::XZ2}},         {{2, 0, 0, 0}, {G::FZ2, G::ZF2}},
  };
  return t;
}

void emit_written(std::vector<MultiLevelOp>& ops, const std::vector<GenKind>& written, int a, int b, size_t n) {
  for (auto it = written.rbegin(); it != written.rend(); ++it) ops.push_back(make_op(*it, {a, b}, n));
}

std::vector<size_t> odd_rows(const std::vector<RingInt>& u, IntRing r) {
  std::vector<size_t> rows;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    auto c = quadratic_coords(u[i], r);
    Integer s = r == IntRing::Zi ? Integer(c[0] + c[1]) : c[0];
    if (mpz_odd_p(s.get_mpz_t())) rows.push_back(i);
  }
  if (rows.size() % 2) throw InvariantError("ancilla-free pass: odd number of odd entries");
  return rows;
}

RingMatrix written_product(const std::vector<GenKind>& written) {
  RingMatrix p = RingMatrix::identity(2);
  for (GenKind k : written) p = p * kernel(k);
  return p;
}

PassFn imaginary_af_pass() {
  return [](const std::vector<RingInt>& u, size_t n, const RingMatrix& cur, size_t col) {
    const auto& table = imaginary_table();
    static const std::vector<RingMatrix> kernels = [] {
      std::vector<RingMatrix> k;
      for (const auto& rw : imaginary_table()) k.push_back(written_product(rw.written));
      return k;
    }();
    auto options = [&](size_t r1, size_t r2) {
      std::vector<std::pair<size_t, RingMatrix>> o;
      for (size_t i = 0; i < table.size(); ++i)
        if (imaginary_prefix_image(table[i].m, u[r1], u[r2])) o.push_back({i, kernels[i]});
      return o;
    };
    std::vector<MultiLevelOp> ops;
    auto rows = odd_rows(u, IntRing::Zisqrt2);
    for (const auto& p : pick_pairs(rows, cur, col, options))
      emit_written(ops, table[p.option].written, lvl(p.r1), lvl(p.r2), n);
    return ops;
  };
}

PassFn gaussian_af_pass() {
  return [](const std::vector<RingInt>& u, size_t n, const RingMatrix&, size_t) {
    using G = GenKind;
    std::vector<MultiLevelOp> ops;
    auto rows = odd_rows(u, IntRing::Zi);
    for (size_t g = 0; g < rows.size(); g += 2) {
      int m1 = residue_facts(u[rows[g]], IntRing::Zi).phase_to_one.value();
      int m2 = residue_facts(u[rows[g + 1]], IntRing::Zi).phase_to_one.value();
      std::vector<G> written;
      if (!m1 && !m2) written = {G::WSH2};
      if (!m1 && m2) written = {G::WHS2};
      if (m1 && !m2) written = {G::WHS2, G::IZ2};
      if (m1 && m2) written = {G::WSH2, G::IZ2};
      emit_written(ops, written, lvl(rows[g]), lvl(rows[g + 1]), n);
    }
    return ops;
  };
}

BaseFn swap_base(GenKind k) {
  return [k](size_t target, size_t row, const RingInt&, size_t n) {
    std::vector<MultiLevelOp> ops;
    if (row < target) throw InvariantError("ancilla-free base case below target");
    if (row != target) ops.push_back(make_op(k, {lvl(target), lvl(row)}, n));
    return ops;
  };
}

void require_af_input(const RingMatrix& v, RingTag ring, const char* who) {
  require_square_unitary(v);
  require_ring(v, ring, who);
  size_t n = v.rows();
  if (n < kAncillaFreeMinDim || (n & (n - 1)))
    throw UnsupportedError(std::string(who) + ": needs dimension 2^n with n >= 4");
  if (!(det_exact(v) == RingScalar(1))) throw UnsupportedError("not ancilla-free representable: det V != 1");
}

}  // namespace

SynthResult synth_imaginary_ancillafree(const RingMatrix& v) {
  require_af_input(v, RingTag::Disqrt2, "synth_imaginary_ancillafree");
  Engine e(v, DenomBase::ISqrt2, IntRing::Zisqrt2);
  e.reduce_all(imaginary_af_pass(), swap_base(GenKind::ZX2));
  // +-1 diagonal left; pair the -1 entries
  const size_t n = e.dim();
  std::vector<size_t> neg;
  for (size_t r = 0; r < n; ++r)
    if (e.matrix()(r, r) == RingScalar(-1)) neg.push_back(r);
  if (neg.size() % 2) throw InvariantError("odd number of -1 entries with det 1");
  for (size_t g = 0; g < neg.size(); g += 2) {
    size_t p = neg[g], q = neg[g + 1];
    std::vector<size_t> free;
    for (size_t r = 0; free.size() < 2; ++r)
      if (r != p && r != q) free.push_back(r);
    e.apply(make_op(GenKind::Z2, {lvl(free[0]), lvl(p), lvl(free[1]), lvl(q)}, n));
  }
  return finish(GateSetTag::IMAG, true, v, e);
}

SynthResult synth_gaussian_ancillafree(const RingMatrix& v) {
  require_af_input(v, RingTag::Di, "synth_gaussian_ancillafree");
  Engine e(v, DenomBase::OnePlusI, IntRing::Zi);
  e.reduce_all(gaussian_af_pass(), swap_base(GenKind::IX2));
  // diagonal i^m_j left; telescoping iZ removes all but det
  const size_t n = e.dim();
  std::vector<int> m(n, -1);
  for (size_t r = 0; r < n; ++r)
    for (int k = 0; k < 4; ++k)
      if (e.matrix()(r, r) == RingScalar::omega_power(2 * k)) m[r] = k;
  int acc = 0;
  std::vector<MultiLevelOp> written;
  for (size_t j = 0; j + 1 < n; ++j) {
    if (m[j] < 0) throw InvariantError("diagonal entry is not a power of i");
    acc = (acc + m[j]) % 4;
    int ex = (4 - acc) % 4;
    if (ex) written.push_back(make_op(GenKind::IZ2, {lvl(j), lvl(j + 1)}, n, ex));
  }
  for (auto it = written.rbegin(); it != written.rend(); ++it) e.apply(*it);
  return finish(GateSetTag::GAUSS, true, v, e);
}

}  // namespace ringsynth
