#include "ringsynth/kernels.hpp"

#include <array>
#include <cstdlib>

namespace ringsynth {

namespace {

struct Term {
  int power;  // w^power
  int sign;
};
using Entry = std::vector<Term>;

struct PairKernel {
  std::array<Entry, 4> k;  // row-major 2x2, integral part
  unsigned shift;          // kernel = integral part / rt2^shift
};

// small columns: coefficient bit bound that triggers a reduce, and the bound
// above which the column moves to GMP
constexpr int kSmallReduceBits = 56;
constexpr int kSmallLimitBits = 48;
// big columns reduce once the shared exponent passes this
constexpr unsigned kBigReduceAt = 48;

// coefficient primitives for int64 and GMP
inline void c_add(int64_t& d, int64_t a, int64_t b) { d = a + b; }
inline void c_sub(int64_t& d, int64_t a, int64_t b) { d = a - b; }
inline void c_neg(int64_t& d) { d = -d; }
inline void c_zero(int64_t& d) { d = 0; }
inline bool c_odd(int64_t a) { return a & 1; }
inline bool c_nonzero(int64_t a) { return a != 0; }
inline void c_half(int64_t& d) { d /= 2; }
inline void c_add(Integer& d, const Integer& a, const Integer& b) { mpz_add(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
inline void c_sub(Integer& d, const Integer& a, const Integer& b) { mpz_sub(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
inline void c_neg(Integer& d) { mpz_neg(d.get_mpz_t(), d.get_mpz_t()); }
inline void c_zero(Integer& d) { mpz_set_ui(d.get_mpz_t(), 0); }
inline bool c_odd(const Integer& a) { return mpz_odd_p(a.get_mpz_t()); }
inline bool c_nonzero(const Integer& a) { return mpz_sgn(a.get_mpz_t()) != 0; }
inline void c_half(Integer& d) { mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), 1); }

template <class V>
bool is_zero(const V& x) {
  for (int i = 0; i < 4; ++i)
    if (c_nonzero(x[i])) return false;
  return true;
}

// acc += sign * w^p * a
template <class V>
void add_rotated(V& acc, const V& a, int p, int sign) {
  for (int j = 0; j < 4; ++j) {
    int m = j + p;
    bool neg = ((m / 4) % 2 == 1) != (sign < 0);
    if (neg)
      c_sub(acc[m % 4], acc[m % 4], a[j]);
    else
      c_add(acc[m % 4], acc[m % 4], a[j]);
  }
}

template <class V>
void combine_into(V& out, const Entry& e1, const V& a, const Entry& e2, const V& b) {
  for (int i = 0; i < 4; ++i) c_zero(out[i]);
  for (const auto& t : e1) add_rotated(out, a, t.power, t.sign);
  for (const auto& t : e2) add_rotated(out, b, t.power, t.sign);
}

// x <- x * rt2, with rt2 = w - w^3
template <class V>
void times_sqrt2(V& x, V& tmp) {
  c_sub(tmp[0], x[1], x[3]);
  c_add(tmp[1], x[0], x[2]);
  c_add(tmp[2], x[1], x[3]);
  c_sub(tmp[3], x[2], x[0]);
  std::swap(x, tmp);
}

template <class V>
bool sqrt2_divides(const V& x) {
  return c_odd(x[0]) == c_odd(x[2]) && c_odd(x[1]) == c_odd(x[3]);
}

template <class V>
bool two_divides(const V& x) {
  for (int i = 0; i < 4; ++i)
    if (c_odd(x[i])) return false;
  return true;
}

// x <- w^p x, by permuting and negating coefficients
template <class V>
void rotate(V& x, int p) {
  p = ((p % 8) + 8) % 8;
  for (int s = 0; s < p; ++s) {
    // (a0,a1,a2,a3) -> (-a3,a0,a1,a2)
    std::swap(x[2], x[3]);
    std::swap(x[1], x[2]);
    std::swap(x[0], x[1]);
    c_neg(x[0]);
  }
}

// divides the whole vector by the largest power of rt2 allowed by k
template <class V>
void reduce_vec(std::vector<V>& v, unsigned& k) {
  V tmp{};
  while (k >= 2) {
    for (const auto& x : v)
      if (!two_divides(x)) goto odd;
    for (auto& x : v)
      for (int i = 0; i < 4; ++i) c_half(x[i]);
    k -= 2;
  }
odd:
  if (k >= 1) {
    for (const auto& x : v)
      if (!sqrt2_divides(x)) return;
    for (auto& x : v) {
      times_sqrt2(x, tmp);
      for (int i = 0; i < 4; ++i) c_half(x[i]);
    }
    k -= 1;
  }
}

const PairKernel& pair_kernel(GateKind k) {
  static const PairKernel h{{Entry{{0, 1}}, Entry{{0, 1}}, Entry{{0, 1}}, Entry{{0, -1}}}, 1};
  static const PairKernel wh{{Entry{{1, 1}}, Entry{{1, 1}}, Entry{{1, 1}}, Entry{{1, -1}}}, 1};
  static const PairKernel whdg{{Entry{{7, 1}}, Entry{{7, 1}}, Entry{{7, 1}}, Entry{{7, -1}}}, 1};
  // 1 + i rt2 = 1 + w + w^3
  static const PairKernel f{{Entry{{0, 1}, {1, 1}, {3, 1}}, Entry{{0, 1}}, Entry{{0, 1}}, Entry{{0, -1}, {1, 1}, {3, 1}}}, 2};
  static const PairKernel fdg{
      {Entry{{0, 1}, {1, -1}, {3, -1}}, Entry{{0, 1}}, Entry{{0, 1}}, Entry{{0, -1}, {1, -1}, {3, -1}}}, 2};
  switch (k) {
    case GateKind::H:
    case GateKind::CH: return h;
    case GateKind::WH: return wh;
    case GateKind::WHdg: return whdg;
    case GateKind::F: return f;
    case GateKind::Fdg: return fdg;
    default: throw DomainError("pair_kernel: not a pair gate");
  }
}

int diagonal_power(GateKind k) {
  switch (k) {
    case GateKind::Z: return 4;
    case GateKind::S: return 2;
    case GateKind::Sdg: return 6;
    case GateKind::T: return 1;
    case GateKind::Tdg: return 7;
    default: return -1;
  }
}

size_t control_mask(const Gate& g, int wires) {
  size_t cm = 0;
  for (size_t i = 0; i + 1 < g.wires.size(); ++i) cm |= size_t{1} << (wires - g.wires[i]);
  return cm;
}

// returns the rt2 shift the gate adds
template <class V>
unsigned apply_vec(std::vector<V>& v, const std::vector<size_t>& rowmap, size_t dim, int wires, const Gate& g) {
  thread_local V sa{}, sb{};
  const size_t tb = size_t{1} << (wires - g.wires.back());
  const int p = diagonal_power(g.kind);
  if (p >= 0) {
    for (size_t r = 0; r < dim; ++r)
      if (r & tb) rotate(v[rowmap[r]], p);
    return 0;
  }
  const PairKernel& K = pair_kernel(g.kind);
  const size_t cm = control_mask(g, wires);
  for (size_t r = 0; r < dim; ++r) {
    if (r & tb) continue;
    V& a = v[rowmap[r]];
    V& b = v[rowmap[r | tb]];
    if ((r & cm) != cm) {
      // untouched rows follow the shared exponent
      for (unsigned i = 0; i < K.shift; ++i) {
        if (!is_zero(a)) times_sqrt2(a, sa);
        if (!is_zero(b)) times_sqrt2(b, sa);
      }
      continue;
    }
    if (is_zero(a) && is_zero(b)) continue;
    combine_into(sa, K.k[0], a, K.k[1], b);
    combine_into(sb, K.k[2], a, K.k[3], b);
    std::swap(a, sa);
    std::swap(b, sb);
  }
  return K.shift;
}

int bit_bound(const std::vector<StateBlock::Small>& v) {
  uint64_t m = 0;
  for (const auto& x : v)
    for (int i = 0; i < 4; ++i) m |= static_cast<uint64_t>(std::llabs(x[i]));
  return 64 - __builtin_clzll(m | 1);
}

}  // namespace

StateBlock::StateBlock(int total_wires, const std::vector<size_t>& basis_columns)
    : wires_(total_wires), dim_(size_t{1} << total_wires), rowmap_(dim_), cols_(basis_columns.size()) {
  for (size_t r = 0; r < dim_; ++r) rowmap_[r] = r;
  for (size_t c = 0; c < cols_.size(); ++c) {
    if (basis_columns[c] >= dim_) throw DomainError("StateBlock: basis column out of range");
    cols_[c].small.assign(dim_, Small{});
    cols_[c].small[basis_columns[c]][0] = 1;
  }
}

void StateBlock::promote(Column& c) {
  c.big.assign(dim_, RingInt());
  for (size_t r = 0; r < dim_; ++r)
    for (int i = 0; i < 4; ++i) c.big[r][i] = static_cast<long>(c.small[r][i]);
  c.small.clear();
  c.is_big = true;
}

void StateBlock::reduce(Column& c) {
  if (c.is_big) {
    reduce_vec(c.big, c.k);
    return;
  }
  reduce_vec(c.small, c.k);
  c.bits = bit_bound(c.small);
  if (c.bits >= kSmallLimitBits) promote(c);
}

void StateBlock::permute(const Gate& g, std::vector<size_t>& rowmap) const {
  const size_t cm = control_mask(g, wires_);
  const size_t tb = size_t{1} << (wires_ - g.wires.back());
  for (size_t r = 0; r < dim_; ++r)
    if ((r & cm) == cm && !(r & tb)) std::swap(rowmap[r], rowmap[r | tb]);
}

void StateBlock::step(Column& col, const std::vector<size_t>& rowmap, const Gate& g) {
  if (g.kind == GateKind::HH) {
    step(col, rowmap, {GateKind::H, {g.wires[0]}});
    step(col, rowmap, {GateKind::H, {g.wires[1]}});
    return;
  }
  if (col.is_big) {
    col.k += apply_vec(col.big, rowmap, dim_, wires_, g);
    if (col.k >= kBigReduceAt) reduce(col);
    return;
  }
  // each pair gate at most quadruples the largest coefficient
  if (col.bits + 2 >= kSmallReduceBits) reduce(col);
  if (col.is_big) {
    step(col, rowmap, g);
    return;
  }
  unsigned s = apply_vec(col.small, rowmap, dim_, wires_, g);
  col.k += s;
  if (s) col.bits += 2;
}

void StateBlock::apply(const Gate& g, bool parallel) {
  validate(g, wires_);
  if (gate_is_permutation(g.kind)) {
    permute(g, rowmap_);
    return;
  }
  const long n = static_cast<long>(cols_.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (long c = 0; c < n; ++c) {
    step(cols_[c], rowmap_, g);
    reduce(cols_[c]);
  }
}

void StateBlock::apply_all(const std::vector<Gate>& gates, bool parallel) {
  for (const auto& g : gates) validate(g, wires_);
  const long n = static_cast<long>(cols_.size());
  // columns are independent; each carries its own copy of the row map
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long c = 0; c < n; ++c) {
    std::vector<size_t> rowmap = rowmap_;
    for (const auto& g : gates) {
      if (gate_is_permutation(g.kind))
        permute(g, rowmap);
      else
        step(cols_[c], rowmap, g);
    }
    reduce(cols_[c]);
  }
  for (const auto& g : gates)
    if (gate_is_permutation(g.kind)) permute(g, rowmap_);
}

void StateBlock::multiply_phase(int p) {
  if (((p % 8) + 8) % 8 == 0) return;
  for (auto& c : cols_) {
    for (auto& x : c.small) rotate(x, p);
    for (auto& x : c.big) rotate(x, p);
  }
}

RingInt StateBlock::entry(const Column& c, size_t physical_row) const {
  if (c.is_big) return c.big[physical_row];
  const Small& s = c.small[physical_row];
  RingInt x;
  for (int i = 0; i < 4; ++i) x[i] = static_cast<long>(s[i]);
  return x;
}

RingMatrix StateBlock::matrix() const {
  RingMatrix m(dim_, cols_.size());
  for (size_t c = 0; c < cols_.size(); ++c)
    for (size_t r = 0; r < dim_; ++r) m(r, c) = RingScalar(entry(cols_[c], rowmap_[r]), cols_[c].k);
  return m;
}

RingMatrix evaluate_columns(const Circuit& c, const std::vector<size_t>& basis_columns, bool parallel) {
  StateBlock sb(c.width(), basis_columns);
  sb.apply_all(c.gates, parallel);
  sb.multiply_phase(c.phase);
  return sb.matrix();
}

}  // namespace ringsynth
