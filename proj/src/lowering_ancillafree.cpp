#include <vector>

#include "emitter.hpp"
#include "ringsynth/errors.hpp"

namespace ringsynth {

namespace detail {

namespace {

std::vector<int> without_last(const std::vector<int>& v) { return {v.begin(), v.end() - 1}; }
std::vector<int> head(const std::vector<int>& v, size_t k) { return {v.begin(), v.begin() + k}; }
std::vector<int> tail(const std::vector<int>& v, size_t k) { return {v.begin() + k, v.end()}; }

}  // namespace

void Emitter::mcz(const std::vector<int>& ctrls, int t) {
  if (ctrls.empty()) return g(GateKind::Z, {t});
  if (ctrls.size() == 1) return cz1(ctrls[0], t);
  switch (gs_) {
    case GateSetTag::INT: {
      std::vector<int> busy = ctrls;
      busy.push_back(t);
      int d = borrow(busy);
      g(GateKind::HH, {t, d});
      mcx(ctrls, t);
      g(GateKind::HH, {t, d});
      return;
    }
    case GateSetTag::IMAG:
      seq({GateKind::F, GateKind::F}, t);
      mcx(ctrls, t);
      seq({GateKind::Fdg, GateKind::Fdg}, t);
      return;
    case GateSetTag::GAUSS:
      g(GateKind::WH, {t});
      mcx(ctrls, t);
      g(GateKind::WHdg, {t});
      return;
    default:
      g(GateKind::H, {t});
      mcx(ctrls, t);
      g(GateKind::H, {t});
  }
}

// ZXF is self-inverse; X (ZXF) X (ZXF) X = ZXF
void Emitter::mc_zxf(const std::vector<int>& ctrls, int t) {
  auto zxf = [&] { seq({GateKind::F, GateKind::X, GateKind::Z}, t); };
  if (ctrls.empty()) return zxf();
  g(GateKind::X, {t});
  zxf();
  mcx(ctrls, t);
  zxf();
  g(GateKind::X, {t});
}

void Emitter::mc_zx(const std::vector<int>& ctrls, int t) {
  if (ctrls.empty()) return seq({GateKind::X, GateKind::Z}, t);
  if (ctrls.size() == 1) {
    g(GateKind::CX, {ctrls[0], t});
    return cz1(ctrls[0], t);
  }
  int c = ctrls.back();
  auto rest = without_last(ctrls);
  mcx(rest, t);
  cf1(c, t);
  cf1(c, t);
  mcx(rest, t);
  inverse_of([&] {
    cf1(c, t);
    cf1(c, t);
  });
}

void Emitter::mc_zf(const std::vector<int>& ctrls, int t) {
  if (ctrls.empty()) return seq({GateKind::F, GateKind::Z}, t);
  if (ctrls.size() == 1) {
    cf1(ctrls[0], t);
    return cz1(ctrls[0], t);
  }
  size_t k1 = ctrls.size() / 2;
  auto g1 = head(ctrls, k1), g2 = tail(ctrls, k1);
  mcx(g1, t);
  mc_zxf(g2, t);
  mcx(g1, t);
  mc_zxf(g2, t);
  // remove the -1 left on the all-controls subspace
  int zc = g2.back();
  mcz(without_last(ctrls), zc);
}

void Emitter::mc_fz(const std::vector<int>& ctrls, int t) {
  if (ctrls.empty()) return seq({GateKind::Z, GateKind::F}, t);
  if (ctrls.size() == 1) {
    cz1(ctrls[0], t);
    return cf1(ctrls[0], t);
  }
  size_t k1 = ctrls.size() / 2;
  auto g1 = head(ctrls, k1), g2 = tail(ctrls, k1);
  seq({GateKind::F, GateKind::F}, t);
  mc_zxf(g2, t);
  mcx(g1, t);
  mc_zxf(g2, t);
  mcx(g1, t);
  mc_xz(ctrls, t);
  seq({GateKind::Fdg, GateKind::Fdg}, t);
}

void Emitter::mc_ix(const std::vector<int>& ctrls, int t) {
  if (ctrls.empty()) return seq({GateKind::WH, GateKind::S, GateKind::S, GateKind::WH}, t);
  if (ctrls.size() == 1) {
    g(GateKind::S, {ctrls[0]});
    return g(GateKind::CX, {ctrls[0], t});
  }
  int c1 = ctrls.front();
  auto rest = tail(ctrls, 1);
  g(GateKind::WH, {t});
  csdg1(c1, t);
  mc_ix(rest, t);
  cs1(c1, t);
  inverse_of([&] { mc_ix(rest, t); });
  g(GateKind::WHdg, {t});
}

void Emitter::mc_iz(const std::vector<int>& ctrls, int t) {
  g(GateKind::WH, {t});
  mc_ix(ctrls, t);
  g(GateKind::WHdg, {t});
}

void Emitter::mc_wsh(const std::vector<int>& ctrls, int t) {
  if (ctrls.empty()) return seq({GateKind::WH, GateKind::S}, t);
  if (ctrls.size() == 1) {
    int c = ctrls[0];
    cs1(c, t);
    g(GateKind::WH, {t});
    cs1(c, t);
    g(GateKind::WHdg, {t});
    return cz1(c, t);
  }
  int c = ctrls.back();
  auto g1 = without_last(ctrls);
  inverse_of([&] { mc_wsh(g1, t); });
  csdg1(c, t);
  mc_wsh(g1, t);
  cs1(c, t);
  mc_iz(ctrls, t);
}

void Emitter::mc_whs(const std::vector<int>& ctrls, int t) {
  if (ctrls.empty()) return seq({GateKind::S, GateKind::WH}, t);
  if (ctrls.size() == 1) {
    int c = ctrls[0];
    cz1(c, t);
    g(GateKind::WH, {t});
    cs1(c, t);
    g(GateKind::WHdg, {t});
    return cs1(c, t);
  }
  g(GateKind::WH, {t});
  mc_wsh(ctrls, t);
  g(GateKind::WHdg, {t});
}

// C^k S with two borrowed wires
void Emitter::mc_s_two_dirty(const std::vector<int>& ctrls, int t) {
  if (ctrls.empty()) return g(GateKind::S, {t});
  if (ctrls.size() == 1) return cs1(ctrls[0], t);
  std::vector<int> busy = ctrls;
  busy.push_back(t);
  auto pool = free_wires({&busy});
  if (pool.size() < 2) throw UnsupportedError("controlled S needs two spare wires");
  int a = pool[0];
  mcx(ctrls, a);
  cs1(a, t);
  mcx(ctrls, a);
  csdg1(a, t);
  std::vector<int> za = ctrls;
  za.push_back(a);
  mcz(za, t);
}

}  // namespace detail

using detail::Emitter;

// two-level kernels on levels (a, b): V, then the fully controlled one-qubit gate, then V back
void lower_ancillafree_into(Emitter& e, const MultiLevelOp& op, int n) {
  size_t a = op.levels[0] - 1, b = op.levels[1] - 1;
  if (op.kind == GenKind::Z2) {
    MultiLevelOp pq = op;
    pq.kind = GenKind::XZ2;
    pq.levels = {op.levels[1], op.levels[3]};
    // (XZ)^2 = -I on the pair
    lower_ancillafree_into(e, pq, n);
    lower_ancillafree_into(e, pq, n);
    return;
  }
  size_t start = e.gates.size();
  for (int w = 1; w <= n; ++w)
    if (!((a >> (n - w)) & 1u)) e.g(GateKind::X, {w});
  size_t flip = 0;
  for (int w = 1; w <= n; ++w)
    if (!((a >> (n - w)) & 1u)) flip |= size_t{1} << (n - w);
  size_t bp = b ^ flip;
  std::vector<int> zeros;
  for (int w = 1; w <= n; ++w)
    if (!((bp >> (n - w)) & 1u)) zeros.push_back(w);
  int t = zeros.back();
  e.g(GateKind::X, {t});
  for (int s : zeros)
    if (s != t) e.g(GateKind::CX, {t, s});
  std::vector<Gate> prefix(e.gates.begin() + start, e.gates.end());
  std::vector<int> ctrls;
  for (int w = 1; w <= n; ++w)
    if (w != t) ctrls.push_back(w);
  switch (op.kind) {
    case GenKind::XZ2: e.mc_xz(ctrls, t); break;
    case GenKind::ZX2: e.mc_zx(ctrls, t); break;
    case GenKind::FZ2: e.mc_fz(ctrls, t); break;
    case GenKind::ZF2: e.mc_zf(ctrls, t); break;
    case GenKind::IX2: e.mc_ix(ctrls, t); break;
    case GenKind::WSH2: e.mc_wsh(ctrls, t); break;
    case GenKind::WHS2: e.mc_whs(ctrls, t); break;
    case GenKind::IZ2:
      for (int r = 0; r < ((op.exponent % 4) + 4) % 4; ++r) e.mc_iz(ctrls, t);
      break;
    default: throw UnsupportedError("no ancilla-free construction for " + std::string(gen_name(op.kind)));
  }
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) e.gates.push_back(*it);
}

}  // namespace ringsynth
