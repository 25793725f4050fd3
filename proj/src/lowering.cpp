#include "ringsynth/lowering.hpp"

#include <algorithm>
#include <bit>

#include "emitter.hpp"
#include "ringsynth/errors.hpp"

namespace ringsynth {

namespace detail {

std::vector<int> Emitter::free_wires(std::initializer_list<const std::vector<int>*> used) const {
  std::vector<int> out;
  for (int w = 1; w <= width_; ++w) {
    bool busy = false;
    for (const auto* v : used)
      if (std::find(v->begin(), v->end(), w) != v->end()) busy = true;
    if (!busy) out.push_back(w);
  }
  return out;
}

int Emitter::borrow(std::vector<int> busy) const {
  auto f = free_wires({&busy});
  if (f.empty()) throw UnsupportedError("construction needs a spare wire");
  return f.front();
}

void Emitter::mcx(const std::vector<int>& ctrls, int t) {
  size_t k = ctrls.size();
  if (k == 0) return g(GateKind::X, {t});
  if (k == 1) return g(GateKind::CX, {ctrls[0], t});
  if (k == 2) return g(GateKind::CCX, {ctrls[0], ctrls[1], t});
  std::vector<int> busy = ctrls;
  busy.push_back(t);
  int d = borrow(busy);
  size_t m1 = (k + 1) / 2;
  std::vector<int> c1(ctrls.begin(), ctrls.begin() + m1);
  std::vector<int> c2(ctrls.begin() + m1, ctrls.end());
  c2.push_back(d);
  for (int rep = 0; rep < 2; ++rep) {
    mcx(c1, d);
    mcx(c2, t);
  }
}

void Emitter::transposition(size_t x, size_t y, int n) {
  auto bit = [n](size_t v, int wire) { return (v >> (n - wire)) & 1u; };
  std::vector<int> diff;
  for (int w = 1; w <= n; ++w)
    if (bit(x, w) != bit(y, w)) diff.push_back(w);
  // Gray code x = g_0, ..., g_m = y; step i flips diff[i]
  std::vector<size_t> code{x};
  for (int w : diff) code.push_back(code.back() ^ (size_t{1} << (n - w)));
  auto step = [&](size_t i) {
    int t = diff[i];
    size_t from = code[i];
    std::vector<int> ctrls, neg;
    for (int w = 1; w <= n; ++w) {
      if (w == t) continue;
      ctrls.push_back(w);
      if (!bit(from, w)) neg.push_back(w);
    }
    for (int w : neg) g(GateKind::X, {w});
    mcx(ctrls, t);
    for (int w : neg) g(GateKind::X, {w});
  };
  size_t m = diff.size();
  for (size_t i = 0; i + 1 < m; ++i) step(i);
  step(m - 1);
  for (size_t i = m - 1; i-- > 0;) step(i);
}

void Emitter::cz1(int c, int t) {
  switch (gs_) {
    case GateSetTag::INT: {
      int d = borrow({c, t});
      g(GateKind::HH, {t, d});
      g(GateKind::CX, {c, t});
      g(GateKind::HH, {t, d});
      return;
    }
    case GateSetTag::IMAG:
      seq({GateKind::F, GateKind::F}, t);
      g(GateKind::CX, {c, t});
      seq({GateKind::Fdg, GateKind::Fdg}, t);
      return;
    case GateSetTag::GAUSS:
      g(GateKind::WH, {t});
      g(GateKind::CX, {c, t});
      g(GateKind::WHdg, {t});
      return;
    default:
      g(GateKind::H, {t});
      g(GateKind::CX, {c, t});
      g(GateKind::H, {t});
  }
}

void Emitter::cs1(int c, int t) {
  int d = borrow({c, t});
  g(GateKind::S, {d});
  g(GateKind::CCX, {c, t, d});
  g(GateKind::WH, {d});
  g(GateKind::CCX, {c, t, d});
  g(GateKind::WHdg, {d});
  g(GateKind::Sdg, {d});
  g(GateKind::CCX, {c, t, d});
}

void Emitter::cwh1(int c, int t) {
  cs1(c, t);
  g(GateKind::WH, {t});
  cs1(c, t);
  g(GateKind::WHdg, {t});
  cs1(c, t);
}

void Emitter::cf1(int c, int t) {
  g(GateKind::CX, {c, t});
  cz1(c, t);
  seq({GateKind::X, GateKind::Z, GateKind::X, GateKind::F}, t);
  g(GateKind::CX, {c, t});
  seq({GateKind::Z, GateKind::X, GateKind::F, GateKind::X}, t);
}

void Emitter::chh1(int c, int p, int q) {
  int d = borrow({c, p, q});
  for (int rep = 0; rep < 2; ++rep) {
    if (rep == 0) g(GateKind::HH, {q, d});
    g(GateKind::CX, {q, p});
    g(GateKind::CCX, {c, p, q});
    g(GateKind::CX, {q, p});
    if (rep == 0) g(GateKind::HH, {q, d});
  }
}

void Emitter::plain(BaseGate w, const std::vector<int>& ts) {
  switch (w) {
    case BaseGate::X: return g(GateKind::X, {ts[0]});
    case BaseGate::Z: return g(GateKind::Z, {ts[0]});
    case BaseGate::S: return g(GateKind::S, {ts[0]});
    case BaseGate::Sdg: return g(GateKind::Sdg, {ts[0]});
    case BaseGate::H: return g(GateKind::H, {ts[0]});
    case BaseGate::F: return g(GateKind::F, {ts[0]});
    case BaseGate::WH: return g(GateKind::WH, {ts[0]});
    case BaseGate::HH: return g(GateKind::HH, {ts[0], ts[1]});
  }
}

void Emitter::ctrl1(BaseGate w, int c, const std::vector<int>& ts) {
  switch (w) {
    case BaseGate::X: return g(GateKind::CX, {c, ts[0]});
    case BaseGate::Z: return cz1(c, ts[0]);
    case BaseGate::S: return cs1(c, ts[0]);
    case BaseGate::Sdg: return csdg1(c, ts[0]);
    case BaseGate::H: return g(GateKind::CH, {c, ts[0]});
    case BaseGate::F: return cf1(c, ts[0]);
    case BaseGate::WH: return cwh1(c, ts[0]);
    case BaseGate::HH: return chh1(c, ts[0], ts[1]);
  }
}

void Emitter::control_extend(BaseGate w, const std::vector<int>& ctrls, const std::vector<int>& ts) {
  if (ctrls.empty()) return plain(w, ts);
  if (ctrls.size() == 1) return ctrl1(w, ctrls[0], ts);
  if (w == BaseGate::X) return mcx(ctrls, ts[0]);
  if (!anc_) throw UnsupportedError("multiply controlled gate needs the clean ancilla");
  mcx(ctrls, *anc_);
  ctrl1(w, *anc_, ts);
  mcx(ctrls, *anc_);
}

}  // namespace detail

using detail::Emitter;

namespace {

int qubits_of(size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) throw DomainError("dimension " + std::to_string(dim) + " is not a power of two");
  return std::countr_zero(dim);
}

std::vector<int> all_but(int n, int skip) {
  std::vector<int> v;
  for (int w = 1; w <= n; ++w)
    if (w != skip) v.push_back(w);
  return v;
}

// X gates sending basis index a to all ones
void flip_to_ones(Emitter& e, size_t a, int n) {
  for (int w = 1; w <= n; ++w)
    if (!((a >> (n - w)) & 1u)) e.g(GateKind::X, {w});
}

// emits V and returns (target wire, start index) so that V maps a to |1..1 0_t> and b to all ones
int two_level_prefix(Emitter& e, size_t a, size_t b, int n) {
  flip_to_ones(e, a, n);
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
  return t;
}

template <class Body>
void two_level(Emitter& e, const MultiLevelOp& op, int n, Body body) {
  size_t start = e.gates.size();
  int t = two_level_prefix(e, op.levels[0] - 1, op.levels[1] - 1, n);
  std::vector<Gate> prefix(e.gates.begin() + start, e.gates.end());
  body(all_but(n, t), t);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) e.gates.push_back(*it);
}

template <class Body>
void one_level(Emitter& e, const MultiLevelOp& op, int n, Body body) {
  size_t start = e.gates.size();
  flip_to_ones(e, op.levels[0] - 1, n);
  std::vector<Gate> prefix(e.gates.begin() + start, e.gates.end());
  body(all_but(n, n), n);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) e.gates.push_back(*it);
}

// transpositions taking the four levels to the block 1..1xy
void four_level(Emitter& e, const MultiLevelOp& op, int n, BaseGate w) {
  size_t base = ((size_t{1} << n) - 1) & ~size_t{3};
  std::vector<size_t> pos(size_t{1} << n);
  for (size_t i = 0; i < pos.size(); ++i) pos[i] = i;  // pos[original] = current
  std::vector<size_t> where = pos;                     // where[current] = original
  size_t start = e.gates.size();
  for (size_t i = 0; i < 4; ++i) {
    size_t from = pos[op.levels[i] - 1], to = base + i;
    if (from == to) continue;
    e.transposition(from, to, n);
    size_t of = where[from], ot = where[to];
    std::swap(where[from], where[to]);
    pos[of] = to;
    pos[ot] = from;
  }
  std::vector<Gate> prefix(e.gates.begin() + start, e.gates.end());
  std::vector<int> ctrls;
  for (int c = 1; c <= n - 2; ++c) ctrls.push_back(c);
  e.control_extend(w, ctrls, {n - 1, n});
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) e.gates.push_back(*it);
}

void lower_into(Emitter& e, const MultiLevelOp& op, int n);

}  // namespace

void lower_ancillafree_into(Emitter& e, const MultiLevelOp& op, int n);

namespace {

void lower_into(Emitter& e, const MultiLevelOp& op, int n) {
  auto ext = [&](BaseGate w) { return [&e, w](const std::vector<int>& c, int t) { e.control_extend(w, c, {t}); }; };
  switch (op.kind) {
    case GenKind::GLOBAL_IH: return e.g(GateKind::H, {n});
    case GenKind::GLOBAL_OMEGA:
      if (e.gateset() == GateSetTag::SUPGAUSS) {
        for (int r = 0; r < 3; ++r) e.seq({GateKind::H, GateKind::S}, 1);
      } else {
        e.phase = (e.phase + 1) % 8;
      }
      return;
    case GenKind::NEG1: return one_level(e, op, n, ext(BaseGate::Z));
    case GenKind::I4: {
      int p = ((op.exponent % 4) + 4) % 4;
      if (p == 0) return;
      return one_level(e, op, n, ext(p == 1 ? BaseGate::S : p == 2 ? BaseGate::Z : BaseGate::Sdg));
    }
    case GenKind::X2: return two_level(e, op, n, ext(BaseGate::X));
    case GenKind::H2: return two_level(e, op, n, ext(BaseGate::H));
    case GenKind::F2: return two_level(e, op, n, ext(BaseGate::F));
    case GenKind::WH2: return two_level(e, op, n, ext(BaseGate::WH));
    case GenKind::HH4: return four_level(e, op, n, BaseGate::HH);
    default: return lower_ancillafree_into(e, op, n);
  }
}

enum class Family { None, F, S, WH, H };

struct Run {
  Family fam;
  int wire;
  int power;
};

Family family_of(GateKind k, int& p) {
  switch (k) {
    case GateKind::F: p = 1; return Family::F;
    case GateKind::Fdg: p = 7; return Family::F;
    case GateKind::S: p = 1; return Family::S;
    case GateKind::Sdg: p = 3; return Family::S;
    case GateKind::Z: p = 2; return Family::S;
    case GateKind::WH: p = 1; return Family::WH;
    case GateKind::WHdg: p = 7; return Family::WH;
    case GateKind::H: p = 1; return Family::H;
    default: p = 0; return Family::None;
  }
}

int modulus(Family f) { return f == Family::S ? 4 : f == Family::H ? 2 : 8; }

void unsupported(GateKind k, GateSetTag gs) {
  throw UnsupportedError("gate " + std::string(gate_name(k)) + " has no expansion in " +
                         std::string(gateset_name(gs)));
}

void expand_run(Circuit& out, const Run& r, GateSetTag gs) {
  int t = r.wire;
  auto rep = [&](GateKind k, int times) {
    for (int i = 0; i < times; ++i) out.add(k, {t});
  };
  switch (r.fam) {
    case Family::F:
      if (gs != GateSetTag::IMAG) unsupported(GateKind::F, gs);
      return rep(GateKind::F, r.power);
    case Family::S:
      if (gs == GateSetTag::GAUSS || gs == GateSetTag::SUPGAUSS) return rep(GateKind::S, r.power);
      if (r.power != 2) unsupported(GateKind::S, gs);
      switch (gs) {
        case GateSetTag::INT: {
          if (out.width() < 2) throw UnsupportedError("Z over the integral set needs a second wire");
          int u = t == 1 ? 2 : 1;
          out.add(GateKind::HH, {t, u});
          out.add(GateKind::X, {t});
          out.add(GateKind::HH, {t, u});
          return;
        }
        case GateSetTag::IMAG:
          rep(GateKind::F, 2);
          out.add(GateKind::X, {t});
          return rep(GateKind::F, 6);
        default:
          out.add(GateKind::H, {t});
          out.add(GateKind::X, {t});
          return out.add(GateKind::H, {t});
      }
    case Family::WH: {
      if (gs != GateSetTag::GAUSS && gs != GateSetTag::SUPGAUSS) unsupported(GateKind::WH, gs);
      // (wH)^2 = i
      out.add_phase(2 * (r.power / 2));
      if (r.power % 2 == 0) return;
      if (gs == GateSetTag::GAUSS) return out.add(GateKind::WH, {t});
      for (GateKind k : {GateKind::S, GateKind::H, GateKind::S, GateKind::H, GateKind::S}) out.add(k, {t});
      return;
    }
    case Family::H:
      switch (gs) {
        case GateSetTag::SUPINT:
        case GateSetTag::REAL:
        case GateSetTag::SUPGAUSS: return out.add(GateKind::H, {t});
        case GateSetTag::IMAG:
          out.add_phase(-2);
          return rep(GateKind::F, 2);
        case GateSetTag::GAUSS:
          out.add_phase(-1);
          return out.add(GateKind::WH, {t});
        default: unsupported(GateKind::H, gs);
      }
      return;
    case Family::None: return;
  }
}

}  // namespace

Circuit legalize(const Circuit& c, GateSetTag gs) {
  std::vector<Gate> flat;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::HH && gs != GateSetTag::INT) {
      flat.push_back({GateKind::H, {g.wires[0]}});
      flat.push_back({GateKind::H, {g.wires[1]}});
    } else {
      flat.push_back(g);
    }
  }
  struct Item {
    bool is_run;
    Gate gate;
    Run run;
  };
  std::vector<Item> items;
  for (const auto& g : flat) {
    int p = 0;
    Family f = family_of(g.kind, p);
    if (f == Family::None) {
      if (!items.empty() && !items.back().is_run && items.back().gate.kind == gate_inverse(g.kind) &&
          items.back().gate.wires == g.wires)
        items.pop_back();
      else
        items.push_back({false, g, {}});
      continue;
    }
    int w = g.wires[0];
    if (!items.empty() && items.back().is_run && items.back().run.fam == f && items.back().run.wire == w) {
      auto& r = items.back().run;
      r.power = (r.power + p) % modulus(f);
      if (r.power == 0) items.pop_back();
    } else {
      items.push_back({true, {}, {f, w, p % modulus(f)}});
    }
  }
  Circuit out;
  out.n_data = c.n_data;
  out.n_ancilla = c.n_ancilla;
  out.ancilla_kind = c.ancilla_kind;
  out.phase = c.phase;
  for (const auto& it : items) {
    if (it.is_run) {
      expand_run(out, it.run, gs);
      continue;
    }
    if (!gateset_allows(gs, it.gate.kind)) unsupported(it.gate.kind, gs);
    out.gates.push_back(it.gate);
  }
  return out;
}

bool circuit_in_gateset(const Circuit& c, GateSetTag gs) {
  return std::all_of(c.gates.begin(), c.gates.end(), [gs](const Gate& g) { return gateset_allows(gs, g.kind); });
}

bool generator_supported(GenKind k, GateSetTag gs) {
  using G = GenKind;
  switch (gs) {
    case GateSetTag::INT: return k == G::NEG1 || k == G::X2 || k == G::HH4;
    case GateSetTag::SUPINT: return k == G::NEG1 || k == G::X2 || k == G::HH4 || k == G::GLOBAL_IH;
    case GateSetTag::REAL:
      return k == G::NEG1 || k == G::X2 || k == G::HH4 || k == G::H2 || k == G::GLOBAL_IH;
    case GateSetTag::IMAG:
      return k == G::NEG1 || k == G::X2 || k == G::F2 || k == G::XZ2 || k == G::ZX2 || k == G::FZ2 ||
             k == G::ZF2 || k == G::Z2;
    case GateSetTag::GAUSS:
      return k == G::NEG1 || k == G::I4 || k == G::X2 || k == G::WH2 || k == G::IZ2 || k == G::IX2 ||
             k == G::WSH2 || k == G::WHS2;
    case GateSetTag::SUPGAUSS:
      return generator_supported(k, GateSetTag::GAUSS) || k == G::GLOBAL_OMEGA || k == G::GLOBAL_IH ||
             k == G::HH4;
  }
  return false;
}

namespace {

Circuit raw_generator(const MultiLevelOp& op, GateSetTag gs, AncillaMode mode) {
  if (!generator_supported(op.kind, gs))
    throw UnsupportedError("generator " + std::string(gen_name(op.kind)) + " not expressible over " +
                           gateset_listing(gs));
  int n = qubits_of(op.dim);
  Circuit c;
  c.n_data = n;
  c.n_ancilla = mode == AncillaMode::OneClean ? 1 : 0;
  std::optional<int> anc;
  if (mode == AncillaMode::OneClean) anc = n + 1;
  Emitter e(gs, c.width(), anc);
  lower_into(e, op, n);
  c.gates = std::move(e.gates);
  c.phase = e.phase;
  return c;
}

Circuit raw_word(const GeneratorWord& w, GateSetTag gs, AncillaMode mode) {
  int n = qubits_of(w.dim);
  Circuit c;
  c.n_data = n;
  c.n_ancilla = mode == AncillaMode::OneClean ? 1 : 0;
  for (auto it = w.ops.rbegin(); it != w.ops.rend(); ++it) c.append(raw_generator(*it, gs, mode));
  return c;
}

}  // namespace

Circuit lower_generator(const MultiLevelOp& g, GateSetTag gs, AncillaMode mode) {
  return legalize(raw_generator(g, gs, mode), gs);
}

Circuit lower_generator_ancillafree(const MultiLevelOp& g, GateSetTag gs) {
  if (gs != GateSetTag::IMAG && gs != GateSetTag::GAUSS)
    throw UnsupportedError("ancilla-free lowering covers the imaginary and Gaussian sets only");
  return lower_generator(g, gs, AncillaMode::None);
}

Circuit lower_word(const GeneratorWord& w, GateSetTag gs, AncillaMode mode) {
  return legalize(raw_word(w, gs, mode), gs);
}

Circuit lower_synthesis(const GeneratorWord& w, GateSetTag gs, AncillaMode mode) {
  return legalize(inverse(raw_word(w, gs, mode)), gs);
}

Circuit lower_permutation(const RingMatrix& p) {
  auto perm = permutation_of(p);
  if (!perm) throw DomainError("not a permutation matrix");
  int n = qubits_of(p.rows());
  Circuit c;
  c.n_data = n;
  c.n_ancilla = n >= 4 ? 1 : 0;
  c.ancilla_kind = AncillaKind::Dirty;
  Emitter e(GateSetTag::INT, c.width());
  // P = t_1 ... t_k with t_i fixing everything below the i-th moved point
  std::vector<size_t> r = *perm;
  std::vector<std::pair<size_t, size_t>> ts;
  for (size_t i = 0; i < r.size(); ++i) {
    while (r[i] != i) {
      size_t j = r[i];
      ts.push_back({i, j});
      // left-compose with the transposition (i j)
      for (auto& v : r) {
        if (v == i) v = j;
        else if (v == j) v = i;
      }
    }
  }
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) e.transposition(it->first, it->second, n);
  c.gates = std::move(e.gates);
  return c;
}

Circuit mcx_dirty(const std::vector<int>& controls, int target, int dirty) {
  std::vector<int> all = controls;
  all.push_back(target);
  all.push_back(dirty);
  std::vector<int> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("mcx: wire collision");
  if (sorted.front() < 1) throw DomainError("mcx: wires are 1-based");
  Circuit c;
  c.n_data = sorted.back();
  Emitter e(GateSetTag::INT, c.width());
  e.mcx(controls, target);
  c.gates = std::move(e.gates);
  return c;
}

Circuit control_extend(BaseGate w, int n_controls, GateSetTag gs) {
  if (n_controls < 0) throw DomainError("negative control count");
  int nt = w == BaseGate::HH ? 2 : 1;
  Circuit c;
  c.n_data = n_controls + nt;
  c.n_ancilla = 1;
  Emitter e(gs, c.width(), c.width());
  std::vector<int> ctrls, ts;
  for (int i = 1; i <= n_controls; ++i) ctrls.push_back(i);
  for (int i = 0; i < nt; ++i) ts.push_back(n_controls + 1 + i);
  e.control_extend(w, ctrls, ts);
  c.gates = std::move(e.gates);
  return legalize(c, gs);
}

}  // namespace ringsynth
