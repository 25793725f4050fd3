#include "ringsynth/identities.hpp"

#include <functional>

#include "emitter.hpp"
#include "ringsynth/errors.hpp"
#include "ringsynth/lowering.hpp"

namespace ringsynth {

RingMatrix controlled_on(const RingMatrix& u, const std::vector<int>& controls, const std::vector<int>& targets,
                         int width) {
  size_t dim = size_t{1} << width;
  size_t nt = targets.size();
  if (u.rows() != (size_t{1} << nt)) throw DomainError("controlled_on: kernel size does not match targets");
  auto bit = [width](size_t x, int w) { return (x >> (width - w)) & 1u; };
  auto local = [&](size_t x) {
    size_t l = 0;
    for (int t : targets) l = (l << 1) | bit(x, t);
    return l;
  };
  auto with_local = [&](size_t x, size_t l) {
    for (size_t i = 0; i < nt; ++i) {
      size_t b = (l >> (nt - 1 - i)) & 1u;
      size_t mask = size_t{1} << (width - targets[i]);
      x = b ? (x | mask) : (x & ~mask);
    }
    return x;
  };
  RingMatrix m(dim, dim);
  for (size_t x = 0; x < dim; ++x) {
    bool on = true;
    for (int c : controls) on = on && bit(x, c);
    if (!on) {
      m(x, x) = 1;
      continue;
    }
    size_t lx = local(x);
    for (size_t r = 0; r < u.rows(); ++r) m(with_local(x, r), x) = u(r, lx);
  }
  return m;
}

namespace {

using detail::Emitter;

RingMatrix m2(RingScalar a, RingScalar b, RingScalar c, RingScalar d) {
  return RingMatrix::from_rows({{a, b}, {c, d}});
}

// one-qubit operators written out from their entries
RingScalar w(int k) { return RingScalar::omega_power(k); }
const RingScalar r2inv = RingScalar(1, 1);
RingMatrix X() { return m2(0, 1, 1, 0); }
RingMatrix Z() { return m2(1, 0, 0, -1); }
RingMatrix S() { return m2(1, 0, 0, w(2)); }
RingMatrix H() { return r2inv * m2(1, 1, 1, -1); }
RingMatrix F() {
  RingScalar a(RingInt(1) + RingInt::isqrt2()), d(RingInt(-1) + RingInt::isqrt2());
  return RingScalar::half() * m2(a, 1, 1, d);
}
RingMatrix I2() { return RingMatrix::identity(2); }

struct Case {
  Circuit circuit;
  RingMatrix expected;  // over every wire, or the data wires for clean circuits
};

struct Entry {
  std::string name;
  int min_width;
  std::function<Case(int)> build;
};

Case emitted(int width, GateSetTag gs, const std::function<void(Emitter&)>& f, RingMatrix expected) {
  Emitter e(gs, width);
  f(e);
  Circuit c;
  c.n_data = width;
  c.gates = std::move(e.gates);
  c.phase = e.phase;
  return {std::move(c), std::move(expected)};
}

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int i = a; i <= b; ++i) v.push_back(i);
  return v;
}

// fixed one-wire identity on wire 1, idle wires after it
Entry one_wire(std::string name, GateSetTag gs, std::function<void(Emitter&, int)> f, std::function<RingMatrix()> u) {
  return {std::move(name), 1, [=](int width) {
            return emitted(width, gs, [&](Emitter& e) { f(e, 1); }, controlled_on(u(), {}, {1}, width));
          }};
}

// k controls grow with the width; `spare` idle wires follow the target
Entry family(std::string name, GateSetTag gs, int k_min, int spare,
             std::function<void(Emitter&, const std::vector<int>&, int)> f, std::function<RingMatrix()> u) {
  return {std::move(name), k_min + 1 + spare, [=](int width) {
            int k = width - 1 - spare;
            auto ctrls = range(1, k);
            return emitted(width, gs, [&](Emitter& e) { f(e, ctrls, k + 1); },
                           controlled_on(u(), ctrls, {k + 1}, width));
          }};
}

// single control, extra width becomes idle wires
Entry single(std::string name, GateSetTag gs, int spare, std::function<void(Emitter&, int, int)> f,
             std::function<RingMatrix()> u) {
  return {std::move(name), 2 + spare, [=](int width) {
            return emitted(width, gs, [&](Emitter& e) { f(e, 1, 2); }, controlled_on(u(), {1}, {2}, width));
          }};
}

std::vector<Entry> catalog() {
  using G = GateSetTag;
  std::vector<Entry> v;
  v.push_back(one_wire("F^2 = iH", G::IMAG, [](Emitter& e, int t) { e.seq({GateKind::F, GateKind::F}, t); },
                       [] { return w(2) * H(); }));
  v.push_back(one_wire("F^6 = -iH", G::IMAG,
                       [](Emitter& e, int t) {
                         for (int i = 0; i < 6; ++i) e.g(GateKind::F, {t});
                       },
                       [] { return w(6) * H(); }));
  v.push_back(one_wire("F = SHTSHTSHS w^-1", G::IMAG,
                       [](Emitter& e, int t) {
                         using K = GateKind;
                         e.seq({K::S, K::H, K::S, K::T, K::H, K::S, K::T, K::H, K::S}, t);
                         e.phase = 7;
                       },
                       F));
  v.push_back(one_wire("w = SHSHSH", G::SUPGAUSS,
                       [](Emitter& e, int t) {
                         for (int i = 0; i < 3; ++i) e.seq({GateKind::H, GateKind::S}, t);
                       },
                       [] { return w(1) * I2(); }));
  v.push_back(one_wire("iX = (wH)S^2(wH)", G::GAUSS, [](Emitter& e, int t) { e.mc_ix({}, t); },
                       [] { return w(2) * X(); }));
  v.push_back(one_wire("(ZXF)^2 = I", G::IMAG,
                       [](Emitter& e, int t) {
                         for (int i = 0; i < 2; ++i) e.seq({GateKind::F, GateKind::X, GateKind::Z}, t);
                       },
                       I2));
  v.push_back(one_wire("(XZ)^2 = -I", G::IMAG,
                       [](Emitter& e, int t) {
                         e.mc_xz({}, t);
                         e.mc_xz({}, t);
                       },
                       [] { return RingScalar(-1) * I2(); }));

  v.push_back(family("CZ by HH conjugation", G::INT, 1, 1, [](Emitter& e, auto& c, int t) { e.mcz(c, t); }, Z));
  v.push_back(family("CZ by H conjugation", G::SUPINT, 1, 0, [](Emitter& e, auto& c, int t) { e.mcz(c, t); }, Z));
  v.push_back(family("CZ by F^2 conjugation", G::IMAG, 1, 0, [](Emitter& e, auto& c, int t) { e.mcz(c, t); }, Z));
  v.push_back(family("CZ by wH conjugation", G::GAUSS, 1, 0, [](Emitter& e, auto& c, int t) { e.mcz(c, t); }, Z));
  v.push_back(single("CS with a dirty wire", G::GAUSS, 1, [](Emitter& e, int c, int t) { e.cs1(c, t); }, S));
  v.push_back(single("C(wH) from CS", G::GAUSS, 1, [](Emitter& e, int c, int t) { e.cwh1(c, t); },
                     [] { return w(1) * H(); }));
  v.push_back(single("CF", G::IMAG, 0, [](Emitter& e, int c, int t) { e.cf1(c, t); }, F));
  v.push_back(single("CH", G::REAL, 0, [](Emitter& e, int c, int t) { e.g(GateKind::CH, {c, t}); }, H));
  v.push_back({"C(H x H) with a dirty wire", 4, [](int width) {
                 return emitted(width, G::INT, [](Emitter& e) { e.chh1(1, 2, 3); },
                                controlled_on(kron(H(), H()), {1}, {2, 3}, width));
               }});
  v.push_back(family("MCX with a dirty wire", G::INT, 3, 1, [](Emitter& e, auto& c, int t) { e.mcx(c, t); }, X));
  v.push_back({"Gray-code transposition", 3, [](int width) {
                 size_t dim = size_t{1} << width;
                 std::vector<size_t> img(dim);
                 for (size_t i = 0; i < dim; ++i) img[i] = i;
                 std::swap(img[1], img[dim - 2]);
                 // a dirty wire once the chain needs C^3 X
                 int extra = width >= 4 ? 1 : 0;
                 Emitter e(G::INT, width + extra);
                 e.transposition(1, dim - 2, width);
                 Circuit c;
                 c.n_data = width;
                 c.n_ancilla = extra;
                 c.ancilla_kind = AncillaKind::Dirty;
                 c.gates = std::move(e.gates);
                 return Case{std::move(c), permutation_matrix(img)};
               }});
  for (auto [bg, name, u] : {std::tuple{BaseGate::Z, "clean-ancilla sandwich C^kZ", std::function<RingMatrix()>(Z)},
                             std::tuple{BaseGate::HH, "clean-ancilla sandwich C^k(H x H)",
                                        std::function<RingMatrix()>([] { return kron(H(), H()); })}}) {
    int nt = bg == BaseGate::HH ? 2 : 1;
    int kmin = bg == BaseGate::HH ? 3 : 2;
    BaseGate b = bg;
    v.push_back({name, kmin + nt, [b, nt, u](int width) {
                   int k = width - nt;
                   Circuit c = control_extend(b, k, GateSetTag::INT);
                   return Case{c, controlled_on(u(), range(1, k), range(k + 1, k + nt), width)};
                 }});
  }

  v.push_back(family("C^k(ZXF) from X(ZXF)X(ZXF)X = ZXF", G::IMAG, 1, 0,
                     [](Emitter& e, auto& c, int t) { e.mc_zxf(c, t); }, [] { return Z() * X() * F(); }));
  v.push_back(family("two-level ZX without ancillas", G::IMAG, 2, 0,
                     [](Emitter& e, auto& c, int t) { e.mc_zx(c, t); }, [] { return Z() * X(); }));
  v.push_back(family("two-level XZ without ancillas", G::IMAG, 2, 0,
                     [](Emitter& e, auto& c, int t) { e.mc_xz(c, t); }, [] { return X() * Z(); }));
  v.push_back(family("two-level ZF without ancillas", G::IMAG, 2, 0,
                     [](Emitter& e, auto& c, int t) { e.mc_zf(c, t); }, [] { return Z() * F(); }));
  v.push_back(family("two-level FZ without ancillas", G::IMAG, 2, 0,
                     [](Emitter& e, auto& c, int t) { e.mc_fz(c, t); }, [] { return F() * Z(); }));
  v.push_back(family("two-level iX without ancillas", G::GAUSS, 2, 0,
                     [](Emitter& e, auto& c, int t) { e.mc_ix(c, t); }, [] { return w(2) * X(); }));
  v.push_back(family("two-level iZ without ancillas", G::GAUSS, 2, 0,
                     [](Emitter& e, auto& c, int t) { e.mc_iz(c, t); }, [] { return w(2) * Z(); }));
  v.push_back(single("C(wSH) with CS", G::GAUSS, 1, [](Emitter& e, int c, int t) { e.mc_wsh({c}, t); },
                     [] { return w(1) * S() * H(); }));
  v.push_back(single("C(wHS) with CS", G::GAUSS, 1, [](Emitter& e, int c, int t) { e.mc_whs({c}, t); },
                     [] { return w(1) * H() * S(); }));
  v.push_back(family("two-level wSH without ancillas", G::GAUSS, 2, 0,
                     [](Emitter& e, auto& c, int t) { e.mc_wsh(c, t); }, [] { return w(1) * S() * H(); }));
  v.push_back(family("two-level wHS without ancillas", G::GAUSS, 2, 0,
                     [](Emitter& e, auto& c, int t) { e.mc_whs(c, t); }, [] { return w(1) * H() * S(); }));
  v.push_back(family("C^kS with two dirty wires", G::GAUSS, 2, 2,
                     [](Emitter& e, auto& c, int t) { e.mc_s_two_dirty(c, t); }, S));
  return v;
}

IdentityCheck check(const Entry& entry, int width) {
  IdentityCheck r{entry.name, width, false, {}};
  try {
    Case cs = entry.build(width);
    if (cs.circuit.n_ancilla > 0) {
      Evaluation ev = evaluate(cs.circuit);
      if (!ev.ancilla_ok) {
        r.detail = ev.diagnostic;
        return r;
      }
      r.pass = ev.unitary == cs.expected;
    } else {
      r.pass = evaluate_full(cs.circuit) == cs.expected;
    }
    if (!r.pass) r.detail = "circuit value differs from the operator";
  } catch (const std::exception& ex) {
    r.detail = ex.what();
  }
  return r;
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite() {
  std::vector<IdentityCheck> out;
  for (const auto& e : catalog()) {
    out.push_back(check(e, e.min_width));
    out.push_back(check(e, e.min_width + 1));
  }
  return out;
}

}  // namespace ringsynth
