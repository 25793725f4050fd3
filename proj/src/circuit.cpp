#include "ringsynth/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "ringsynth/kernels.hpp"

namespace ringsynth {

namespace {

struct GateInfo {
  GateKind kind;
  const char* name;
  size_t arity;
  size_t controls;
};

constexpr GateInfo kGates[] = {
    {GateKind::X, "X", 1, 0},     {GateKind::CX, "CX", 2, 1},     {GateKind::CCX, "CCX", 3, 2},
    {GateKind::H, "H", 1, 0},     {GateKind::CH, "CH", 2, 1},     {GateKind::S, "S", 1, 0},
    {GateKind::Sdg, "Sdg", 1, 0}, {GateKind::T, "T", 1, 0},       {GateKind::Tdg, "Tdg", 1, 0},
    {GateKind::F, "F", 1, 0},     {GateKind::Fdg, "Fdg", 1, 0},   {GateKind::WH, "WH", 1, 0},
    {GateKind::WHdg, "WHdg", 1, 0}, {GateKind::Z, "Z", 1, 0},     {GateKind::HH, "HH", 2, 0},
};

const GateInfo& info(GateKind k) {
  for (const auto& g : kGates)
    if (g.kind == k) return g;
  throw DomainError("unknown gate kind");
}

RingMatrix one(RingScalar a, RingScalar b, RingScalar c, RingScalar d) {
  return RingMatrix::from_rows({{a, b}, {c, d}});
}

RingMatrix controlled(const RingMatrix& u) {
  size_t n = u.rows();
  RingMatrix m = RingMatrix::identity(2 * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(n + i, n + j) = u(i, j);
  return m;
}

}  // namespace

std::string_view gate_name(GateKind k) { return info(k).name; }
size_t gate_arity(GateKind k) { return info(k).arity; }
size_t gate_controls(GateKind k) { return info(k).controls; }

GateKind parse_gate_name(std::string_view s) {
  for (const auto& g : kGates)
    if (s == g.name) return g.kind;
  throw ParseError("unknown gate '" + std::string(s) + "'");
}

GateKind gate_inverse(GateKind k) {
  switch (k) {
    case GateKind::S: return GateKind::Sdg;
    case GateKind::Sdg: return GateKind::S;
    case GateKind::T: return GateKind::Tdg;
    case GateKind::Tdg: return GateKind::T;
    case GateKind::F: return GateKind::Fdg;
    case GateKind::Fdg: return GateKind::F;
    case GateKind::WH: return GateKind::WHdg;
    case GateKind::WHdg: return GateKind::WH;
    default: return k;
  }
}

bool gate_is_permutation(GateKind k) { return k == GateKind::X || k == GateKind::CX || k == GateKind::CCX; }

RingMatrix gate_kernel(GateKind k) {
  const RingScalar r = RingScalar(1, 1);
  auto w = [](int p) { return RingScalar::omega_power(p); };
  RingMatrix h = r * one(1, 1, 1, -1);
  RingMatrix x = one(0, 1, 1, 0);
  RingMatrix f = RingScalar::half() *
                 one(RingScalar(RingInt(1) + RingInt::isqrt2()), 1, 1, RingScalar(RingInt(-1) + RingInt::isqrt2()));
  switch (k) {
    case GateKind::X: return x;
    case GateKind::CX: return controlled(x);
    case GateKind::CCX: return controlled(controlled(x));
    case GateKind::H: return h;
    case GateKind::CH: return controlled(h);
    case GateKind::S: return one(1, 0, 0, w(2));
    case GateKind::Sdg: return one(1, 0, 0, w(6));
    case GateKind::T: return one(1, 0, 0, w(1));
    case GateKind::Tdg: return one(1, 0, 0, w(7));
    case GateKind::F: return f;
    case GateKind::Fdg: return dagger(f);
    case GateKind::WH: return w(1) * h;
    case GateKind::WHdg: return w(7) * h;
    case GateKind::Z: return one(1, 0, 0, -1);
    case GateKind::HH: return kron(h, h);
  }
  throw DomainError("gate_kernel: unknown gate");
}

bool gateset_allows(GateSetTag g, GateKind k) {
  if (gate_is_permutation(k)) return true;
  switch (g) {
    case GateSetTag::INT: return k == GateKind::HH;
    case GateSetTag::SUPINT: return k == GateKind::H;
    case GateSetTag::REAL: return k == GateKind::H || k == GateKind::CH;
    case GateSetTag::IMAG: return k == GateKind::F;
    case GateSetTag::GAUSS: return k == GateKind::WH || k == GateKind::S;
    case GateSetTag::SUPGAUSS: return k == GateKind::H || k == GateKind::S;
  }
  return false;
}

void validate(const Gate& g, int width) {
  const auto& i = info(g.kind);
  if (g.wires.size() != i.arity)
    throw DomainError(std::string(i.name) + " takes " + std::to_string(i.arity) + " wires, got " +
                      std::to_string(g.wires.size()));
  for (size_t a = 0; a < g.wires.size(); ++a) {
    if (g.wires[a] < 1 || g.wires[a] > width)
      throw DomainError(std::string(i.name) + ": wire " + std::to_string(g.wires[a]) + " out of range 1.." +
                        std::to_string(width));
    for (size_t b = 0; b < a; ++b)
      if (g.wires[a] == g.wires[b]) throw DomainError(std::string(i.name) + ": repeated wire");
  }
}

void Circuit::append(const Circuit& other) {
  if (other.width() > width()) throw DomainError("append: circuit is wider than target");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  add_phase(other.phase);
}

Circuit inverse(const Circuit& c) {
  Circuit r = c;
  r.gates.clear();
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) r.gates.push_back({gate_inverse(it->kind), it->wires});
  r.phase = (8 - c.phase) % 8;
  return r;
}

RingMatrix gate_matrix(const Gate& g, int total_wires) {
  validate(g, total_wires);
  RingMatrix K = gate_kernel(g.kind);
  const size_t a = g.wires.size();
  const size_t dim = size_t{1} << total_wires;
  std::vector<size_t> bit(a);
  for (size_t t = 0; t < a; ++t) bit[t] = size_t{1} << (total_wires - g.wires[t]);
  RingMatrix m(dim, dim);
  for (size_t col = 0; col < dim; ++col) {
    size_t local = 0, rest = col;
    for (size_t t = 0; t < a; ++t) {
      local = (local << 1) | ((col & bit[t]) ? 1 : 0);
      rest &= ~bit[t];
    }
    for (size_t lr = 0; lr < K.rows(); ++lr) {
      if (K(lr, local).is_zero()) continue;
      size_t row = rest;
      for (size_t t = 0; t < a; ++t)
        if ((lr >> (a - 1 - t)) & 1) row |= bit[t];
      m(row, col) = K(lr, local);
    }
  }
  return m;
}

RingMatrix evaluate_full_reference(const Circuit& c) {
  const int w = c.width();
  RingMatrix m = RingMatrix::identity(size_t{1} << w);
  for (const auto& g : c.gates) m = multiply_serial(gate_matrix(g, w), m);
  if (c.phase) m = RingScalar::omega_power(c.phase) * m;
  return m;
}

RingMatrix evaluate_full(const Circuit& c, bool parallel) {
  std::vector<size_t> cols(size_t{1} << c.width());
  for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return evaluate_columns(c, cols, parallel);
}

namespace {

// cols holds the images of the basis columns listed in which
Evaluation extract(const Circuit& c, const RingMatrix& cols, const std::vector<size_t>& which) {
  Evaluation e;
  const size_t nd = size_t{1} << c.n_data;
  const size_t na = size_t{1} << c.n_ancilla;
  e.unitary = RingMatrix(nd, nd);
  if (c.n_ancilla == 0) {
    e.unitary = cols;
    return e;
  }
  auto fail = [&](const std::string& msg) {
    if (e.ancilla_ok) e.diagnostic = msg;
    e.ancilla_ok = false;
  };
  for (size_t ci = 0; ci < which.size(); ++ci) {
    size_t col = which[ci];
    size_t psi = col / na, anc = col % na;
    for (size_t row = 0; row < cols.rows(); ++row) {
      const RingScalar& x = cols(row, ci);
      size_t phi = row / na, ranc = row % na;
      if (ranc != anc) {
        if (!x.is_zero())
          fail("ancilla not preserved: basis column " + std::to_string(col) + " (data " + std::to_string(psi) +
               ", ancilla " + std::to_string(anc) + ") reaches row " + std::to_string(row));
        continue;
      }
      if (anc == 0)
        e.unitary(phi, psi) = x;
      else if (!(e.unitary(phi, psi) == x))
        fail("dirty ancilla: action differs between ancilla states at data column " + std::to_string(psi));
    }
  }
  return e;
}

std::vector<size_t> columns_for(const Circuit& c) {
  const size_t total = size_t{1} << c.width();
  const size_t na = size_t{1} << c.n_ancilla;
  std::vector<size_t> cols;
  for (size_t i = 0; i < total; ++i)
    if (c.n_ancilla == 0 || c.ancilla_kind == AncillaKind::Dirty || i % na == 0) cols.push_back(i);
  return cols;
}

}  // namespace

Evaluation evaluate(const Circuit& c, bool parallel) {
  auto which = columns_for(c);
  return extract(c, evaluate_columns(c, which, parallel), which);
}

Evaluation evaluate_reference(const Circuit& c) {
  auto which = columns_for(c);
  RingMatrix full = evaluate_full_reference(c);
  RingMatrix sub(full.rows(), which.size());
  for (size_t r = 0; r < full.rows(); ++r)
    for (size_t i = 0; i < which.size(); ++i) sub(r, i) = full(r, which[i]);
  return extract(c, sub, which);
}

std::string serialize(const Circuit& c) {
  std::string s = "qubits " + std::to_string(c.n_data) + "\n";
  if (c.n_ancilla > 0)
    s += "ancillas " + std::to_string(c.n_ancilla) + (c.ancilla_kind == AncillaKind::Clean ? " clean" : " dirty") + "\n";
  if (c.phase) s += "phase " + format_scalar(RingScalar::omega_power(c.phase)) + "\n";
  for (const auto& g : c.gates) {
    s += gate_name(g.kind);
    for (int w : g.wires) s += " " + std::to_string(w);
    s += "\n";
  }
  return s;
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  Circuit c;
  bool have_qubits = false, in_body = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (!have_qubits) {
      if (tok != "qubits" || !(ls >> c.n_data) || c.n_data < 0) throw ParseError("expected 'qubits n'", lineno);
      have_qubits = true;
      continue;
    }
    if (!in_body && tok == "ancillas") {
      std::string kind;
      if (!(ls >> c.n_ancilla >> kind) || c.n_ancilla < 0 || (kind != "clean" && kind != "dirty"))
        throw ParseError("expected 'ancillas m clean|dirty'", lineno);
      c.ancilla_kind = kind == "clean" ? AncillaKind::Clean : AncillaKind::Dirty;
      continue;
    }
    if (!in_body && tok == "phase") {
      std::string val;
      ls >> val;
      RingScalar p;
      try {
        p = parse_scalar(val);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
      int found = -1;
      for (int k = 0; k < 8; ++k)
        if (p == RingScalar::omega_power(k)) found = k;
      if (found < 0) throw ParseError("phase must be a power of w", lineno);
      c.phase = found;
      continue;
    }
    in_body = true;
    Gate g;
    try {
      g.kind = parse_gate_name(tok);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    int w;
    while (ls >> w) g.wires.push_back(w);
    if (!ls.eof()) throw ParseError("bad wire index", lineno);
    try {
      validate(g, c.width());
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    }
    c.gates.push_back(std::move(g));
  }
  if (!have_qubits) throw ParseError("missing 'qubits n' header");
  return c;
}

}  // namespace ringsynth
