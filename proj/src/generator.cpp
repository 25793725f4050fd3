#include "ringsynth/generator.hpp"

#include <algorithm>
#include <sstream>

namespace ringsynth {

namespace {

struct KindInfo {
  GenKind kind;
  const char* name;
  size_t arity;
  bool exponent;
};

constexpr KindInfo kKinds[] = {
    {GenKind::NEG1, "NEG1", 1, false},      {GenKind::X2, "X2", 2, false},
    {GenKind::H2, "H2", 2, false},          {GenKind::HH4, "HH4", 4, false},
    {GenKind::F2, "F2", 2, false},          {GenKind::I4, "I4", 1, true},
    {GenKind::WH2, "WH2", 2, false},        {GenKind::GLOBAL_IH, "GLOBAL_IH", 0, false},
    {GenKind::GLOBAL_OMEGA, "GLOBAL_OMEGA", 0, false},
    {GenKind::XZ2, "XZ2", 2, false},        {GenKind::ZX2, "ZX2", 2, false},
    {GenKind::FZ2, "FZ2", 2, false},        {GenKind::ZF2, "ZF2", 2, false},
    {GenKind::IZ2, "IZ2", 2, true},         {GenKind::IX2, "IX2", 2, false},
    {GenKind::WSH2, "WSH2", 2, false},      {GenKind::WHS2, "WHS2", 2, false},
    {GenKind::Z2, "Z2", 4, false},
};

const KindInfo& info(GenKind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i;
  throw DomainError("unknown generator kind");
}

RingScalar w(int k) { return RingScalar::omega_power(k); }
RingScalar rt2inv() { return RingScalar(1, 1); }

RingMatrix m2(RingScalar a, RingScalar b, RingScalar c, RingScalar d) {
  return RingMatrix::from_rows({{a, b}, {c, d}});
}

RingMatrix hadamard() { return rt2inv() * m2(1, 1, 1, -1); }

RingMatrix fgate() {
  RingInt isq = RingInt::isqrt2();
  return RingScalar::half() * m2(RingScalar(RingInt(1) + isq), 1, 1, RingScalar(RingInt(-1) + isq));
}

RingMatrix zgate() { return m2(1, 0, 0, -1); }
RingMatrix xgate() { return m2(0, 1, 1, 0); }
RingMatrix sgate() { return m2(1, 0, 0, w(2)); }

}  // namespace

std::string_view gen_name(GenKind k) { return info(k).name; }
size_t gen_arity(GenKind k) { return info(k).arity; }
bool gen_has_exponent(GenKind k) { return info(k).exponent; }
bool is_global(GenKind k) { return k == GenKind::GLOBAL_IH || k == GenKind::GLOBAL_OMEGA; }

GenKind parse_gen_name(std::string_view s) {
  for (const auto& i : kKinds)
    if (s == i.name) return i.kind;
  throw ParseError("unknown generator '" + std::string(s) + "'");
}

namespace {

RingMatrix build_kernel(GenKind k, int e) {
  switch (k) {
    case GenKind::NEG1: return RingMatrix::from_rows({{-1}});
    case GenKind::I4: return RingMatrix::from_rows({{w(2 * e)}});
    case GenKind::X2: return xgate();
    case GenKind::H2: return hadamard();
    case GenKind::HH4: return kron(hadamard(), hadamard());
    case GenKind::F2: return fgate();
    case GenKind::WH2: return w(1) * hadamard();
    case GenKind::XZ2: return xgate() * zgate();
    case GenKind::ZX2: return zgate() * xgate();
    case GenKind::FZ2: return fgate() * zgate();
    case GenKind::ZF2: return zgate() * fgate();
    case GenKind::IZ2: return m2(w(2 * e), 0, 0, w(-2 * e));
    case GenKind::IX2: return m2(0, w(2), w(2), 0);
    case GenKind::WSH2: return w(1) * (sgate() * hadamard());
    case GenKind::WHS2: return w(1) * (hadamard() * sgate());
    case GenKind::Z2: return kron(RingMatrix::identity(2), zgate());
    case GenKind::GLOBAL_IH: return hadamard();
    case GenKind::GLOBAL_OMEGA: return RingMatrix::from_rows({{w(1)}});
  }
  throw DomainError("kernel: unknown kind");
}

constexpr size_t kKindCount = static_cast<size_t>(GenKind::Z2) + 1;

const RingMatrix& cached_kernel(GenKind k, int e) {
  static const auto table = [] {
    std::array<std::array<RingMatrix, 4>, kKindCount> t;
    for (size_t i = 0; i < kKindCount; ++i)
      for (int x = 0; x < 4; ++x) t[i][x] = build_kernel(static_cast<GenKind>(i), x);
    return t;
  }();
  return table[static_cast<size_t>(k)][((e % 4) + 4) % 4];
}

}  // namespace

RingMatrix kernel(GenKind k, int e) { return cached_kernel(k, e); }

MultiLevelOp make_op(GenKind k, std::vector<int> levels, size_t dim, int exponent) {
  const auto& i = info(k);
  if (levels.size() != i.arity)
    throw DomainError(std::string(i.name) + " takes " + std::to_string(i.arity) + " levels, got " +
                      std::to_string(levels.size()));
  for (size_t a = 0; a < levels.size(); ++a) {
    if (levels[a] < 1 || static_cast<size_t>(levels[a]) > dim)
      throw DomainError(std::string(i.name) + ": level " + std::to_string(levels[a]) + " out of range 1.." +
                        std::to_string(dim));
    for (size_t b = 0; b < a; ++b)
      if (levels[a] == levels[b]) throw DomainError(std::string(i.name) + ": repeated level");
  }
  if (k == GenKind::GLOBAL_IH && dim % 2) throw DomainError("GLOBAL_IH needs even dimension");
  if (i.exponent)
    exponent = ((exponent % 4) + 4) % 4;
  else if (exponent != 1)
    throw DomainError(std::string(i.name) + " takes no exponent");
  return MultiLevelOp{k, std::move(levels), exponent, dim};
}

RingMatrix embed(const MultiLevelOp& op) {
  RingMatrix m = RingMatrix::identity(op.dim);
  apply_left(op, m);
  return m;
}

void apply_left(const MultiLevelOp& op, RingMatrix& m, size_t col_begin) {
  if (m.rows() != op.dim) throw DomainError("apply_left: dimension mismatch");
  if (op.kind == GenKind::GLOBAL_OMEGA) {
    RingScalar s = w(1);
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = col_begin; c < m.cols(); ++c) m(r, c) = s * m(r, c);
    return;
  }
  std::vector<int> rows = op.levels;
  std::vector<std::vector<int>> blocks;
  if (op.kind == GenKind::GLOBAL_IH) {
    for (size_t j = 0; j + 1 < op.dim; j += 2) blocks.push_back({static_cast<int>(j + 1), static_cast<int>(j + 2)});
  } else {
    blocks.push_back(rows);
  }
  const RingMatrix& K = cached_kernel(op.kind, op.exponent);
  const size_t a = K.rows();
  std::vector<RingScalar> tmp(a);
  for (const auto& lv : blocks) {
    for (size_t c = col_begin; c < m.cols(); ++c) {
      for (size_t r = 0; r < a; ++r) {
        RingScalar s;
        for (size_t t = 0; t < a; ++t) {
          const RingScalar& x = m(lv[t] - 1, c);
          if (x.is_zero() || K(r, t).is_zero()) continue;
          s += K(r, t) * x;
        }
        tmp[r] = std::move(s);
      }
      for (size_t r = 0; r < a; ++r) m(lv[r] - 1, c) = std::move(tmp[r]);
    }
  }
}

RingMatrix word_product(const GeneratorWord& w) {
  RingMatrix p = RingMatrix::identity(w.dim);
  for (auto it = w.ops.rbegin(); it != w.ops.rend(); ++it) apply_left(*it, p);
  return p;
}

std::string format_op(const MultiLevelOp& op) {
  std::string s(gen_name(op.kind));
  for (int l : op.levels) s += " " + std::to_string(l);
  if (gen_has_exponent(op.kind) && op.exponent != 1) s += " ^" + std::to_string(op.exponent);
  return s;
}

std::string format_word(const GeneratorWord& w) {
  std::string s = "gens dim=" + std::to_string(w.dim) + "\n";
  for (const auto& op : w.ops) s += format_op(op) + "\n";
  return s;
}

GeneratorWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  GeneratorWord w;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (!header) {
      std::string d;
      if (tok != "gens" || !(ls >> d) || d.rfind("dim=", 0) != 0)
        throw ParseError("expected header 'gens dim=N'", lineno);
      try {
        w.dim = std::stoul(d.substr(4));
      } catch (...) {
        throw ParseError("bad dimension '" + d + "'", lineno);
      }
      header = true;
      continue;
    }
    try {
      GenKind k = parse_gen_name(tok);
      std::vector<int> levels;
      int exponent = 1;
      while (ls >> tok) {
        if (tok[0] == '^')
          exponent = std::stoi(tok.substr(1));
        else
          levels.push_back(std::stoi(tok));
      }
      w.ops.push_back(make_op(k, std::move(levels), w.dim, exponent));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    } catch (const std::exception&) {
      throw ParseError("malformed generator line", lineno);
    }
  }
  if (!header) throw ParseError("missing 'gens dim=N' header");
  return w;
}

}  // namespace ringsynth
