#include "ringsynth/random.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ringsynth {

namespace {

std::vector<GateKind> gates_of(GateSetTag gs, int n) {
  std::vector<GateKind> out;
  for (GateKind k : {GateKind::X, GateKind::CX, GateKind::CCX, GateKind::H, GateKind::CH, GateKind::S, GateKind::F,
                     GateKind::WH, GateKind::HH})
    if (gateset_allows(gs, k) && static_cast<int>(gate_arity(k)) <= n) out.push_back(k);
  return out;
}

}  // namespace

Circuit random_circuit(GateSetTag gs, int n, int len, std::uint64_t seed) {
  if (n < 1) throw DomainError("random circuit needs at least one qubit");
  std::mt19937_64 rng(seed);
  auto kinds = gates_of(gs, n);
  Circuit c;
  c.n_data = n;
  std::vector<int> wires(n);
  std::iota(wires.begin(), wires.end(), 1);
  for (int i = 0; i < len; ++i) {
    GateKind k = kinds[rng() % kinds.size()];
    size_t a = gate_arity(k);
    // partial Fisher-Yates for a distinct wire choice
    for (size_t j = 0; j < a; ++j) std::swap(wires[j], wires[j + rng() % (n - j)]);
    c.add(k, std::vector<int>(wires.begin(), wires.begin() + a));
  }
  return c;
}

RingMatrix random_matrix(GateSetTag gs, int n, int len, std::uint64_t seed) {
  return evaluate(random_circuit(gs, n, len, seed)).unitary;
}

}  // namespace ringsynth
