#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ringsynth/gateset.hpp"
#include "ringsynth/matrix.hpp"

namespace ringsynth {

// HH is H tensor H on two wires, the two-qubit generator of the integral set.
enum class GateKind { X, CX, CCX, H, CH, S, Sdg, T, Tdg, F, Fdg, WH, WHdg, Z, HH };

std::string_view gate_name(GateKind k);
GateKind parse_gate_name(std::string_view s);
size_t gate_arity(GateKind k);
size_t gate_controls(GateKind k);
GateKind gate_inverse(GateKind k);
bool gate_is_permutation(GateKind k);
// matrix on the gate's own wires, first listed wire most significant
RingMatrix gate_kernel(GateKind k);
bool gateset_allows(GateSetTag g, GateKind k);

struct Gate {
  GateKind kind;
  std::vector<int> wires;  // 1-based, controls first
  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class AncillaKind { Clean, Dirty };

// Wire 1 is the most significant bit; ancillas are wires n_data+1 .. n_data+n_ancilla.
struct Circuit {
  int n_data = 0;
  int n_ancilla = 0;
  AncillaKind ancilla_kind = AncillaKind::Clean;
  int phase = 0;  // global factor w^phase, 0..7
  std::vector<Gate> gates;

  int width() const { return n_data + n_ancilla; }
  void add(GateKind k, std::initializer_list<int> wires) { gates.push_back({k, wires}); }
  void add(GateKind k, std::vector<int> wires) { gates.push_back({k, std::move(wires)}); }
  void append(const Circuit& other);
  void add_phase(int k) { phase = ((phase + k) % 8 + 8) % 8; }

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

void validate(const Gate& g, int width);
Circuit inverse(const Circuit& c);

RingMatrix gate_matrix(const Gate& g, int total_wires);

struct Evaluation {
  RingMatrix unitary;  // on the data wires, phase included
  bool ancilla_ok = true;
  std::string diagnostic;
};

// kernel evaluation; clean ancillas only evaluate the ancilla-zero columns
Evaluation evaluate(const Circuit& c, bool parallel = true);
// product of tensor-embedded gate matrices, kept as the oracle for the kernel
Evaluation evaluate_reference(const Circuit& c);
// full matrix over every wire
RingMatrix evaluate_full(const Circuit& c, bool parallel = true);
RingMatrix evaluate_full_reference(const Circuit& c);

std::string serialize(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace ringsynth
