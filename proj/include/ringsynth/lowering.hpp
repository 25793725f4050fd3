#pragma once

#include "ringsynth/circuit.hpp"
#include "ringsynth/generator.hpp"

namespace ringsynth {

enum class AncillaMode { OneClean, None };

struct LoweringPlan {
  int n_qubits = 0;
  AncillaMode mode = AncillaMode::OneClean;
  GateSetTag gateset = GateSetTag::INT;
  int width() const { return n_qubits + (mode == AncillaMode::OneClean ? 1 : 0); }
};

// Gates that control_extend knows a singly-controlled template for.
enum class BaseGate { X, Z, S, Sdg, H, F, WH, HH };

// n data wires plus one dirty ancilla when n >= 4
Circuit lower_permutation(const RingMatrix& p);
// C^k X on the listed wires; other wires of the circuit (at least `dirty`) serve as dirty ancillas
Circuit mcx_dirty(const std::vector<int>& controls, int target, int dirty);
// C^n W on wires: controls 1..n, targets n+1.., clean ancilla last
Circuit control_extend(BaseGate w, int n_controls, GateSetTag gs);

bool generator_supported(GenKind k, GateSetTag gs);
Circuit lower_generator(const MultiLevelOp& g, GateSetTag gs, AncillaMode mode);
Circuit lower_generator_ancillafree(const MultiLevelOp& g, GateSetTag gs);
// circuit for the product G_1 ... G_l
Circuit lower_word(const GeneratorWord& w, GateSetTag gs, AncillaMode mode);
// circuit for the synthesized matrix, the inverse of the word product
Circuit lower_synthesis(const GeneratorWord& w, GateSetTag gs, AncillaMode mode);

// merge single-wire powers and rewrite every gate into the set
Circuit legalize(const Circuit& c, GateSetTag gs);
bool circuit_in_gateset(const Circuit& c, GateSetTag gs);

}  // namespace ringsynth
