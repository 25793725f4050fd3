#pragma once

#include <cstdint>

#include "ringsynth/circuit.hpp"

namespace ringsynth {

// len gates drawn uniformly from the set's gates that fit on n wires
Circuit random_circuit(GateSetTag gs, int n, int len, std::uint64_t seed);
RingMatrix random_matrix(GateSetTag gs, int n, int len, std::uint64_t seed);

}  // namespace ringsynth
