#pragma once

#include <string>
#include <vector>

#include "ringsynth/circuit.hpp"

namespace ringsynth {

// C^k U: u acts on the target wires when every control is 1; wire 1 is the MSB
RingMatrix controlled_on(const RingMatrix& u, const std::vector<int>& controls, const std::vector<int>& targets,
                         int width);

struct IdentityCheck {
  std::string name;
  int width = 0;
  bool pass = false;
  std::string detail;
};

// every displayed circuit identity, at its smallest width and one wider
std::vector<IdentityCheck> run_identity_suite();

}  // namespace ringsynth
