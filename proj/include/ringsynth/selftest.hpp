#pragma once

#include <string>
#include <vector>

namespace ringsynth {

struct SelfCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// exhaustive residue tables and single-step lemmas
std::vector<SelfCheck> residue_checks();
std::vector<SelfCheck> lemma_checks();
// residue, lemma and circuit-identity suites together
std::vector<SelfCheck> run_selftest();

}  // namespace ringsynth
