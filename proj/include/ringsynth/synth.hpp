#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ringsynth/gateset.hpp"
#include "ringsynth/generator.hpp"

namespace ringsynth {

enum class AncillaPolicy { AllowOne, AncillaFree };

struct SynthRequest {
  RingMatrix matrix;
  std::optional<GateSetTag> gateset;  // empty: pick from classification
  AncillaPolicy policy = AncillaPolicy::AllowOne;
};

// lde of one column before each reduction pass, ending in 0
struct ColumnTrace {
  size_t column;  // 1-based
  DenomBase base;
  std::vector<unsigned> lde;
};

struct SynthResult {
  GateSetTag gateset;
  bool ancilla_free = false;
  GeneratorWord word;  // G_1 ... G_l V = I
  RingScalar residual_phase = 1;
  RingMatrix certificate;  // recomputed G_1 ... G_l V
  std::vector<ColumnTrace> trace;
};

// Single-step lemmas. Each returns the chosen exponents and the image of u,
// which is integral and divisible by the base.
struct QuadrupleReduction {
  std::array<int, 4> m;       // signs (-1)^m_k
  std::array<RingInt, 4> out; // (H x H) (-1)^m u
};
QuadrupleReduction reduce_quadruple_integral(const std::array<RingInt, 4>& u);

std::array<RingInt, 2> reduce_pair_real(const RingInt& u1, const RingInt& u2);

struct ImaginaryPairReduction {
  std::array<int, 4> m;  // F^m0 (-1)_[1]^m1 (-1)_[2]^m2 X^m3
  std::array<RingInt, 2> out;
};
ImaginaryPairReduction reduce_pair_imaginary(const RingInt& u1, const RingInt& u2);
// image of u under the imaginary prefix, or nothing if not divisible by i rt2
std::optional<std::array<RingInt, 2>> imaginary_prefix_image(const std::array<int, 4>& m, const RingInt& u1,
                                                             const RingInt& u2);

struct GaussianPairReduction {
  std::array<int, 2> m;  // wH i_[1]^m1 i_[2]^m2
  std::array<RingInt, 2> out;
};
GaussianPairReduction reduce_pair_gaussian(const RingInt& u1, const RingInt& u2);

// Column reduction for the integral case; word maps v to e_j (j 1-based)
GeneratorWord reduce_column_integral(const std::vector<RingScalar>& v, size_t j);

SynthResult synth_integral(const RingMatrix& v);
SynthResult synth_superintegral(const RingMatrix& v);
SynthResult synth_real(const RingMatrix& v);
SynthResult synth_imaginary(const RingMatrix& v);
SynthResult synth_imaginary_ancillafree(const RingMatrix& v);
SynthResult synth_gaussian(const RingMatrix& v);
SynthResult synth_gaussian_ancillafree(const RingMatrix& v);
SynthResult synth_supergaussian(const RingMatrix& v);
SynthResult synthesize(const SynthRequest& req);

// dimension from which the ancilla-free corollaries apply
inline constexpr size_t kAncillaFreeMinDim = 16;

}  // namespace ringsynth
