#pragma once

#include <functional>

#include "ringsynth/synth.hpp"

namespace ringsynth::detail {

// ops returned in application order
// cur is the working matrix, col the column being reduced
using PassFn = std::function<std::vector<MultiLevelOp>(const std::vector<RingInt>& u, size_t dim,
                                                       const RingMatrix& cur, size_t col)>;
using BaseFn = std::function<std::vector<MultiLevelOp>(size_t target, size_t row, const RingInt& unit, size_t dim)>;

class Engine {
 public:
  Engine(const RingMatrix& v, DenomBase base, IntRing ring) : m_(v), base_(base), ring_(ring) {}

  void apply(const MultiLevelOp& op, size_t from_col = 0);
  // drive column col to (unit) e_target
  void reduce_column(size_t col, size_t target, const PassFn& pass, const BaseFn& base);
  void reduce_all(const PassFn& pass, const BaseFn& base);

  const RingMatrix& matrix() const { return m_; }
  size_t dim() const { return m_.rows(); }
  // written order G_1 ... G_l
  GeneratorWord word() const;
  std::vector<ColumnTrace>& trace() { return trace_; }

 private:
  RingMatrix m_;
  DenomBase base_;
  IntRing ring_;
  std::vector<MultiLevelOp> applied_;
  std::vector<ColumnTrace> trace_;
};

PassFn integral_pass();
PassFn real_pass();
PassFn imaginary_pass();
PassFn gaussian_pass();
BaseFn sign_base();
BaseFn phase_base();

// Pairs rows greedily. options(r1, r2) lists (option, 2x2 kernel) that reduce
// the pair; the pick keeps the rt2 exponents of the two rows over the later columns lowest.
struct PairPick {
  size_t r1, r2, option;
};
using PairOptions = std::function<std::vector<std::pair<size_t, RingMatrix>>(size_t r1, size_t r2)>;
std::vector<PairPick> pick_pairs(std::vector<size_t> rows, const RingMatrix& cur, size_t col,
                                 const PairOptions& options);

// runs the full verification and closure check
SynthResult finish(GateSetTag gs, bool ancilla_free, const RingMatrix& input, Engine& e);

void require_square_unitary(const RingMatrix& v);
void require_ring(const RingMatrix& v, RingTag t, const char* who);

// levels are 1-based; rows 0-based
inline int lvl(size_t row) { return static_cast<int>(row) + 1; }

}  // namespace ringsynth::detail
