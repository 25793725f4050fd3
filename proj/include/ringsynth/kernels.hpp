#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ringsynth/circuit.hpp"

namespace ringsynth {

// A set of basis columns pushed through a gate list. Each column keeps one
// shared rt2 exponent; permutation gates only touch a row map common to all
// columns.
class StateBlock {
 public:
  StateBlock(int total_wires, const std::vector<size_t>& basis_columns);

  void apply(const Gate& g, bool parallel = true);
  void apply_all(const std::vector<Gate>& gates, bool parallel = true);
  void multiply_phase(int omega_power);

  size_t dim() const { return dim_; }
  size_t columns() const { return cols_.size(); }
  RingMatrix matrix() const;

  using Small = std::array<int64_t, 4>;

 private:
  // entries indexed by physical row; int64 until the coefficients get large
  struct Column {
    std::vector<Small> small;
    std::vector<RingInt> big;
    bool is_big = false;
    int bits = 1;  // upper bound on coefficient bit length while small
    unsigned k = 0;
  };
  void permute(const Gate& g, std::vector<size_t>& rowmap) const;
  void step(Column& col, const std::vector<size_t>& rowmap, const Gate& g);
  void reduce(Column& c);
  void promote(Column& c);
  RingInt entry(const Column& c, size_t physical_row) const;

  int wires_;
  size_t dim_;
  std::vector<size_t> rowmap_;  // logical row -> physical row
  std::vector<Column> cols_;
};

RingMatrix evaluate_columns(const Circuit& c, const std::vector<size_t>& basis_columns, bool parallel = true);

}  // namespace ringsynth
