#pragma once

#include <string>
#include <vector>

#include "ringsynth/matrix.hpp"

namespace ringsynth {

enum class GenKind {
  NEG1, X2, H2, HH4, F2, I4, WH2, GLOBAL_IH, GLOBAL_OMEGA,
  XZ2, ZX2, FZ2, ZF2, IZ2, IX2, WSH2, WHS2, Z2
};

std::string_view gen_name(GenKind k);
GenKind parse_gen_name(std::string_view s);
// number of levels, 0 for the global kinds
size_t gen_arity(GenKind k);
bool gen_has_exponent(GenKind k);
bool is_global(GenKind k);

// Def of the small matrix carried on the levels; exponent used by I4 and IZ2
RingMatrix kernel(GenKind k, int exponent = 1);

struct MultiLevelOp {
  GenKind kind;
  std::vector<int> levels;  // 1-based
  int exponent = 1;
  size_t dim = 0;

  friend bool operator==(const MultiLevelOp&, const MultiLevelOp&) = default;
};

// validates arity, distinctness and range
MultiLevelOp make_op(GenKind k, std::vector<int> levels, size_t dim, int exponent = 1);
RingMatrix embed(const MultiLevelOp& op);
// m <- embed(op) * m, touching only the level rows; columns before col_begin are skipped
void apply_left(const MultiLevelOp& op, RingMatrix& m, size_t col_begin = 0);

struct GeneratorWord {
  size_t dim = 0;
  std::vector<MultiLevelOp> ops;  // G_1 ... G_l as written
};

// G_1 G_2 ... G_l
RingMatrix word_product(const GeneratorWord& w);

std::string format_op(const MultiLevelOp& op);
std::string format_word(const GeneratorWord& w);
GeneratorWord parse_word(std::string_view text);

}  // namespace ringsynth
