#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringsynth/rings.hpp"

namespace ringsynth {

// Dense row-major matrix over D[w]. Element access is 0-based; level and
// wire numbers elsewhere are 1-based.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RingMatrix identity(size_t n);
  static RingMatrix from_rows(const std::vector<std::vector<RingScalar>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  RingScalar& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const RingScalar& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<RingScalar>& data() const { return a_; }

  std::vector<RingScalar> column(size_t c) const;
  unsigned max_k() const;

  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<RingScalar> a_;
};

// OpenMP over output rows
RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
RingMatrix multiply_serial(const RingMatrix& a, const RingMatrix& b);
RingMatrix operator*(const RingScalar& s, const RingMatrix& m);
RingMatrix dagger(const RingMatrix& m);
RingMatrix kron(const RingMatrix& a, const RingMatrix& b);
bool is_unitary(const RingMatrix& m);
RingScalar det_exact(const RingMatrix& m);

enum class DenomBase { Two, Sqrt2, ISqrt2, OnePlusI };
std::string_view base_name(DenomBase b);
IntRing default_ring(DenomBase b);
RingInt base_value(DenomBase b);

// least q with base^q x over ring, for every x; DomainError if none
unsigned lde(std::span<const RingScalar> xs, DenomBase base, IntRing ring);
unsigned lde(const RingMatrix& m, DenomBase base, IntRing ring);
inline unsigned lde(const RingMatrix& m, DenomBase base) { return lde(m, base, default_ring(base)); }
// whether base^q x lies in the ring for all x
bool scales_into(std::span<const RingScalar> xs, DenomBase base, unsigned q, IntRing ring);

bool matrix_in(const RingMatrix& m, RingTag t);
// minimal tag among D, Z_over_sqrt2, Dsqrt2, Disqrt2, Di, Zi_over_sqrt2, Domega
RingTag classify_matrix(const RingMatrix& m);

// column images of a permutation matrix, 0-based
std::optional<std::vector<size_t>> permutation_of(const RingMatrix& m);
RingMatrix permutation_matrix(const std::vector<size_t>& image);

std::string format_matrix(const RingMatrix& m);
RingMatrix parse_matrix(std::string_view text);

}  // namespace ringsynth
