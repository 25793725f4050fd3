#include "ringsynth/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace ringsynth {

RingMatrix RingMatrix::identity(size_t n) {
  RingMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RingMatrix RingMatrix::from_rows(const std::vector<std::vector<RingScalar>>& rows) {
  size_t r = rows.size(), c = r ? rows[0].size() : 0;
  RingMatrix m(r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("from_rows: ragged rows");
    for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<RingScalar> RingMatrix::column(size_t c) const {
  std::vector<RingScalar> v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

unsigned RingMatrix::max_k() const {
  unsigned k = 0;
  for (const auto& x : a_) k = std::max(k, x.k());
  return k;
}

namespace {

void check_mul(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols() != b.rows())
    throw DomainError("dimension mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

RingScalar dot(const RingMatrix& a, const RingMatrix& b, size_t i, size_t j) {
  RingScalar s;
  for (size_t k = 0; k < a.cols(); ++k) {
    const RingScalar& x = a(i, k);
    const RingScalar& y = b(k, j);
    if (x.is_zero() || y.is_zero()) continue;
    s += x * y;
  }
  return s;
}

}  // namespace

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  check_mul(a, b);
  RingMatrix c(a.rows(), b.cols());
  const long rows = static_cast<long>(a.rows());
  const long cols = static_cast<long>(b.cols());
#pragma omp parallel for collapse(2) schedule(dynamic, 4)
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) c(i, j) = dot(a, b, i, j);
  return c;
}

RingMatrix multiply_serial(const RingMatrix& a, const RingMatrix& b) {
  check_mul(a, b);
  RingMatrix c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) c(i, j) = dot(a, b, i, j);
  return c;
}

RingMatrix operator*(const RingScalar& s, const RingMatrix& m) {
  RingMatrix r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  return r;
}

RingMatrix dagger(const RingMatrix& m) {
  RingMatrix r(m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
  return r;
}

RingMatrix kron(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

bool is_unitary(const RingMatrix& m) {
  if (!m.square()) return false;
  return dagger(m) * m == RingMatrix::identity(m.rows());
}

RingScalar det_exact(const RingMatrix& m) {
  if (!m.square()) throw DomainError("det_exact: matrix not square");
  const size_t n = m.rows();
  if (n == 0) return 1;
  // clear denominators, then fraction-free elimination over Z[w]
  unsigned K = m.max_k();
  std::vector<RingInt> a(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).numerator_at(K);
  auto A = [&](size_t i, size_t j) -> RingInt& { return a[i * n + j]; };
  RingInt prev = 1;
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && A(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        RingInt t = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        auto q = t.exact_divide(prev);
        if (!q) throw InvariantError("det_exact: inexact Bareiss step");
        A(i, j) = std::move(*q);
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  RingInt d = A(n - 1, n - 1);
  if (negate) d = -d;
  return RingScalar(d, K * static_cast<unsigned>(n));
}

std::string_view base_name(DenomBase b) {
  switch (b) {
    case DenomBase::Two: return "2";
    case DenomBase::Sqrt2: return "rt2";
    case DenomBase::ISqrt2: return "irt2";
    case DenomBase::OnePlusI: return "1+i";
  }
  return "?";
}

IntRing default_ring(DenomBase b) {
  switch (b) {
    case DenomBase::Two: return IntRing::Z;
    case DenomBase::Sqrt2: return IntRing::Zomega;
    case DenomBase::ISqrt2: return IntRing::Zisqrt2;
    case DenomBase::OnePlusI: return IntRing::Zi;
  }
  return IntRing::Zomega;
}

RingInt base_value(DenomBase b) {
  switch (b) {
    case DenomBase::Two: return 2;
    case DenomBase::Sqrt2: return RingInt::sqrt2();
    case DenomBase::ISqrt2: return RingInt::isqrt2();
    case DenomBase::OnePlusI: return {1, 0, 1, 0};
  }
  return 1;
}

namespace {

RingInt power(const RingInt& b, unsigned q) {
  RingInt r = 1;
  for (unsigned i = 0; i < q; ++i) r *= b;
  return r;
}

// each base carries sqrt2^step up to a unit
unsigned sqrt2_step(DenomBase b) { return b == DenomBase::Two ? 2 : 1; }

}  // namespace

bool scales_into(std::span<const RingScalar> xs, DenomBase base, unsigned q, IntRing ring) {
  RingInt p = power(base_value(base), q);
  unsigned shift = q * sqrt2_step(base);
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    if (x.k() > shift) return false;
    RingScalar y(x.num() * p, x.k());
    if (y.k() != 0 || !in_ring(y.num(), ring)) return false;
  }
  return true;
}

unsigned lde(std::span<const RingScalar> xs, DenomBase base, IntRing ring) {
  unsigned maxk = 0;
  for (const auto& x : xs) maxk = std::max(maxk, x.k());
  unsigned step = sqrt2_step(base);
  unsigned lo = (maxk + step - 1) / step;
  // base^q x over ring is not upward closed in general (rt2 over Z), so scan
  for (unsigned q = lo; q <= lo + 4; ++q)
    if (scales_into(xs, base, q, ring)) return q;
  throw DomainError("lde: entries do not scale into " + std::string(ring_name(ring)) + " by powers of " +
                    std::string(base_name(base)));
}

unsigned lde(const RingMatrix& m, DenomBase base, IntRing ring) {
  return lde(std::span<const RingScalar>(m.data()), base, ring);
}

bool matrix_in(const RingMatrix& m, RingTag t) {
  auto exists = [&](IntRing r) {
    for (unsigned q = m.max_k(); q <= m.max_k() + 1; ++q)
      if (scales_into(m.data(), DenomBase::Sqrt2, q, r)) return true;
    return false;
  };
  if (t == RingTag::Z_over_sqrt2) return exists(IntRing::Z);
  if (t == RingTag::Zi_over_sqrt2) return exists(IntRing::Zi);
  return std::all_of(m.data().begin(), m.data().end(), [&](const RingScalar& x) { return contains(t, x); });
}

RingTag classify_matrix(const RingMatrix& m) {
  if (!is_unitary(m)) throw NotUnitaryError("classify_matrix: matrix is not unitary");
  using T = RingTag;
  for (T t : {T::D, T::Z_over_sqrt2, T::Dsqrt2, T::Disqrt2, T::Di, T::Zi_over_sqrt2})
    if (matrix_in(m, t)) return t;
  return T::Domega;
}

std::optional<std::vector<size_t>> permutation_of(const RingMatrix& m) {
  if (!m.square()) return std::nullopt;
  const size_t n = m.rows();
  std::vector<size_t> image(n, n);
  std::vector<bool> hit(n, false);
  for (size_t c = 0; c < n; ++c) {
    for (size_t r = 0; r < n; ++r) {
      const RingScalar& x = m(r, c);
      if (x.is_zero()) continue;
      if (!(x == RingScalar(1)) || image[c] != n || hit[r]) return std::nullopt;
      image[c] = r;
      hit[r] = true;
    }
    if (image[c] == n) return std::nullopt;
  }
  return image;
}

RingMatrix permutation_matrix(const std::vector<size_t>& image) {
  RingMatrix m(image.size(), image.size());
  for (size_t c = 0; c < image.size(); ++c) m(image[c], c) = 1;
  return m;
}

std::string format_matrix(const RingMatrix& m) {
  std::string out = "dim " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_scalar(m(i, j));
    }
    out += '\n';
  }
  return out;
}

RingMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto p = line.find_first_not_of(" \t\r");
      if (p == std::string::npos || line[p] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next()) throw ParseError("empty matrix file");
  std::istringstream head(line);
  std::string kw;
  long r = -1, c = -1;
  if (!(head >> kw >> r >> c) || kw != "dim" || r <= 0 || c <= 0)
    throw ParseError("expected header 'dim r c'", lineno);
  RingMatrix m(r, c);
  for (long i = 0; i < r; ++i) {
    if (!next()) throw ParseError("missing row " + std::to_string(i + 1), lineno + 1);
    std::istringstream row(line);
    std::string tok;
    long j = 0;
    while (row >> tok) {
      if (j >= c) throw ParseError("too many entries in row", lineno);
      try {
        m(i, j) = parse_scalar(tok);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
      ++j;
    }
    if (j != c) throw ParseError("expected " + std::to_string(c) + " entries, got " + std::to_string(j), lineno);
  }
  if (next()) throw ParseError("trailing content after matrix", lineno);
  return m;
}

}  // namespace ringsynth
