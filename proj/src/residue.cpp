#include "ringsynth/rings.hpp"

namespace ringsynth {

namespace {

Integer fmod(const Integer& a, unsigned long m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
  return r;
}

}  // namespace

std::array<Integer, 2> quadratic_coords(const RingInt& a, IntRing r) {
  if (!in_ring(a, r)) throw DomainError("element " + format_ringint(a) + " not in " + std::string(ring_name(r)));
  switch (r) {
    case IntRing::Z: return {a[0], 0};
    case IntRing::Zsqrt2:
    case IntRing::Zisqrt2: return {a[0], a[1]};
    case IntRing::Zi: return {a[0], a[2]};
    case IntRing::Zomega: break;
  }
  throw DomainError("quadratic_coords: Z[w] is not quadratic");
}

RingInt from_quadratic(const Integer& x0, const Integer& x1, IntRing r) {
  switch (r) {
    case IntRing::Z: return {x0, 0, 0, 0};
    case IntRing::Zsqrt2: return {x0, x1, 0, -x1};
    case IntRing::Zisqrt2: return {x0, x1, 0, x1};
    case IntRing::Zi: return {x0, 0, x1, 0};
    case IntRing::Zomega: break;
  }
  throw DomainError("from_quadratic: Z[w] is not quadratic");
}

IntRing base_ring(Modulus m) {
  switch (m) {
    case Modulus::Two_Zsqrt2: return IntRing::Zsqrt2;
    case Modulus::Two_Zisqrt2:
    case Modulus::TwoIsqrt2_Zisqrt2: return IntRing::Zisqrt2;
    case Modulus::Two_Zi:
    case Modulus::OnePlusI_Zi: return IntRing::Zi;
    case Modulus::Four_Z: return IntRing::Z;
  }
  return IntRing::Zomega;
}

RingInt modulus_value(Modulus m) {
  switch (m) {
    case Modulus::Two_Zsqrt2:
    case Modulus::Two_Zisqrt2:
    case Modulus::Two_Zi: return 2;
    case Modulus::TwoIsqrt2_Zisqrt2: return {0, 2, 0, 2};
    case Modulus::Four_Z: return 4;
    case Modulus::OnePlusI_Zi: return {1, 0, 1, 0};
  }
  return 0;
}

std::string_view modulus_name(Modulus m) {
  switch (m) {
    case Modulus::Two_Zsqrt2: return "2 in Z[rt2]";
    case Modulus::Two_Zisqrt2: return "2 in Z[irt2]";
    case Modulus::TwoIsqrt2_Zisqrt2: return "2irt2 in Z[irt2]";
    case Modulus::Two_Zi: return "2 in Z[i]";
    case Modulus::Four_Z: return "4 in Z";
    case Modulus::OnePlusI_Zi: return "1+i in Z[i]";
  }
  return "?";
}

Residue residue(const RingInt& a, Modulus m) {
  IntRing r = base_ring(m);
  auto x = quadratic_coords(a, r);
  switch (m) {
    case Modulus::Two_Zsqrt2:
    case Modulus::Two_Zisqrt2:
    case Modulus::Two_Zi:
      return {m, from_quadratic(fmod(x[0], 2), fmod(x[1], 2), r)};
    case Modulus::TwoIsqrt2_Zisqrt2:
      // 2i rt2 (a + b i rt2) = -4b + 2a i rt2
      return {m, from_quadratic(fmod(x[0], 4), fmod(x[1], 2), r)};
    case Modulus::Four_Z:
      return {m, from_quadratic(fmod(x[0], 4), 0, r)};
    case Modulus::OnePlusI_Zi:
      return {m, from_quadratic(fmod(x[0] + x[1], 2), 0, r)};
  }
  throw DomainError("residue: unknown modulus");
}

std::vector<RingInt> residue_classes(Modulus m) {
  IntRing r = base_ring(m);
  std::vector<RingInt> out;
  auto grid = [&](int n0, int n1) {
    for (int b = 0; b < n1; ++b)
      for (int a = 0; a < n0; ++a) out.push_back(from_quadratic(a, b, r));
  };
  switch (m) {
    case Modulus::Two_Zsqrt2:
    case Modulus::Two_Zisqrt2:
    case Modulus::Two_Zi: grid(2, 2); break;
    case Modulus::TwoIsqrt2_Zisqrt2: grid(4, 2); break;
    case Modulus::Four_Z: grid(4, 1); break;
    case Modulus::OnePlusI_Zi: grid(2, 1); break;
  }
  return out;
}

ResidueFacts residue_facts(const RingInt& u, IntRing base) {
  Modulus two;
  switch (base) {
    case IntRing::Z:
    case IntRing::Zsqrt2: two = Modulus::Two_Zsqrt2; break;
    case IntRing::Zisqrt2: two = Modulus::Two_Zisqrt2; break;
    case IntRing::Zi: two = Modulus::Two_Zi; break;
    default: throw DomainError("residue_facts: base ring must be quadratic");
  }
  if (!in_ring(u, base)) throw DomainError("residue_facts: element outside base ring");
  RingInt norm = u.conj() * u;
  ResidueFacts f{base, residue(norm, two)};
  f.odd_norm = f.norm_mod2.rep == RingInt(1);
  if (base == IntRing::Zisqrt2) {
    f.mod_2isqrt2 = residue(u, Modulus::TwoIsqrt2_Zisqrt2);
    const RingInt& c = f.mod_2isqrt2->rep;
    f.in_unit_classes = c == RingInt(1) || c == RingInt(3) || c == RingInt(1) + RingInt::isqrt2() ||
                        c == RingInt(3) + RingInt::isqrt2();
  }
  if (base == IntRing::Zi) {
    f.mod2 = residue(u, Modulus::Two_Zi);
    f.square_mod2 = residue(u * u, Modulus::Two_Zi);
    if (f.square_mod2->rep == RingInt(1)) {
      if (f.mod2->rep == RingInt(1))
        f.phase_to_one = 0;
      else if (f.mod2->rep == RingInt::imag())
        f.phase_to_one = 1;
    }
  }
  return f;
}

}  // namespace ringsynth
