#include "ringsynth/selftest.hpp"

#include <set>

#include "ringsynth/identities.hpp"
#include "ringsynth/rings.hpp"
#include "ringsynth/synth.hpp"

namespace ringsynth {

namespace {

// representatives x0 + x1 * g with g the ring's generator
std::vector<RingInt> box(IntRing r, int lo, int hi) {
  std::vector<RingInt> out;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b) {
      if (r == IntRing::Z && b != lo) continue;
      out.push_back(from_quadratic(a, r == IntRing::Z ? 0 : b, r));
    }
  return out;
}

bool congruent(const RingInt& a, const RingInt& b, Modulus m) {
  RingInt d = a - b;
  RingInt mv = modulus_value(m);
  auto q = d.exact_divide(mv);
  return q && in_ring(*q, base_ring(m));
}

SelfCheck residue_table(Modulus m, std::vector<RingInt> expected) {
  SelfCheck c{"residue table " + std::string(modulus_name(m)), true, {}};
  auto cls = residue_classes(m);
  std::set<std::string> want, got;
  for (auto& e : expected) want.insert(format_ringint(e));
  for (auto& e : cls) got.insert(format_ringint(e));
  if (want != got) {
    c.pass = false;
    c.detail = "class list differs";
    return c;
  }
  for (const auto& x : box(base_ring(m), -6, 6)) {
    auto r = residue(x, m);
    if (!got.count(format_ringint(r.rep)) || !congruent(x, r.rep, m)) {
      c.pass = false;
      c.detail = "bad reduction of " + format_ringint(x);
      return c;
    }
  }
  return c;
}

}  // namespace

std::vector<SelfCheck> residue_checks() {
  std::vector<SelfCheck> out;
  RingInt s2 = RingInt::sqrt2(), is2 = RingInt::isqrt2(), i = RingInt::imag();
  out.push_back(residue_table(Modulus::Two_Zsqrt2, {0, 1, s2, RingInt(1) + s2}));
  out.push_back(residue_table(Modulus::Two_Zisqrt2, {0, 1, is2, RingInt(1) + is2}));
  out.push_back(residue_table(Modulus::TwoIsqrt2_Zisqrt2, {0, 1, 2, 3, is2, RingInt(1) + is2, RingInt(2) + is2,
                                                           RingInt(3) + is2}));
  out.push_back(residue_table(Modulus::Two_Zi, {0, 1, i, RingInt(1) + i}));

  SelfCheck norms{"Z[irt2]: u'u mod 2 is 0 or 1, unit classes mod 2irt2", true, {}};
  std::set<std::string> units{format_ringint(1), format_ringint(3), format_ringint(RingInt(1) + is2),
                              format_ringint(RingInt(3) + is2)};
  for (const auto& u : box(IntRing::Zisqrt2, -8, 8)) {
    RingInt nn = u.conj() * u;
    auto r = residue(nn, Modulus::Two_Zisqrt2).rep;
    if (!(r == RingInt(0) || r == RingInt(1))) norms.pass = false;
    if (r == RingInt(1) && !units.count(format_ringint(residue(u, Modulus::TwoIsqrt2_Zisqrt2).rep))) norms.pass = false;
    auto ru = residue(u, Modulus::TwoIsqrt2_Zisqrt2).rep, rn = residue(-u, Modulus::TwoIsqrt2_Zisqrt2).rep;
    if ((ru == RingInt(3)) != (rn == RingInt(1))) norms.pass = false;
    if ((ru == RingInt(3) + is2) != (rn == RingInt(1) + is2)) norms.pass = false;
    if (!norms.pass) {
      norms.detail = "fails at " + format_ringint(u);
      break;
    }
  }
  out.push_back(norms);

  SelfCheck gauss{"Z[i]: u^2 = 1 mod 2 gives u = 1 or i, and u = i iff iu = 1", true, {}};
  for (const auto& u : box(IntRing::Zi, -8, 8)) {
    auto sq = residue(u * u, Modulus::Two_Zi).rep;
    auto r = residue(u, Modulus::Two_Zi).rep;
    if (sq == RingInt(1) && !(r == RingInt(1) || r == i)) gauss.pass = false;
    if ((r == i) != (residue(i * u, Modulus::Two_Zi).rep == RingInt(1))) gauss.pass = false;
    if (!gauss.pass) {
      gauss.detail = "fails at " + format_ringint(u);
      break;
    }
  }
  out.push_back(gauss);
  return out;
}

std::vector<SelfCheck> lemma_checks() {
  std::vector<SelfCheck> out;
  SelfCheck integral{"integral quadruples over {1,3,5,7}^4 reduce to even entries", true, {}};
  try {
    for (int a : {1, 3, 5, 7})
      for (int b : {1, 3, 5, 7})
        for (int c : {1, 3, 5, 7})
          for (int d : {1, 3, 5, 7}) {
            auto r = reduce_quadruple_integral({a, b, c, d});
            for (auto& x : r.out)
              if (!in_ring(x, IntRing::Z) || !x.divisible_by(2)) integral.pass = false;
          }
  } catch (const std::exception& e) {
    integral.pass = false;
    integral.detail = e.what();
  }
  out.push_back(integral);

  SelfCheck gauss{"Gaussian odd-square pairs reduce modulo 1+i", true, {}};
  std::vector<RingInt> odd_sq;
  for (const auto& u : box(IntRing::Zi, 0, 3))
    if (residue(u * u, Modulus::Two_Zi).rep == RingInt(1)) odd_sq.push_back(u);
  try {
    for (const auto& u1 : odd_sq)
      for (const auto& u2 : odd_sq) {
        auto r = reduce_pair_gaussian(u1, u2);
        for (auto& x : r.out)
          if (!in_ring(x, IntRing::Zi) || !x.divisible_by_sqrt2()) gauss.pass = false;
      }
  } catch (const std::exception& e) {
    gauss.pass = false;
    gauss.detail = e.what();
  }
  gauss.detail = gauss.detail.empty() ? std::to_string(odd_sq.size() * odd_sq.size()) + " pairs" : gauss.detail;
  out.push_back(gauss);

  SelfCheck imag{"Z[irt2] odd-norm pairs reduce modulo irt2 by prefix search", true, {}};
  std::vector<RingInt> odd_norm;
  for (int x0 = 0; x0 < 8; ++x0)
    for (int x1 = 0; x1 < 4; ++x1) {
      RingInt u = from_quadratic(x0, x1, IntRing::Zisqrt2);
      if (residue(u.conj() * u, Modulus::Two_Zisqrt2).rep == RingInt(1)) odd_norm.push_back(u);
    }
  try {
    for (const auto& u1 : odd_norm)
      for (const auto& u2 : odd_norm) {
        auto r = reduce_pair_imaginary(u1, u2);
        for (auto& x : r.out)
          if (!in_ring(x, IntRing::Zisqrt2) || !x.divisible_by_sqrt2()) imag.pass = false;
      }
  } catch (const std::exception& e) {
    imag.pass = false;
    imag.detail = e.what();
  }
  imag.detail = imag.detail.empty() ? std::to_string(odd_norm.size() * odd_norm.size()) + " pairs" : imag.detail;
  out.push_back(imag);
  return out;
}

std::vector<SelfCheck> run_selftest() {
  auto out = residue_checks();
  for (auto& c : lemma_checks()) out.push_back(c);
  for (auto& r : run_identity_suite())
    out.push_back({"identity: " + r.name + " (" + std::to_string(r.width) + " wires)", r.pass, r.detail});
  return out;
}

}  // namespace ringsynth
