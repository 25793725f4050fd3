#include <cctype>

#include "ringsynth/rings.hpp"

namespace ringsynth {

std::string format_ringint(const RingInt& a) {
  return "(" + a[0].get_str() + "," + a[1].get_str() + "," + a[2].get_str() + "," + a[3].get_str() + ")";
}

std::string format_scalar(const RingScalar& x) {
  return format_ringint(x.num()) + "/rt2^" + std::to_string(x.k());
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  bool done() const { return i_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  bool eat(std::string_view tok) {
    if (s_.substr(i_, tok.size()) == tok) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }
  Integer integer() {
    size_t start = i_;
    if (peek() == '-' || peek() == '+') ++i_;
    size_t digits = i_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) fail("expected integer");
    std::string tok(s_.substr(start, i_ - start));
    if (tok[0] == '+') tok.erase(0, 1);
    return Integer(tok);
  }
  unsigned small_uint() {
    Integer v = integer();
    if (v < 0 || v > 1000000) fail("exponent out of range");
    return static_cast<unsigned>(v.get_ui());
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar '" + std::string(s_) + "': " + what + " at offset " + std::to_string(i_));
  }

 private:
  std::string_view s_;
  size_t i_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RingScalar parse_scalar(std::string_view text) {
  text = trim(text);
  Cursor cur(text);
  if (cur.done()) cur.fail("empty");
  RingInt num;
  if (cur.eat("(")) {
    Integer c[4];
    for (int i = 0; i < 4; ++i) {
      if (i) cur.expect(",");
      c[i] = cur.integer();
    }
    cur.expect(")");
    num = RingInt(c[0], c[1], c[2], c[3]);
  } else {
    int sign = 1;
    if (cur.eat("-"))
      sign = -1;
    else
      cur.eat("+");
    Integer coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coef = cur.integer();
      have_coef = true;
    }
    RingInt unit = 1;
    if (cur.eat("irt2"))
      unit = RingInt::isqrt2();
    else if (cur.eat("rt2"))
      unit = RingInt::sqrt2();
    else if (cur.eat("i"))
      unit = RingInt::imag();
    else if (cur.eat("w")) {
      int e = 1;
      if (cur.eat("^")) e = static_cast<int>(cur.small_uint());
      unit = RingInt::omega_power(e);
    } else if (!have_coef)
      cur.fail("expected number or unit");
    num = unit;
    num *= Integer(coef * sign);
  }
  unsigned k = 0;
  while (cur.eat("/")) {
    if (cur.eat("rt2")) {
      k += cur.eat("^") ? cur.small_uint() : 1;
    } else if (cur.eat("2")) {
      k += 2 * (cur.eat("^") ? cur.small_uint() : 1);
    } else {
      cur.fail("denominator must be 2, 2^q, rt2 or rt2^k");
    }
  }
  if (!cur.done()) cur.fail("trailing characters");
  return RingScalar(num, k);
}

}  // namespace ringsynth
