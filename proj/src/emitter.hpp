#pragma once

#include <optional>
#include <vector>

#include "ringsynth/lowering.hpp"

namespace ringsynth::detail {

// Appends gates for controlled constructions. Any wire outside a
// construction's own controls and targets may be borrowed as a dirty wire.
class Emitter {
 public:
  Emitter(GateSetTag gs, int width, std::optional<int> clean_ancilla = std::nullopt)
      : gs_(gs), width_(width), anc_(clean_ancilla) {}

  std::vector<Gate> gates;
  int phase = 0;

  void g(GateKind k, std::vector<int> wires) { gates.push_back({k, std::move(wires)}); }
  void seq(std::initializer_list<GateKind> ks, int t) {
    for (GateKind k : ks) g(k, {t});
  }
  // run f, then replace what it emitted by its inverse
  template <class Fn>
  void inverse_of(Fn&& f) {
    size_t start = gates.size();
    int ph = phase;
    f();
    std::vector<Gate> part(gates.begin() + start, gates.end());
    gates.resize(start);
    for (auto it = part.rbegin(); it != part.rend(); ++it) gates.push_back({gate_inverse(it->kind), it->wires});
    phase = ((2 * ph - phase) % 8 + 8) % 8;
  }

  std::vector<int> free_wires(std::initializer_list<const std::vector<int>*> used) const;
  int borrow(std::vector<int> busy) const;

  // permutations
  void mcx(const std::vector<int>& ctrls, int t);
  void transposition(size_t x, size_t y, int n);

  // singly controlled templates
  void cz1(int c, int t);
  void cs1(int c, int t);
  void csdg1(int c, int t) {
    inverse_of([&] { cs1(c, t); });
  }
  void cwh1(int c, int t);
  void cf1(int c, int t);
  void chh1(int c, int p, int q);
  void ctrl1(BaseGate w, int c, const std::vector<int>& targets);
  void plain(BaseGate w, const std::vector<int>& targets);
  // C^k W, clean ancilla for k >= 2
  void control_extend(BaseGate w, const std::vector<int>& ctrls, const std::vector<int>& targets);

  // ancilla-free multi-controlled builders
  void mcz(const std::vector<int>& ctrls, int t);
  void mc_zxf(const std::vector<int>& ctrls, int t);
  void mc_zx(const std::vector<int>& ctrls, int t);
  void mc_xz(const std::vector<int>& ctrls, int t) {
    inverse_of([&] { mc_zx(ctrls, t); });
  }
  void mc_zf(const std::vector<int>& ctrls, int t);
  void mc_fz(const std::vector<int>& ctrls, int t);
  void mc_ix(const std::vector<int>& ctrls, int t);
  void mc_iz(const std::vector<int>& ctrls, int t);
  void mc_wsh(const std::vector<int>& ctrls, int t);
  void mc_whs(const std::vector<int>& ctrls, int t);
  void mc_s_two_dirty(const std::vector<int>& ctrls, int t);

  GateSetTag gateset() const { return gs_; }
  int width() const { return width_; }
  std::optional<int> clean_ancilla() const { return anc_; }

 private:
  GateSetTag gs_;
  int width_;
  std::optional<int> anc_;
};

}  // namespace ringsynth::detail
