#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lgtsim/state_vector.hpp"

namespace lgtsim {

/// The fixed gate set: Paulis, H, S, axis rotations, CNOT.
enum class GateKind { X, Y, Z, H, S, RX, RY, RZ, CNOT };

inline bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CNOT: return "cx";
  }
  return "?";
}

/// One gate: kind, one or two targets (control first for CNOT), and an
/// angle that is meaningful only for rotation kinds.
struct GateOp {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;  // second qubit, CNOT only
  double angle = 0.0;

  static GateOp single(GateKind k, int q) {
    if (k == GateKind::CNOT) throw std::invalid_argument("cnot needs 2 qubits");
    if (is_rotation(k)) throw std::invalid_argument("rotation needs an angle");
    return GateOp{k, q, -1, 0.0};
  }
  static GateOp rotation(GateKind k, int q, double angle) {
    if (!is_rotation(k)) throw std::invalid_argument("not a rotation kind");
    if (!std::isfinite(angle)) throw std::invalid_argument("angle not finite");
    return GateOp{k, q, -1, angle};
  }
  static GateOp cnot(int control, int target) {
    if (control == target)
      throw std::invalid_argument("cnot qubits must be distinct");
    return GateOp{GateKind::CNOT, control, target, 0.0};
  }

  int arity() const { return kind == GateKind::CNOT ? 2 : 1; }
};

/// 2x2 matrix of a single-qubit gate, row-major.
inline std::array<cdouble, 4> gate_matrix(GateKind k, double angle = 0.0) {
  constexpr double r = 0.70710678118654752440;
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  switch (k) {
    case GateKind::X: return {cdouble{0, 0}, {1, 0}, {1, 0}, {0, 0}};
    case GateKind::Y: return {cdouble{0, 0}, {0, -1}, {0, 1}, {0, 0}};
    case GateKind::Z: return {cdouble{1, 0}, {0, 0}, {0, 0}, {-1, 0}};
    case GateKind::H: return {cdouble{r, 0}, {r, 0}, {r, 0}, {-r, 0}};
    case GateKind::S: return {cdouble{1, 0}, {0, 0}, {0, 0}, {0, 1}};
    case GateKind::RX: return {cdouble{c, 0}, {0, -s}, {0, -s}, {c, 0}};
    case GateKind::RY: return {cdouble{c, 0}, {-s, 0}, {s, 0}, {c, 0}};
    case GateKind::RZ: return {cdouble{c, -s}, {0, 0}, {0, 0}, {c, s}};
    case GateKind::CNOT: throw std::invalid_argument("cnot is not 2x2");
  }
  throw std::invalid_argument("unknown gate kind");
}

inline void apply_gate(StateVector& state, const GateOp& g) {
  switch (g.kind) {
    case GateKind::X:
      state.apply_x(g.q0);
      break;
    case GateKind::Y:
      state.apply_single(g.q0, {0, 0}, {0, -1}, {0, 1}, {0, 0});
      break;
    case GateKind::Z:
      state.apply_phase1(g.q0, {-1, 0});
      break;
    case GateKind::H:
      state.apply_h(g.q0);
      break;
    case GateKind::S:
      state.apply_phase1(g.q0, {0, 1});
      break;
    case GateKind::RX: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      state.apply_single(g.q0, {c, 0}, {0, -s}, {0, -s}, {c, 0});
      break;
    }
    case GateKind::RY: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      state.apply_single(g.q0, {c, 0}, {-s, 0}, {s, 0}, {c, 0});
      break;
    }
    case GateKind::RZ: {
      // diag(e^{-i a/2}, e^{+i a/2}), including the |0> phase
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      state.apply_single(g.q0, {c, -s}, {0, 0}, {0, 0}, {c, s});
      break;
    }
    case GateKind::CNOT:
      state.apply_cnot(g.q0, g.q1);
      break;
  }
}

}  // namespace lgtsim
