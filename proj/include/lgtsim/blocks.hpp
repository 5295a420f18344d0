#pragma once

#include <vector>

#include "lgtsim/gates.hpp"
#include "lgtsim/layout.hpp"
#include "lgtsim/model.hpp"

namespace lgtsim {

// Gate blocks for the Trotter-step circuits. Every block is pinned to its
// matrix exponential by unit tests; the F/G dressings below are Cliffords
// with F^dag Y_a F = -X_a X_b and F^dag Y_b F = +Y_a Y_b, which turns the
// enclosed RY pair into the hopping rotation.

/// F block on qubits (a, b): one CNOT plus single-qubit Cliffords.
inline std::vector<GateOp> f_block(int a, int b) {
  using G = GateOp;
  return {
      G::single(GateKind::H, a), G::single(GateKind::H, b),
      G::single(GateKind::S, a), G::single(GateKind::S, b),
      G::single(GateKind::H, a), G::single(GateKind::H, b),
      G::cnot(a, b),
      G::single(GateKind::H, b), G::single(GateKind::Z, b),
      G::single(GateKind::S, a), G::single(GateKind::S, b),
      G::single(GateKind::H, a), G::single(GateKind::H, b),
  };
}

/// G block on qubits (a, b); equals F^dag up to global phase.
inline std::vector<GateOp> g_block(int a, int b) {
  using G = GateOp;
  return {
      G::single(GateKind::H, a), G::single(GateKind::H, b),
      G::single(GateKind::Z, a), G::single(GateKind::S, b),
      G::single(GateKind::S, a), G::single(GateKind::H, b),
      G::cnot(a, b),
      G::single(GateKind::H, a), G::single(GateKind::H, b),
      G::single(GateKind::Z, a), G::single(GateKind::Z, b),
      G::single(GateKind::S, a), G::single(GateKind::S, b),
      G::single(GateKind::H, a), G::single(GateKind::H, b),
  };
}

/// Hopping rotation exp(i theta (S+_a S-_b + h.c.)) with 2 CNOTs:
/// F, RY(+theta) on a, RY(-theta) on b, G.
inline std::vector<GateOp> hopping_block(int a, int b, double theta) {
  std::vector<GateOp> ops = f_block(a, b);
  ops.push_back(GateOp::rotation(GateKind::RY, a, theta));
  ops.push_back(GateOp::rotation(GateKind::RY, b, -theta));
  std::vector<GateOp> g = g_block(a, b);
  ops.insert(ops.end(), g.begin(), g.end());
  return ops;
}

/// On-site interaction exp(-i theta S^z_a S^z_b) with 2 CNOTs:
/// CNOT(a,b), RZ(theta/2) on b, CNOT(a,b).
inline std::vector<GateOp> interaction_block(int a, int b, double theta) {
  return {GateOp::cnot(a, b), GateOp::rotation(GateKind::RZ, b, theta / 2),
          GateOp::cnot(a, b)};
}

/// Bond-conditioned hopping exp(i theta Z_bond (S+_a S-_b + h.c.)) with
/// 6 CNOTs: F, CNOT(bond,a), CNOT(bond,b), RY pair, CNOT(bond,b),
/// CNOT(bond,a), G. The bond-controlled NOTs flip the RY pair's sign on
/// the bond |1> branch.
inline std::vector<GateOp> gauged_hopping_block(int bond, int a, int b,
                                                double theta) {
  std::vector<GateOp> ops = f_block(a, b);
  ops.push_back(GateOp::cnot(bond, a));
  ops.push_back(GateOp::cnot(bond, b));
  ops.push_back(GateOp::rotation(GateKind::RY, a, theta));
  ops.push_back(GateOp::rotation(GateKind::RY, b, -theta));
  ops.push_back(GateOp::cnot(bond, b));
  ops.push_back(GateOp::cnot(bond, a));
  std::vector<GateOp> g = g_block(a, b);
  ops.insert(ops.end(), g.begin(), g.end());
  return ops;
}

/// Bond-spin coupling exp(-i theta X_a X_b) with 2 CNOTs:
/// CNOT(a,b), RX(2 theta) on a, CNOT(a,b).
inline std::vector<GateOp> bond_coupling_block(int a, int b, double theta) {
  return {GateOp::cnot(a, b), GateOp::rotation(GateKind::RX, a, 2 * theta),
          GateOp::cnot(a, b)};
}

// Layout-level wrappers. Bond j couples sites j and (j+1) mod N; the
// boundary bond (N-1, 0) carries the species-parity sign folded into the
// rotation angle.

/// Hopping evolution on bond j for one species (direct method),
/// exp(i s J dt (S+ S- + h.c.)).
inline std::vector<GateOp> block_A(int j, Species s,
                                   const ModelParams& params,
                                   const QubitLayout& layout) {
  const int jn = (j + 1) % layout.n_sites;
  const double sign = (j == layout.n_sites - 1) ? params.boundary_sign(s) : 1.0;
  return hopping_block(layout.site(j, s), layout.site(jn, s),
                       sign * params.hopping * params.dt);
}

/// On-site interaction evolution at site j, exp(-i U dt S^z_up S^z_down).
inline std::vector<GateOp> block_B(int j, const ModelParams& params,
                                   const QubitLayout& layout) {
  return interaction_block(layout.up(j), layout.down(j),
                           params.interaction * params.dt);
}

/// Gauged hopping on bond j for one species (LGT method),
/// exp(-i s g_hop dt Z_bond (S+ S- + h.c.)).
inline std::vector<GateOp> block_C(int j, Species s,
                                   const ModelParams& params,
                                   const LgtCouplings& couplings,
                                   const QubitLayout& layout) {
  const int jn = (j + 1) % layout.n_sites;
  const double sign = (j == layout.n_sites - 1) ? params.boundary_sign(s) : 1.0;
  return gauged_hopping_block(layout.bond(j), layout.site(j, s),
                              layout.site(jn, s),
                              -sign * couplings.g_hop * params.dt);
}

/// Bond-spin interaction at site j (LGT method), acting on bonds
/// (j-1, j) and (j, j+1): exp(-i g_int dt X X).
inline std::vector<GateOp> block_D(int j, const ModelParams& params,
                                   const LgtCouplings& couplings,
                                   const QubitLayout& layout) {
  const int n = layout.n_sites;
  return bond_coupling_block(layout.bond((j - 1 + n) % n), layout.bond(j),
                             couplings.g_int * params.dt);
}

}  // namespace lgtsim
