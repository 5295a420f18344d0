#pragma once

#include <cmath>
#include <stdexcept>

#include "lgtsim/layout.hpp"

namespace lgtsim {

/// Hubbard ring parameters in units of the hopping energy (J = 1 typical).
///
/// The ring has periodic boundary conditions; under the fermion-to-spin
/// mapping the boundary bond picks up the conserved species-parity sign
/// s_sigma = -(-1)^{N_sigma}, which is fixed here from the particle numbers
/// of the initial state. The domain wall has N/2 fermions per species.
struct ModelParams {
  int n_sites = 6;
  double hopping = 1.0;      // J
  double interaction = 2.0;  // U
  double dt = 0.3;           // Trotter step, units 1/J
  int n_steps = 10;
  int n_up = 3;
  int n_down = 3;

  static ModelParams domain_wall(int n_sites, double J, double U, double dt,
                                 int n_steps) {
    if (n_sites < 2 || n_sites % 2 != 0)
      throw std::invalid_argument("n_sites must be even and >= 2");
    if (!(dt > 0.0) || !std::isfinite(J) || !std::isfinite(U))
      throw std::invalid_argument("bad model parameters");
    return ModelParams{n_sites, J, U, dt, n_steps, n_sites / 2, n_sites / 2};
  }

  /// Boundary-bond sign for one species: +1 for odd particle number,
  /// -1 for even (periodic -> anti-periodic under the spin mapping).
  double boundary_sign(Species s) const {
    const int n = s == Species::Up ? n_up : n_down;
    return (n % 2 == 0) ? -1.0 : 1.0;
  }
};

/// Couplings of the gauge-theory spin Hamiltonian
///   g_hop * sum_{j,sigma} Z_bond(j) (S+ S- + h.c.)
/// + g_int * sum_j X_bond(j-1,j) X_bond(j,j+1) + e0.
/// Values come from exact_oracle calibration, never from ad-hoc prefactors.
struct LgtCouplings {
  double g_hop = 0.0;
  double g_int = 0.0;
  double e0 = 0.0;
};

}  // namespace lgtsim
