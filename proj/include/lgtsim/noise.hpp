#pragma once

#include <optional>
#include <stdexcept>

#include "lgtsim/rng.hpp"

namespace lgtsim {

/// Depolarizing noise parameters. The channel convention is
/// rho -> (1-p) rho + p I/2^k on the k gate qubits; eta2 applies after every
/// CNOT, eta1 after every single-qubit gate, and eta1 = 0.1 * eta2 when
/// built from one noise level.
struct NoiseModel {
  double eta1 = 0.0;
  double eta2 = 0.0;

  static NoiseModel from_eta(double eta) {
    if (eta < 0.0 || eta > 1.0)
      throw std::invalid_argument("eta must be in [0, 1]");
    return NoiseModel{0.1 * eta, eta};
  }

  bool enabled() const { return eta1 > 0.0 || eta2 > 0.0; }
};

/// A sampled Pauli insertion on one or two qubits. Codes are 1=X, 2=Y, 3=Z
/// per qubit; for two qubits at least one code is nonzero.
struct PauliEvent {
  int arity = 1;
  int code0 = 0;
  int code1 = 0;
};

/// Sample the trajectory unraveling of the k-qubit depolarizing channel:
/// returns a uniformly random non-identity Pauli with total probability
/// p (4^k - 1) / 4^k, otherwise nothing.
inline std::optional<PauliEvent> sample_depolarizing_event(int kind_arity,
                                                           double p,
                                                           RandomStream& rng) {
  if (kind_arity != 1 && kind_arity != 2)
    throw std::invalid_argument("arity must be 1 or 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
  const double u = rng.uniform();
  if (kind_arity == 1) {
    if (u >= p * 3.0 / 4.0) return std::nullopt;
    const int c = static_cast<int>(rng.uniform_below(3)) + 1;
    return PauliEvent{1, c, 0};
  }
  if (u >= p * 15.0 / 16.0) return std::nullopt;
  const int c = static_cast<int>(rng.uniform_below(15)) + 1;  // 1..15
  return PauliEvent{2, c & 3, c >> 2};
}

}  // namespace lgtsim
