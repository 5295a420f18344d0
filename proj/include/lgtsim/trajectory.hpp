#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lgtsim/circuit.hpp"
#include "lgtsim/noise.hpp"
#include "lgtsim/rng.hpp"
#include "lgtsim/state_vector.hpp"

namespace lgtsim {

/// One measured bitstring. Bit q reports the outcome for qubit q under the
/// plan it was measured with: 0 -> +1 and 1 -> -1 eigenvalue of Z (Z plan)
/// or of X (X plan).
struct ShotRecord {
  std::uint32_t bits = 0;

  int bit(int q) const { return static_cast<int>((bits >> q) & 1u); }
};

/// A batch of shots taken under one shared basis plan.
struct ShotBatch {
  int n_qubits = 0;
  BasisPlan plan;
  std::vector<ShotRecord> shots;

  std::size_t size() const { return shots.size(); }
};

inline void apply_pauli_code(StateVector& state, int code, int q) {
  switch (code) {
    case 0: break;
    case 1: state.apply_x(q); break;
    case 2: state.apply_single(q, {0, 0}, {0, -1}, {0, 1}, {0, 0}); break;
    case 3: state.apply_phase1(q, {-1, 0}); break;
    default: throw std::invalid_argument("bad pauli code");
  }
}

inline void apply_pauli_event(StateVector& state, const PauliEvent& ev, int q0,
                              int q1) {
  apply_pauli_code(state, ev.code0, q0);
  if (ev.arity == 2) apply_pauli_code(state, ev.code1, q1);
}

/// Run one noise trajectory of `circuit`: gates in order, and after each
/// gate a depolarizing event drawn at eta1 (single-qubit gates) or eta2
/// (CNOTs) is applied to the gate's qubits. With noise absent the result is
/// the deterministic noiseless state.
///
/// RNG consumption per gate is fixed (one uniform, plus one on a firing
/// event), so a given stream always yields the same trajectory.
inline StateVector run_trajectory(const Circuit& circuit,
                                  const NoiseModel* noise, RandomStream* rng) {
  StateVector state(circuit.n_qubits, 0);
  const bool noisy = noise != nullptr && noise->enabled();
  if (noisy && rng == nullptr)
    throw std::invalid_argument("noisy run needs a random stream");
  for (const GateOp& g : circuit.ops) {
    apply_gate(state, g);
    if (!noisy) continue;
    const int arity = g.arity();
    const double p = arity == 2 ? noise->eta2 : noise->eta1;
    if (auto ev = sample_depolarizing_event(arity, p, *rng))
      apply_pauli_event(state, *ev, g.q0, g.q1);
  }
  return state;
}

/// Cumulative-probability sampler over a fixed state. Building it costs one
/// pass; each draw is a binary search.
class StateSampler {
 public:
  explicit StateSampler(const StateVector& state) {
    cum_.resize(state.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
      acc += state.probability(i);
      cum_[i] = acc;
    }
    total_ = acc;
  }

  double total_probability() const { return total_; }

  std::uint32_t sample(RandomStream& rng) const {
    const double u = rng.uniform() * total_;
    auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
    if (it == cum_.end()) --it;
    return static_cast<std::uint32_t>(it - cum_.begin());
  }

 private:
  std::vector<double> cum_;
  double total_ = 0.0;
};

/// Sample one bitstring from `state` after rotating every X-plan qubit into
/// the measurement basis with a (noiseless) Hadamard. The input state is not
/// consumed; the rotation happens on a copy.
inline ShotRecord measure_shot(const StateVector& state, const BasisPlan& plan,
                               RandomStream& rng) {
  if (!plan.empty() && plan.size() != static_cast<std::size_t>(state.n_qubits()))
    throw std::invalid_argument("basis plan length mismatch");
  const double n2 = state.norm_sqr();
  if (std::abs(n2 - 1.0) > 1e-8)
    throw std::runtime_error("state norm drifted beyond tolerance");
  bool any_x = false;
  for (Basis b : plan) any_x |= (b == Basis::X);
  if (!any_x) {
    // sample directly via a single cumulative scan
    double u = rng.uniform() * n2;
    double acc = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
      acc += state.probability(i);
      if (u < acc) return ShotRecord{static_cast<std::uint32_t>(i)};
    }
    return ShotRecord{static_cast<std::uint32_t>(state.dim() - 1)};
  }
  StateVector rotated = state;
  for (int q = 0; q < state.n_qubits(); ++q)
    if (plan[static_cast<std::size_t>(q)] == Basis::X) rotated.apply_h(q);
  double u = rng.uniform() * rotated.norm_sqr();
  double acc = 0.0;
  for (std::size_t i = 0; i < rotated.dim(); ++i) {
    acc += rotated.probability(i);
    if (u < acc) return ShotRecord{static_cast<std::uint32_t>(i)};
  }
  return ShotRecord{static_cast<std::uint32_t>(rotated.dim() - 1)};
}

}  // namespace lgtsim
