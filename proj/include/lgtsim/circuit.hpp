#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lgtsim/gates.hpp"

namespace lgtsim {

/// Final measurement basis for one qubit.
enum class Basis : std::uint8_t { Z, X };

using BasisPlan = std::vector<Basis>;

/// Ordered gate program plus a per-qubit measurement basis plan.
struct Circuit {
  int n_qubits = 0;
  std::vector<GateOp> ops;
  BasisPlan basis_plan;  // defaults to all-Z when left empty

  explicit Circuit(int n = 0) : n_qubits(n) {}

  void append(const GateOp& g) {
    validate(g);
    ops.push_back(g);
    if (g.kind == GateKind::CNOT) ++cnot_cache_;
  }

  void append(const std::vector<GateOp>& gs) {
    for (const GateOp& g : gs) append(g);
  }

  /// Number of CNOTs; the cache is checked against a recount.
  int cnot_count() const {
    int n = 0;
    for (const GateOp& g : ops)
      if (g.kind == GateKind::CNOT) ++n;
    if (n != cnot_cache_) throw std::logic_error("cnot cache out of sync");
    return n;
  }

  Basis basis_of(int q) const {
    if (basis_plan.empty()) return Basis::Z;
    return basis_plan[static_cast<std::size_t>(q)];
  }

 private:
  void validate(const GateOp& g) const {
    if (g.q0 < 0 || g.q0 >= n_qubits)
      throw std::out_of_range("gate qubit out of range");
    if (g.kind == GateKind::CNOT) {
      if (g.q1 < 0 || g.q1 >= n_qubits)
        throw std::out_of_range("gate qubit out of range");
      if (g.q0 == g.q1)
        throw std::invalid_argument("cnot qubits must be distinct");
    }
  }

  int cnot_cache_ = 0;
};

}  // namespace lgtsim
