#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lgtsim/pauli.hpp"

namespace lgtsim {

using cdouble = std::complex<double>;

/// Dense statevector over 2^n computational basis states, qubit 0 = LSB.
///
/// All mutators are plain unitaries; the squared norm stays 1 up to floating
/// point rounding and is never silently renormalized. The cap of 24 qubits
/// bounds a state at 256 MiB.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;

  StateVector() = default;

  /// Basis state |basis_index> on n_qubits qubits.
  StateVector(int n_qubits, std::uint64_t basis_index) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
      throw std::invalid_argument("n_qubits must be in [1, 24]");
    if (basis_index >= (std::uint64_t{1} << n_qubits))
      throw std::out_of_range("basis index out of range");
    n_ = n_qubits;
    amps_.assign(std::size_t{1} << n_qubits, cdouble{0.0, 0.0});
    amps_[basis_index] = cdouble{1.0, 0.0};
  }

  int n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cdouble>& amplitudes() const { return amps_; }
  std::vector<cdouble>& amplitudes() { return amps_; }
  cdouble amplitude(std::size_t i) const { return amps_[i]; }

  double norm_sqr() const {
    double s = 0.0;
    for (const cdouble& a : amps_) s += std::norm(a);
    return s;
  }

  /// Apply a general single-qubit unitary [[m00, m01], [m10, m11]].
  void apply_single(int q, cdouble m00, cdouble m01, cdouble m10, cdouble m11) {
    check_qubit(q);
    const std::size_t s = std::size_t{1} << q;
    for (std::size_t base = 0; base < amps_.size(); base += 2 * s) {
      for (std::size_t i = base; i < base + s; ++i) {
        const cdouble a = amps_[i];
        const cdouble b = amps_[i + s];
        amps_[i] = m00 * a + m01 * b;
        amps_[i + s] = m10 * a + m11 * b;
      }
    }
  }

  void apply_x(int q) {
    check_qubit(q);
    const std::size_t s = std::size_t{1} << q;
    for (std::size_t base = 0; base < amps_.size(); base += 2 * s)
      for (std::size_t i = base; i < base + s; ++i)
        std::swap(amps_[i], amps_[i + s]);
  }

  void apply_h(int q) {
    constexpr double r = 0.70710678118654752440;
    apply_single(q, {r, 0}, {r, 0}, {r, 0}, {-r, 0});
  }

  /// Phase |1> component by `phase` (covers Z, S, and the RZ diagonal).
  void apply_phase1(int q, cdouble phase) {
    check_qubit(q);
    const std::size_t s = std::size_t{1} << q;
    for (std::size_t base = s; base < amps_.size(); base += 2 * s)
      for (std::size_t i = base; i < base + s; ++i) amps_[i] *= phase;
  }

  void apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target)
      throw std::invalid_argument("cnot control and target must differ");
    const std::size_t sc = std::size_t{1} << control;
    const std::size_t st = std::size_t{1} << target;
    // Iterate indices with control=1, target=0; swap with target=1 partner.
    const int qa = control < target ? control : target;
    const int qb = control < target ? target : control;
    const std::size_t sa = std::size_t{1} << qa;
    const std::size_t sb = std::size_t{1} << qb;
    for (std::size_t h = 0; h < amps_.size(); h += 2 * sb)
      for (std::size_t m = h; m < h + sb; m += 2 * sa)
        for (std::size_t l = m; l < m + sa; ++l)
          std::swap(amps_[l + sc], amps_[l + sc + st]);
  }

  /// Apply a Pauli string (a signed bit-flip/phase permutation).
  void apply_pauli(const PauliString& p) {
    if (p.n_qubits != n_) throw std::invalid_argument("pauli length mismatch");
    static constexpr cdouble i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cdouble yph = i_pow[p.count_y() & 3];
    const std::uint32_t x = p.x_mask, z = p.z_mask;
    if (x == 0) {
      for (std::size_t b = 0; b < amps_.size(); ++b)
        if (std::popcount(static_cast<std::uint32_t>(b) & z) & 1)
          amps_[b] = -amps_[b];
      return;
    }
    // Process each flip pair once: visit b with the lowest flipped bit = 0.
    const std::uint32_t low = x & (~x + 1u);
    for (std::size_t b = 0; b < amps_.size(); ++b) {
      if (b & low) continue;
      const std::size_t b2 = b ^ x;
      const cdouble pb = (std::popcount(static_cast<std::uint32_t>(b) & z) & 1)
                             ? -yph : yph;
      const cdouble pb2 =
          (std::popcount(static_cast<std::uint32_t>(b2) & z) & 1) ? -yph : yph;
      const cdouble a = amps_[b];
      amps_[b] = pb2 * amps_[b2];  // new[b] = P[b, b2] * old[b2]
      amps_[b2] = pb * a;
    }
  }

  /// exp(i theta (XX+YY)/2) on (q0, q1): the hopping (Givens) rotation.
  /// Mixes |01> and |10>; leaves |00> and |11> alone.
  void apply_givens(int q0, int q1, double theta) {
    check_qubit(q0);
    check_qubit(q1);
    const double c = std::cos(theta), s = std::sin(theta);
    const std::size_t s0 = std::size_t{1} << q0;
    const std::size_t s1 = std::size_t{1} << q1;
    const int qa = q0 < q1 ? q0 : q1;
    const int qb = q0 < q1 ? q1 : q0;
    const std::size_t sa = std::size_t{1} << qa;
    const std::size_t sb = std::size_t{1} << qb;
    for (std::size_t h = 0; h < amps_.size(); h += 2 * sb) {
      for (std::size_t m = h; m < h + sb; m += 2 * sa) {
        for (std::size_t l = m; l < m + sa; ++l) {
          const std::size_t i01 = l + s0;  // q0=1, q1=0
          const std::size_t i10 = l + s1;
          const cdouble a = amps_[i01];
          const cdouble b = amps_[i10];
          // [c, is; is, c] on (a, b)
          amps_[i01] = cdouble{c * a.real() - s * b.imag(),
                               c * a.imag() + s * b.real()};
          amps_[i10] = cdouble{c * b.real() - s * a.imag(),
                               c * b.imag() + s * a.real()};
        }
      }
    }
  }

  /// exp(i theta Z_qb (XX+YY)/2): Givens rotation whose sign is conditioned
  /// on the bond qubit qb.
  void apply_gauged_givens(int qb, int q0, int q1, double theta) {
    check_qubit(qb);
    const double c = std::cos(theta), s = std::sin(theta);
    const std::size_t s0 = std::size_t{1} << q0;
    const std::size_t s1 = std::size_t{1} << q1;
    const std::size_t sbond = std::size_t{1} << qb;
    int qs[3] = {qb, q0, q1};
    if (qs[0] > qs[1]) std::swap(qs[0], qs[1]);
    if (qs[1] > qs[2]) std::swap(qs[1], qs[2]);
    if (qs[0] > qs[1]) std::swap(qs[0], qs[1]);
    if (qs[0] == qs[1] || qs[1] == qs[2])
      throw std::invalid_argument("gauged givens qubits must be distinct");
    const std::size_t sA = std::size_t{1} << qs[0];
    const std::size_t sB = std::size_t{1} << qs[1];
    const std::size_t sC = std::size_t{1} << qs[2];
    for (std::size_t t = 0; t < amps_.size(); t += 2 * sC) {
      for (std::size_t h = t; h < t + sC; h += 2 * sB) {
        for (std::size_t m = h; m < h + sB; m += 2 * sA) {
          for (std::size_t l = m; l < m + sA; ++l) {
            // bond = 0: rotate by +theta
            {
              const cdouble a = amps_[l + s0];
              const cdouble b = amps_[l + s1];
              amps_[l + s0] = cdouble{c * a.real() - s * b.imag(),
                                      c * a.imag() + s * b.real()};
              amps_[l + s1] = cdouble{c * b.real() - s * a.imag(),
                                      c * b.imag() + s * a.real()};
            }
            // bond = 1: rotate by -theta
            {
              const cdouble a = amps_[l + sbond + s0];
              const cdouble b = amps_[l + sbond + s1];
              amps_[l + sbond + s0] = cdouble{c * a.real() + s * b.imag(),
                                              c * a.imag() - s * b.real()};
              amps_[l + sbond + s1] = cdouble{c * b.real() + s * a.imag(),
                                              c * b.imag() - s * a.real()};
            }
          }
        }
      }
    }
  }

  /// exp(-i theta X X) on (q0, q1).
  void apply_xx_rotation(int q0, int q1, double theta) {
    check_qubit(q0);
    check_qubit(q1);
    const double c = std::cos(theta), s = std::sin(theta);
    const std::size_t flip = (std::size_t{1} << q0) | (std::size_t{1} << q1);
    const std::size_t s0 = std::size_t{1} << q0;
    // Visit indices with bit q0 = 0; partner has both bits flipped.
    for (std::size_t b = 0; b < amps_.size(); ++b) {
      if (b & s0) continue;
      const std::size_t b2 = b ^ flip;
      const cdouble a = amps_[b];
      const cdouble d = amps_[b2];
      amps_[b] = cdouble{c * a.real() + s * d.imag(),
                         c * a.imag() - s * d.real()};
      amps_[b2] = cdouble{c * d.real() + s * a.imag(),
                          c * d.imag() - s * a.real()};
    }
  }

  /// exp(-i theta Z Z) on (q0, q1): diagonal phases.
  void apply_zz_phase(int q0, int q1, double theta) {
    check_qubit(q0);
    check_qubit(q1);
    const cdouble ph_eq{std::cos(theta), -std::sin(theta)};
    const cdouble ph_ne = std::conj(ph_eq);
    const std::size_t s0 = std::size_t{1} << q0;
    const std::size_t s1 = std::size_t{1} << q1;
    for (std::size_t b = 0; b < amps_.size(); ++b) {
      const bool eq = ((b & s0) != 0) == ((b & s1) != 0);
      amps_[b] *= eq ? ph_eq : ph_ne;
    }
  }

  /// <psi| P |psi>; every Pauli string is Hermitian so the result is real.
  double expectation(const PauliString& p) const {
    if (p.n_qubits != n_) throw std::invalid_argument("pauli length mismatch");
    const std::uint32_t x = p.x_mask, z = p.z_mask;
    double acc_re = 0.0;
    if (x == 0) {
      for (std::size_t b = 0; b < amps_.size(); ++b) {
        const double w = std::norm(amps_[b]);
        acc_re += (std::popcount(static_cast<std::uint32_t>(b) & z) & 1)
                      ? -w : w;
      }
      return acc_re;
    }
    static constexpr cdouble i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cdouble yph = i_pow[p.count_y() & 3];
    cdouble acc{0.0, 0.0};
    for (std::size_t b = 0; b < amps_.size(); ++b) {
      // contribution <psi|b2><b2|P|b><b|psi> with b2 = b ^ x
      const std::size_t b2 = b ^ x;
      const cdouble pb = (std::popcount(static_cast<std::uint32_t>(b) & z) & 1)
                             ? -yph : yph;
      acc += std::conj(amps_[b2]) * pb * amps_[b];
    }
    return acc.real();
  }

  /// Probability of measuring all qubits and obtaining basis state b.
  double probability(std::size_t b) const { return std::norm(amps_[b]); }

 private:
  void check_qubit(int q) const {
    if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range");
  }

  int n_ = 0;
  std::vector<cdouble> amps_;
};

}  // namespace lgtsim
