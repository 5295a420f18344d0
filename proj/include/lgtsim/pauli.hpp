#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lgtsim {

/// Pauli string over up to 32 qubits, stored as X/Z bit masks.
/// A qubit with both bits set carries a Y; the factor i per Y is part of
/// the operator, so the string is exactly the tensor product of I/X/Y/Z.
struct PauliString {
  int n_qubits = 0;
  std::uint32_t x_mask = 0;
  std::uint32_t z_mask = 0;

  PauliString() = default;
  PauliString(int n, std::uint32_t x, std::uint32_t z)
      : n_qubits(n), x_mask(x), z_mask(z) {}

  /// Text form with qubit 0 leftmost, e.g. "XZI" = X on qubit 0, Z on 1.
  static PauliString from_text(const std::string& text) {
    PauliString p;
    p.n_qubits = static_cast<int>(text.size());
    for (int q = 0; q < p.n_qubits; ++q) {
      switch (text[static_cast<std::size_t>(q)]) {
        case 'I': break;
        case 'X': p.x_mask |= 1u << q; break;
        case 'Y': p.x_mask |= 1u << q; p.z_mask |= 1u << q; break;
        case 'Z': p.z_mask |= 1u << q; break;
        default: throw std::invalid_argument("pauli letter must be I/X/Y/Z");
      }
    }
    return p;
  }

  std::string to_text() const {
    std::string s(static_cast<std::size_t>(n_qubits), 'I');
    for (int q = 0; q < n_qubits; ++q) {
      bool x = (x_mask >> q) & 1u, z = (z_mask >> q) & 1u;
      s[static_cast<std::size_t>(q)] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
  }

  int count_y() const { return std::popcount(x_mask & z_mask); }
  bool is_identity() const { return x_mask == 0 && z_mask == 0; }

  bool commutes_with(const PauliString& other) const {
    int anti = std::popcount(x_mask & other.z_mask) +
               std::popcount(z_mask & other.x_mask);
    return (anti & 1) == 0;
  }

  /// P|b> = phase_on(b) |b ^ x_mask>.
  std::complex<double> phase_on(std::uint32_t b) const {
    static constexpr std::complex<double> i_pow[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int k = count_y() & 3;
    std::complex<double> ph = i_pow[k];
    return (std::popcount(b & z_mask) & 1) ? -ph : ph;
  }

  /// True when all matrix elements are real (even number of Y factors).
  bool is_real() const { return (count_y() & 1) == 0; }

  bool operator==(const PauliString& o) const {
    return n_qubits == o.n_qubits && x_mask == o.x_mask && z_mask == o.z_mask;
  }
};

}  // namespace lgtsim
