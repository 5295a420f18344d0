#pragma once

#include <stdexcept>

namespace lgtsim {

/// Which encoding of the fermion problem a circuit implements.
enum class Method { Direct, Lgt };

inline const char* method_name(Method m) {
  return m == Method::Direct ? "direct" : "lgt";
}

/// Species index for the two fermion flavours.
enum class Species { Up, Down };

/// Maps lattice degrees of freedom to qubit indices.
///
/// Sites are 0-indexed. Up-species site qubits occupy 0..N-1 in site order,
/// down-species N..2N-1; the LGT method adds bond (i, i+1 mod N) on qubit
/// 2N+i. Direct uses 2N qubits, LGT 3N.
struct QubitLayout {
  Method method = Method::Direct;
  int n_sites = 0;

  int n_qubits() const {
    return (method == Method::Lgt ? 3 : 2) * n_sites;
  }
  int site(int i, Species s) const {
    check_site(i);
    return s == Species::Up ? i : n_sites + i;
  }
  int up(int i) const { return site(i, Species::Up); }
  int down(int i) const { return site(i, Species::Down); }
  /// Bond qubit between site i and site (i+1) mod N (LGT only).
  int bond(int i) const {
    if (method != Method::Lgt)
      throw std::logic_error("direct layout has no bond qubits");
    check_site(i);
    return 2 * n_sites + i;
  }
  bool is_fermion_qubit(int q) const { return q < 2 * n_sites; }

 private:
  void check_site(int i) const {
    if (i < 0 || i >= n_sites) throw std::out_of_range("site out of range");
  }
};

inline QubitLayout make_layout(Method method, int n_sites) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw std::invalid_argument("n_sites must be even and >= 2");
  return QubitLayout{method, n_sites};
}

}  // namespace lgtsim
