#pragma once

#include <cstdint>
#include <random>

namespace lgtsim {

/// One splitmix64 step; used only for seed whitening.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic random stream.
///
/// Streams are derived from a master seed and a counter (trajectory index),
/// so independent trajectories can run in parallel while the whole run stays
/// reproducible. Doubles are produced from the raw 64-bit output instead of
/// std::uniform_real_distribution, which is not pinned down by the standard.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Stream number `index` of the family identified by `master_seed`.
  static RandomStream derive(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t s = master_seed;
    std::uint64_t a = splitmix64_next(s);
    s = a ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    std::uint64_t seed = splitmix64_next(s);
    return RandomStream(seed ? seed : 0x853c49e6748fea9bULL);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Only used for small n (Pauli picks),
  /// where the multiply bias is far below anything observable.
  std::uint32_t uniform_below(std::uint32_t n) {
    return static_cast<std::uint32_t>(uniform() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lgtsim
