#pragma once

#include <cstdint>

namespace parkfn {

// Deterministic splittable generator (splitmix64 core). The output stream
// is a pure function of the seed, so seeded runs reproduce bit-for-bit
// across platforms and builds. Substream i of a master seed is derived by
// one extra mixing round over (seed, i); substreams are independent enough
// for parallel sampling and their derivation never changes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng substream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t next_u64();

  // Uniform over {0..range-1}, unbiased (rejection). range >= 1.
  // range == 1 consumes no state.
  std::uint64_t next_below(std::uint64_t range);

  // Uniform over {lo..hi} inclusive.
  int uniform_int(int lo, int hi);

 private:
  std::uint64_t state_;
};

}  // namespace parkfn
