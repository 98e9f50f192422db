#include "parkfn/rng.hpp"

#include <stdexcept>

namespace parkfn {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng Rng::substream(std::uint64_t master_seed, std::uint64_t stream_index) {
  Rng mixer(master_seed ^ (kGolden * (stream_index + 1)));
  return Rng(mixer.next_u64());
}

std::uint64_t Rng::next_below(std::uint64_t range) {
  if (range == 0) throw std::domain_error("Rng::next_below: range must be >= 1");
  if (range == 1) return 0;
  // Reject the low tail so the modulo is exact: accept x >= 2^64 mod range.
  const std::uint64_t min = (~range + 1) % range;
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= min) return x % range;
  }
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::domain_error("Rng::uniform_int: empty range");
  return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi) - lo + 1));
}

}  // namespace parkfn
