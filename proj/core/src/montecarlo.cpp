#include "parkfn/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "parkfn/cycles.hpp"
#include "parkfn/pollak.hpp"
#include "parkfn/rng.hpp"

namespace parkfn {

namespace {

constexpr std::uint64_t kSampleBlock = 4096;

struct BlockTally {
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
};

}  // namespace

Estimate estimate_expected_cycles(int n, int m, Variant variant, std::uint64_t samples,
                                  std::uint64_t seed, const EstimateOptions& options) {
  if (variant == Variant::Rk) {
    throw std::domain_error("estimate_expected_cycles: classical or prime only");
  }
  if (samples < 2) {
    throw std::domain_error("estimate_expected_cycles: needs at least 2 samples");
  }
  // validates n and m up front
  const Rational exact = variant == Variant::Classical ? expected_cycles_classical(n, m)
                                                       : expected_cycles_prime(n, m);

  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  const auto run_block = [&](std::uint64_t block, BlockTally& tally) {
    Rng rng = Rng::substream(seed, block);
    const std::uint64_t begin = block * kSampleBlock;
    const std::uint64_t count = std::min(samples - begin, kSampleBlock);
    for (std::uint64_t i = 0; i < count; ++i) {
      const PrefSeq seq =
          variant == Variant::Classical ? sample_classical(n, rng) : sample_prime(n, rng);
      const std::uint64_t cycles = static_cast<std::uint64_t>(count_m_cycles(seq, m));
      tally.sum += cycles;
      tally.sum_squares += cycles * cycles;
    }
  };

  // Integer tallies make the reduction order irrelevant, so any thread
  // count yields the same totals.
  BlockTally total;
  const int threads = std::max(1, options.threads);
  if (threads == 1 || blocks == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b, total);
  } else {
    std::atomic<std::uint64_t> next_block{0};
    std::vector<BlockTally> partials(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (;;) {
          const std::uint64_t b = next_block.fetch_add(1);
          if (b >= blocks) return;
          run_block(b, partials[static_cast<std::size_t>(t)]);
        }
      });
    }
    for (std::thread& w : workers) w.join();
    for (const BlockTally& part : partials) {
      total.sum += part.sum;
      total.sum_squares += part.sum_squares;
    }
  }

  Estimate estimate;
  estimate.samples = samples;
  estimate.seed = seed;
  estimate.exact_value = exact;
  const double count = static_cast<double>(samples);
  estimate.mean = static_cast<double>(total.sum) / count;
  const double centered =
      static_cast<double>(total.sum_squares) - static_cast<double>(total.sum) * estimate.mean;
  const double variance = std::max(0.0, centered / (count - 1.0));
  estimate.std_error = std::sqrt(variance / count);
  return estimate;
}

}  // namespace parkfn
