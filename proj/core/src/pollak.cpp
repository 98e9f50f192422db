#include "parkfn/pollak.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ordered_blocks.hpp"
#include "parkfn/errors.hpp"

namespace parkfn {

ModTuple::ModTuple(std::vector<int> values_, int modulus_)
    : values(std::move(values_)), modulus(modulus_) {
  if (modulus < 1) throw std::domain_error("ModTuple: modulus must be >= 1");
  for (int v : values) {
    if (v < 1 || v > modulus) {
      throw std::domain_error("ModTuple: entries must lie in 1..modulus");
    }
  }
}

ModTuple rotate(const ModTuple& tuple, long long shift) {
  const int modulus = tuple.modulus;
  const int offset = static_cast<int>(((shift % modulus) + modulus) % modulus);
  ModTuple rotated = tuple;
  for (int& v : rotated.values) v = (v - 1 + offset) % modulus + 1;
  return rotated;
}

std::vector<int> valid_rotations(const ModTuple& tuple, const SeqPredicate& pred) {
  std::vector<int> shifts;
  for (int c = 0; c < tuple.modulus; ++c) {
    if (pred(rotate(tuple, c).as_prefseq())) shifts.push_back(c);
  }
  return shifts;
}

CircularOutcome circular_park(const ModTuple& tuple) {
  const int modulus = tuple.modulus;
  const int cars = tuple.size();
  if (modulus <= cars) throw std::domain_error("circular_park: needs modulus > n");
  CircularOutcome outcome;
  outcome.spot_to_car.assign(modulus, 0);
  // next[s] = candidate first free spot at or after s (0-based ring),
  // path-halved on lookup. At least one spot stays free, so the walk ends.
  std::vector<int> next(modulus);
  std::iota(next.begin(), next.end(), 0);
  auto find_free = [&next](int s) {
    while (next[s] != s) {
      next[s] = next[next[s]];
      s = next[s];
    }
    return s;
  };
  for (int car = 1; car <= cars; ++car) {
    const int spot = find_free(tuple.values[car - 1] - 1);
    outcome.spot_to_car[spot] = car;
    next[spot] = (spot + 1) % modulus;
  }
  for (int s = 0; s < modulus; ++s) {
    if (outcome.spot_to_car[s] == 0) outcome.empty_spots.push_back(s + 1);
  }
  return outcome;
}

PrefSeq canonicalize_classical(const ModTuple& tuple) {
  const int n = tuple.size();
  if (n < 1 || tuple.modulus != n + 1) {
    throw std::domain_error("canonicalize_classical: needs modulus = n+1, n >= 1");
  }
  // Rotating the tuple by c rotates the occupancy pattern by c, so the
  // shift that moves the single empty spot to n+1 is the parking rotation.
  const CircularOutcome parked = circular_park(tuple);
  const int empty = parked.empty_spots.front();
  const int shift = (tuple.modulus - empty) % tuple.modulus;
  PrefSeq result = rotate(tuple, shift).as_prefseq();
  if (!is_parking_function(result)) {
    throw std::logic_error("canonicalize_classical: rotation is not a parking function");
  }
  return result;
}

PrefSeq canonicalize_prime(const ModTuple& tuple) {
  const int n = tuple.size();
  if (n < 2 || tuple.modulus != n - 1) {
    throw std::domain_error("canonicalize_prime: needs modulus = n-1, n >= 2");
  }
  const std::vector<int> shifts = valid_rotations(tuple, [](const PrefSeq& seq) {
    return is_prime_parking_function(seq);
  });
  if (shifts.size() != 1) {
    throw std::logic_error("canonicalize_prime: expected exactly one prime rotation, found " +
                           std::to_string(shifts.size()));
  }
  return rotate(tuple, shifts.front()).as_prefseq();
}

std::vector<PrefSeq> rk_representatives(const ModTuple& tuple, const RkParams& params) {
  const int n = tuple.size();
  if (tuple.modulus != params.modulus(n)) {
    throw std::domain_error("rk_representatives: needs modulus = offset + n*step");
  }
  std::vector<PrefSeq> representatives;
  for (int c = 0; c < tuple.modulus; ++c) {
    PrefSeq candidate = rotate(tuple, c).as_prefseq();
    if (is_rk_parking_function(candidate, params)) {
      representatives.push_back(std::move(candidate));
    }
  }
  if (static_cast<int>(representatives.size()) != params.offset) {
    throw std::logic_error("rk_representatives: expected exactly " +
                           std::to_string(params.offset) + " representatives, found " +
                           std::to_string(representatives.size()));
  }
  return representatives;
}

namespace {

ModTuple draw_tuple(int n, int modulus, Rng& rng) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int& v : values) v = rng.uniform_int(1, modulus);
  return ModTuple(std::move(values), modulus);
}

}  // namespace

PrefSeq sample_classical(int n, Rng& rng) {
  if (n < 0) throw std::domain_error("sample_classical: n must be >= 0");
  if (n == 0) return PrefSeq{};
  return canonicalize_classical(draw_tuple(n, n + 1, rng));
}

PrefSeq sample_prime(int n, Rng& rng) {
  if (n < 1) throw std::domain_error("sample_prime: n must be >= 1");
  if (n == 1) return PrefSeq({1});  // the coset machinery degenerates at n=1
  return canonicalize_prime(draw_tuple(n, n - 1, rng));
}

PrefSeq sample_rk(int n, const RkParams& params, Rng& rng) {
  if (n < 0) throw std::domain_error("sample_rk: n must be >= 0");
  if (n == 0) return PrefSeq{};
  const std::vector<PrefSeq> representatives =
      rk_representatives(draw_tuple(n, params.modulus(n), rng), params);
  const int index = rng.uniform_int(0, params.offset - 1);
  return representatives[static_cast<std::size_t>(index)];
}

namespace {

constexpr std::uint64_t kEnumBlock = 16384;

std::uint64_t representative_count(int modulus, int free_coords, std::uint64_t budget) {
  std::uint64_t count = 1;
  for (int i = 0; i < free_coords; ++i) {
    if (count > budget / static_cast<std::uint64_t>(modulus)) {
      throw BudgetError("enumeration would visit more than " + std::to_string(budget) +
                        " coset representatives");
    }
    count *= static_cast<std::uint64_t>(modulus);
  }
  if (count > budget) {
    throw BudgetError("enumeration would visit more than " + std::to_string(budget) +
                      " coset representatives");
  }
  return count;
}

// Representative index -> tuple: first coordinate pinned to 1, remaining
// coordinates are the base-M digits (least significant at position 2).
void decode_representative(std::uint64_t index, int modulus, std::vector<int>& tuple) {
  for (std::size_t j = 1; j < tuple.size(); ++j) {
    tuple[j] = 1 + static_cast<int>(index % static_cast<std::uint64_t>(modulus));
    index /= static_cast<std::uint64_t>(modulus);
  }
}

void advance_representative(std::vector<int>& tuple, int modulus) {
  for (std::size_t j = 1; j < tuple.size(); ++j) {
    if (tuple[j] < modulus) {
      ++tuple[j];
      return;
    }
    tuple[j] = 1;
  }
}

void enumerate_cosets(int n, int modulus, const EnumOptions& options, const SeqSink& sink,
                      const std::function<void(const ModTuple&, std::vector<PrefSeq>&)>& emit) {
  const std::uint64_t reps = representative_count(modulus, n - 1, options.budget);
  const std::uint64_t blocks = (reps + kEnumBlock - 1) / kEnumBlock;
  detail::ordered_blocks<PrefSeq>(
      blocks, options.threads,
      [&](std::uint64_t block, std::vector<PrefSeq>& out) {
        const std::uint64_t begin = block * kEnumBlock;
        const std::uint64_t end = std::min(reps, begin + kEnumBlock);
        ModTuple tuple(std::vector<int>(static_cast<std::size_t>(n), 1), modulus);
        decode_representative(begin, modulus, tuple.values);
        for (std::uint64_t i = begin; i < end; ++i) {
          emit(tuple, out);
          advance_representative(tuple.values, modulus);
        }
      },
      [&](std::vector<PrefSeq>& items) {
        for (PrefSeq& seq : items) sink(seq);
      });
}

}  // namespace

void enumerate_classical(int n, const SeqSink& sink, const EnumOptions& options) {
  if (n < 0) throw std::domain_error("enumerate_classical: n must be >= 0");
  if (n == 0) {
    sink(PrefSeq{});
    return;
  }
  enumerate_cosets(n, n + 1, options, sink,
                   [](const ModTuple& tuple, std::vector<PrefSeq>& out) {
                     out.push_back(canonicalize_classical(tuple));
                   });
}

void enumerate_prime(int n, const SeqSink& sink, const EnumOptions& options) {
  if (n < 0) throw std::domain_error("enumerate_prime: n must be >= 0");
  if (n == 0) return;  // no prime parking functions of length 0
  if (n == 1) {
    sink(PrefSeq({1}));
    return;
  }
  enumerate_cosets(n, n - 1, options, sink,
                   [](const ModTuple& tuple, std::vector<PrefSeq>& out) {
                     out.push_back(canonicalize_prime(tuple));
                   });
}

void enumerate_rk(int n, const RkParams& params, const SeqSink& sink,
                  const EnumOptions& options) {
  if (n < 0) throw std::domain_error("enumerate_rk: n must be >= 0");
  if (n == 0) {
    sink(PrefSeq{});
    return;
  }
  enumerate_cosets(n, params.modulus(n), options, sink,
                   [&params](const ModTuple& tuple, std::vector<PrefSeq>& out) {
                     for (PrefSeq& seq : rk_representatives(tuple, params)) {
                       out.push_back(std::move(seq));
                     }
                   });
}

}  // namespace parkfn
