#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "parkfn/prefseq.hpp"
#include "parkfn/rng.hpp"

namespace parkfn {

// Rotation-coset machinery. The diagonal subgroup of Z_M^n generated by
// (1,...,1) acts on tuples by adding a constant to every entry mod M.
// With M = n+1 each coset holds exactly one parking function; with
// M = n-1 exactly one prime parking function; with M = offset + n*step
// exactly `offset` (r,k)-parking functions. Canonicalization, exact
// uniform sampling and duplicate-free enumeration all follow from this.

// Length-n tuple with entries in {1..modulus}.
struct ModTuple {
  std::vector<int> values;
  int modulus = 1;

  ModTuple() = default;
  ModTuple(std::vector<int> values_, int modulus_);

  int size() const { return static_cast<int>(values.size()); }
  PrefSeq as_prefseq() const { return PrefSeq::unchecked(values); }

  friend bool operator==(const ModTuple&, const ModTuple&) = default;
};

// Occupancy after parking all n cars on a circle of `modulus` spots.
struct CircularOutcome {
  std::vector<int> spot_to_car;  // spot (1-indexed) -> car; 0 when empty
  std::vector<int> empty_spots;  // ascending; modulus - n of them

  int car_at(int spot) const { return spot_to_car[spot - 1]; }
};

// Adds `shift` to every entry modulo M (entries stay in 1..M). Negative
// shifts are fine; rotate(t, a+b) == rotate(rotate(t, a), b).
ModTuple rotate(const ModTuple& tuple, long long shift);

using SeqPredicate = std::function<bool(const PrefSeq&)>;

// All shifts c in {0..M-1} whose rotation satisfies the predicate, ascending.
std::vector<int> valid_rotations(const ModTuple& tuple, const SeqPredicate& pred);

// Cars 1..n in order; car i parks at the first free spot clockwise from
// its preference, wrapping modulus -> 1. Requires modulus > n, so every
// car parks. For modulus = n+1 the tuple is a parking function exactly
// when the one empty spot is n+1.
CircularOutcome circular_park(const ModTuple& tuple);

// The unique rotation of the tuple that is a parking function.
// Requires modulus = n+1, n >= 1. Computed in O(n) from the empty spot of
// the circular process; a result that fails the predicate is a defect.
PrefSeq canonicalize_classical(const ModTuple& tuple);

// The unique rotation that is a prime parking function. Requires
// modulus = n-1, n >= 2. Rotation scan; uniqueness violations throw.
PrefSeq canonicalize_prime(const ModTuple& tuple);

// The exactly-`offset` rotations that are (r,k)-parking functions, in
// ascending shift order. Requires modulus = params.modulus(n).
std::vector<PrefSeq> rk_representatives(const ModTuple& tuple, const RkParams& params);

// Exactly uniform samplers: draw a uniform tuple, canonicalize. The (r,k)
// sampler additionally draws a uniform index among the representatives.
// Draw order is fixed (coordinates 1..n, then the index), so outputs are
// a pure function of the rng state.
PrefSeq sample_classical(int n, Rng& rng);
PrefSeq sample_prime(int n, Rng& rng);
PrefSeq sample_rk(int n, const RkParams& params, Rng& rng);

struct EnumOptions {
  std::uint64_t budget = 100'000'000;  // max coset representatives
  int threads = 1;
};

using SeqSink = std::function<void(const PrefSeq&)>;

// Duplicate-free enumeration: one representative per coset (first
// coordinate pinned to 1), canonicalized. Yields every parking function
// of the variant exactly once, in an order that is deterministic and
// independent of the thread count. Throws BudgetError before starting
// when the representative space exceeds the budget.
void enumerate_classical(int n, const SeqSink& sink, const EnumOptions& options = {});
void enumerate_prime(int n, const SeqSink& sink, const EnumOptions& options = {});
void enumerate_rk(int n, const RkParams& params, const SeqSink& sink,
                  const EnumOptions& options = {});

}  // namespace parkfn
