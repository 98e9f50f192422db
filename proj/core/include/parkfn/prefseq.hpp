#pragma once

#include <compare>
#include <string>
#include <vector>

namespace parkfn {

enum class Variant { Classical, Prime, Rk };

std::string to_string(Variant variant);

// Parameters of the generalized parking condition: the i-th smallest
// preference may be at most offset + (i-1) * step. step=offset=1 is the
// classical condition.
struct RkParams {
  int step = 1;    // r
  int offset = 1;  // k

  RkParams() = default;
  RkParams(int step_, int offset_);

  // Largest admissible value for the i-th smallest preference (1-indexed).
  int bound(int i) const { return offset + (i - 1) * step; }

  // Modulus of the rotation group acting on length-n tuples.
  int modulus(int n) const { return offset + n * step; }

  friend bool operator==(const RkParams&, const RkParams&) = default;
};

// A sequence of parking preferences. Values are 1-indexed spot labels and
// must be >= 1; no upper bound is imposed at construction (the predicates
// enforce their own bounds).
class PrefSeq {
 public:
  PrefSeq() = default;
  explicit PrefSeq(std::vector<int> prefs);

  // Skips the value check. Caller guarantees every value >= 1.
  static PrefSeq unchecked(std::vector<int> prefs);

  int size() const { return static_cast<int>(prefs_.size()); }
  bool empty() const { return prefs_.empty(); }
  const std::vector<int>& values() const { return prefs_; }

  // Preference of car `car`, 1-indexed.
  int operator[](int car) const { return prefs_[car - 1]; }

  friend bool operator==(const PrefSeq&, const PrefSeq&) = default;
  friend std::strong_ordering operator<=>(const PrefSeq&, const PrefSeq&) = default;

 private:
  std::vector<int> prefs_;
};

// Result of the one-way-street parking process.
struct ParkOutcome {
  bool success = false;
  std::vector<int> assignment;  // car i (1-indexed) -> spot; filled on success
  int failing_car = 0;          // first car that could not park; 0 on success

  int spot_of(int car) const { return assignment[car - 1]; }
};

// The weakly increasing rearrangement of the preferences.
std::vector<int> increasing_rearrangement(const PrefSeq& seq);

// lambda_i <= i for the increasing rearrangement lambda. Empty is true.
bool is_parking_function(const PrefSeq& seq);

// A parking function where, for every j in 1..n-1, at least j+1 cars
// prefer the first j spots. The empty sequence is not prime; (1) is.
bool is_prime_parking_function(const PrefSeq& seq);

// lambda_i <= offset + (i-1) * step. Reduces to is_parking_function at
// step = offset = 1.
bool is_rk_parking_function(const PrefSeq& seq, const RkParams& params);

// Cars 1..n in order; car i takes the first free spot >= its preference.
// A preference beyond spot n makes that car the failing car.
ParkOutcome simulate_line_parking(const PrefSeq& seq);

}  // namespace parkfn
