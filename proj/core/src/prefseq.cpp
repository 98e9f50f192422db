#include "parkfn/prefseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace parkfn {

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::Classical: return "classical";
    case Variant::Prime: return "prime";
    case Variant::Rk: return "rk";
  }
  throw std::logic_error("unknown variant");
}

RkParams::RkParams(int step_, int offset_) : step(step_), offset(offset_) {
  if (step < 1 || offset < 1) {
    throw std::domain_error("RkParams: step and offset must be >= 1");
  }
}

PrefSeq::PrefSeq(std::vector<int> prefs) : prefs_(std::move(prefs)) {
  for (int v : prefs_) {
    if (v < 1) throw std::domain_error("PrefSeq: preference values must be >= 1");
  }
}

PrefSeq PrefSeq::unchecked(std::vector<int> prefs) {
  PrefSeq seq;
  seq.prefs_ = std::move(prefs);
  return seq;
}

std::vector<int> increasing_rearrangement(const PrefSeq& seq) {
  std::vector<int> sorted = seq.values();
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

bool is_parking_function(const PrefSeq& seq) {
  const std::vector<int> sorted = increasing_rearrangement(seq);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i] > i + 1) return false;
  }
  return true;
}

bool is_prime_parking_function(const PrefSeq& seq) {
  const int n = seq.size();
  if (n == 0) return false;
  if (!is_parking_function(seq)) return false;
  // All values are <= n here. One counting pass gives, for every j,
  // the number of cars preferring the first j spots.
  std::vector<int> tally(n + 1, 0);
  for (int v : seq.values()) ++tally[v];
  int prefer_at_most = 0;
  for (int j = 1; j <= n - 1; ++j) {
    prefer_at_most += tally[j];
    if (prefer_at_most < j + 1) return false;
  }
  return true;
}

bool is_rk_parking_function(const PrefSeq& seq, const RkParams& params) {
  const std::vector<int> sorted = increasing_rearrangement(seq);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i] > params.bound(i + 1)) return false;
  }
  return true;
}

ParkOutcome simulate_line_parking(const PrefSeq& seq) {
  const int n = seq.size();
  ParkOutcome outcome;
  outcome.assignment.assign(n, 0);
  std::vector<bool> occupied(n + 1, false);
  for (int car = 1; car <= n; ++car) {
    const int preferred = seq[car];
    if (preferred > n) {
      outcome.success = false;
      outcome.failing_car = car;
      outcome.assignment.clear();
      return outcome;
    }
    int spot = preferred;
    while (spot <= n && occupied[spot]) ++spot;
    if (spot > n) {
      outcome.success = false;
      outcome.failing_car = car;
      outcome.assignment.clear();
      return outcome;
    }
    occupied[spot] = true;
    outcome.assignment[car - 1] = spot;
  }
  outcome.success = true;
  return outcome;
}

}  // namespace parkfn
