#pragma once

#include <vector>

#include "parkfn/prefseq.hpp"
#include "parkfn/rng.hpp"

namespace testutil {

// Calls f(values) for every tuple in [bound]^n, lexicographic order.
template <typename F>
void for_each_tuple(int n, int bound, F f) {
  std::vector<int> values(static_cast<std::size_t>(n), 1);
  if (n == 0) {
    f(values);
    return;
  }
  if (bound < 1) return;
  for (;;) {
    f(values);
    int j = n - 1;
    while (j >= 0 && values[static_cast<std::size_t>(j)] == bound) {
      values[static_cast<std::size_t>(j)] = 1;
      --j;
    }
    if (j < 0) return;
    ++values[static_cast<std::size_t>(j)];
  }
}

inline std::vector<int> random_tuple(int n, int bound, parkfn::Rng& rng) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int& v : values) v = rng.uniform_int(1, bound);
  return values;
}

inline void shuffle(std::vector<int>& values, parkfn::Rng& rng) {
  for (int i = static_cast<int>(values.size()) - 1; i > 0; --i) {
    const int j = rng.uniform_int(0, i);
    std::swap(values[static_cast<std::size_t>(i)], values[static_cast<std::size_t>(j)]);
  }
}

}  // namespace testutil
