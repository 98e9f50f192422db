#pragma once

#include <map>
#include <vector>

#include "parkfn/prefseq.hpp"

namespace parkfn {

// Cycle-length census of the functional graph i -> pi_i. counts[m] is the
// number of m-cycles; zero entries are omitted. Cycles are unordered index
// sets with the cyclic successor structure, each counted once.
struct CycleCensus {
  std::map<int, int> counts;

  int at(int length) const;
  int nodes_on_cycles() const;  // sum of m * counts[m], always <= n

  friend bool operator==(const CycleCensus&, const CycleCensus&) = default;
};

// Indices i with pi_i = i, ascending, 1-indexed.
std::vector<int> fixed_points(const PrefSeq& seq);

// Requires every value <= n, i.e. the sequence is a self-map of {1..n}.
// Every parking function satisfies this.
CycleCensus cycle_census(const PrefSeq& seq);

// counts[m] of the census; 0 when no m-cycle exists. m >= 1.
int count_m_cycles(const PrefSeq& seq, int m);

}  // namespace parkfn
