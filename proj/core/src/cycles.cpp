#include "parkfn/cycles.hpp"

#include <stdexcept>

namespace parkfn {

int CycleCensus::at(int length) const {
  auto it = counts.find(length);
  return it == counts.end() ? 0 : it->second;
}

int CycleCensus::nodes_on_cycles() const {
  int total = 0;
  for (const auto& [length, count] : counts) total += length * count;
  return total;
}

std::vector<int> fixed_points(const PrefSeq& seq) {
  std::vector<int> fixed;
  for (int i = 1; i <= seq.size(); ++i) {
    if (seq[i] == i) fixed.push_back(i);
  }
  return fixed;
}

CycleCensus cycle_census(const PrefSeq& seq) {
  const int n = seq.size();
  for (int v : seq.values()) {
    if (v > n) throw std::domain_error("cycle_census: sequence is not a self-map of {1..n}");
  }
  CycleCensus census;
  // 0 = unvisited, 1 = on the current walk, 2 = finished.
  std::vector<unsigned char> state(n + 1, 0);
  std::vector<int> walk;
  for (int start = 1; start <= n; ++start) {
    if (state[start] != 0) continue;
    walk.clear();
    int node = start;
    while (state[node] == 0) {
      state[node] = 1;
      walk.push_back(node);
      node = seq[node];
    }
    if (state[node] == 1) {
      // Closed a new cycle; its length is the tail of the walk from `node`.
      int tail = 0;
      for (auto it = walk.rbegin(); *it != node; ++it) ++tail;
      ++census.counts[tail + 1];
    }
    for (int visited : walk) state[visited] = 2;
  }
  return census;
}

int count_m_cycles(const PrefSeq& seq, int m) {
  if (m < 1) throw std::domain_error("count_m_cycles: m must be >= 1");
  return cycle_census(seq).at(m);
}

}  // namespace parkfn
