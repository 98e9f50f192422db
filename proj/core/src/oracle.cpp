#include "parkfn/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "parkfn/cycles.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/pollak.hpp"

namespace parkfn {

Count Histogram::total() const {
  Count sum = 0;
  for (const auto& [key, value] : bins) sum += value;
  return sum;
}

Count Histogram::at(int key) const {
  const auto it = bins.find(key);
  return it == bins.end() ? Count(0) : it->second;
}

namespace {

int candidate_bound(int n, Variant variant, const std::optional<RkParams>& params) {
  switch (variant) {
    case Variant::Classical:
      return n;
    case Variant::Prime:
      // values above n-1 cannot appear in a prime parking function, except
      // that PPF_1 = {(1)} needs the value 1 itself
      return n >= 2 ? n - 1 : 1;
    case Variant::Rk:
      return params->bound(n);
  }
  throw std::domain_error("candidate_bound: unknown variant");
}

std::function<bool(const PrefSeq&)> variant_predicate(Variant variant,
                                                      const std::optional<RkParams>& params) {
  switch (variant) {
    case Variant::Classical:
      return [](const PrefSeq& seq) { return is_parking_function(seq); };
    case Variant::Prime:
      return [](const PrefSeq& seq) { return is_prime_parking_function(seq); };
    case Variant::Rk:
      return [p = *params](const PrefSeq& seq) { return is_rk_parking_function(seq, p); };
  }
  throw std::domain_error("variant_predicate: unknown variant");
}

std::uint64_t checked_power(int base, int exponent, std::uint64_t budget, const char* what) {
  std::uint64_t count = 1;
  for (int i = 0; i < exponent; ++i) {
    if (count > budget / static_cast<std::uint64_t>(base)) {
      throw BudgetError(std::string(what) + " would visit more than " + std::to_string(budget) +
                        " candidates");
    }
    count *= static_cast<std::uint64_t>(base);
  }
  if (count > budget) {
    throw BudgetError(std::string(what) + " would visit more than " + std::to_string(budget) +
                      " candidates");
  }
  return count;
}

// Candidates in lexicographic order: index ascending with the last
// coordinate as the least significant digit.
void decode_candidate(std::uint64_t index, int bound, std::vector<int>& values) {
  for (std::size_t j = values.size(); j-- > 0;) {
    values[j] = 1 + static_cast<int>(index % static_cast<std::uint64_t>(bound));
    index /= static_cast<std::uint64_t>(bound);
  }
}

void advance_candidate(std::vector<int>& values, int bound) {
  for (std::size_t j = values.size(); j-- > 0;) {
    if (values[j] < bound) {
      ++values[j];
      return;
    }
    values[j] = 1;
  }
}

}  // namespace

std::vector<PrefSeq> brute_force_set(int n, Variant variant,
                                     const std::optional<RkParams>& params,
                                     const BruteForceOptions& options) {
  if (n < 0) throw std::domain_error("brute_force_set: n must be >= 0");
  if (variant == Variant::Rk && !params) {
    throw std::domain_error("brute_force_set: rk variant needs parameters");
  }
  const auto pred = variant_predicate(variant, params);
  if (n == 0) {
    std::vector<PrefSeq> result;
    if (pred(PrefSeq{})) result.push_back(PrefSeq{});
    return result;
  }
  const int bound = candidate_bound(n, variant, params);
  const std::uint64_t candidates = checked_power(bound, n, options.budget, "brute_force_set");

  const auto scan = [&](std::uint64_t begin, std::uint64_t end, std::vector<PrefSeq>& out) {
    std::vector<int> values(static_cast<std::size_t>(n));
    decode_candidate(begin, bound, values);
    for (std::uint64_t i = begin; i < end; ++i) {
      PrefSeq candidate = PrefSeq::unchecked(values);
      if (pred(candidate)) out.push_back(std::move(candidate));
      advance_candidate(values, bound);
    }
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1 || candidates < 4096) {
    std::vector<PrefSeq> result;
    scan(0, candidates, result);
    return result;
  }
  const std::uint64_t per =
      (candidates + static_cast<std::uint64_t>(threads) - 1) / static_cast<std::uint64_t>(threads);
  std::vector<std::vector<PrefSeq>> parts(static_cast<std::size_t>(threads));
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min(candidates, static_cast<std::uint64_t>(t) * per);
    const std::uint64_t end = std::min(candidates, begin + per);
    workers.emplace_back([&scan, &parts, t, begin, end] { scan(begin, end, parts[static_cast<std::size_t>(t)]); });
  }
  for (std::thread& w : workers) w.join();
  std::vector<PrefSeq> result;
  for (std::vector<PrefSeq>& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(result));
  }
  return result;
}

Histogram tabulate_fixed_points(const std::vector<PrefSeq>& population) {
  Histogram hist;
  for (const PrefSeq& seq : population) {
    hist.bins[static_cast<int>(fixed_points(seq).size())] += 1;
  }
  return hist;
}

Histogram tabulate_m_cycles(const std::vector<PrefSeq>& population, int m) {
  Histogram hist;
  for (const PrefSeq& seq : population) {
    hist.bins[count_m_cycles_naive(seq, m)] += 1;
  }
  return hist;
}

int count_m_cycles_naive(const PrefSeq& seq, int m) {
  if (m < 1) throw std::domain_error("count_m_cycles_naive: m must be >= 1");
  const int n = seq.size();
  for (int i = 1; i <= n; ++i) {
    if (seq[i] > n) throw std::domain_error("count_m_cycles_naive: sequence is not a self-map");
  }
  if (m > n) return 0;
  std::vector<int> comb(static_cast<std::size_t>(m));
  std::iota(comb.begin(), comb.end(), 1);
  std::vector<char> member(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int count = 0;
  for (;;) {
    for (int v : comb) member[static_cast<std::size_t>(v)] = 1;
    // a single m-cycle visits every member exactly once, then returns
    int u = comb[0];
    bool single_cycle = true;
    for (int step = 0; step < m; ++step) {
      if (!member[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)]) {
        single_cycle = false;
        break;
      }
      seen[static_cast<std::size_t>(u)] = 1;
      u = seq[u];
    }
    if (single_cycle && u == comb[0]) ++count;
    for (int v : comb) {
      member[static_cast<std::size_t>(v)] = 0;
      seen[static_cast<std::size_t>(v)] = 0;
    }
    int i = m - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - (m - 1 - i)) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return count;
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::ClassicalFixed:
      return "T2.1";
    case TheoremId::ClassicalCycles:
      return "T2.2";
    case TheoremId::ClassicalExpectation:
      return "T2.3";
    case TheoremId::PrimeFixed:
      return "T3.1";
    case TheoremId::PrimeCycles:
      return "T3.2";
    case TheoremId::PrimeExpectation:
      return "T3.3";
    case TheoremId::RkSortedPrefix:
      return "P4.1";
    case TheoremId::CosetClassical:
      return "coset-classical";
    case TheoremId::CosetPrime:
      return "coset-prime";
    case TheoremId::CosetRk:
      return "coset-rk";
  }
  return {};
}

std::vector<TheoremId> all_theorem_ids() {
  return {
      TheoremId::ClassicalFixed,  TheoremId::ClassicalCycles, TheoremId::ClassicalExpectation,
      TheoremId::PrimeFixed,      TheoremId::PrimeCycles,     TheoremId::PrimeExpectation,
      TheoremId::RkSortedPrefix,  TheoremId::CosetClassical,  TheoremId::CosetPrime,
      TheoremId::CosetRk,
  };
}

std::optional<TheoremId> parse_theorem_id(const std::string& text) {
  for (TheoremId id : all_theorem_ids()) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

namespace {

using Params = std::vector<std::pair<std::string, long long>>;

VerificationReport make_report(TheoremId id, Params params, std::string formula,
                               std::string oracle, bool known_issue = false) {
  VerificationReport report;
  report.theorem_id = to_string(id);
  report.params = std::move(params);
  report.pass = formula == oracle;
  report.formula_value = std::move(formula);
  report.oracle_value = std::move(oracle);
  report.known_issue = known_issue;
  return report;
}

Count total_m_cycles(const Histogram& hist) {
  Count total = 0;
  for (const auto& [key, value] : hist.bins) total += key * value;
  return total;
}

bool has_increasing_prefix(const PrefSeq& seq, int s) {
  for (int i = 1; i < s; ++i) {
    if (seq[i] >= seq[i + 1]) return false;
  }
  return true;
}

std::vector<VerificationReport> verify_classical_fixed(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  const BruteForceOptions bf{grid.budget, grid.threads};
  for (int n = 0; n <= grid.max_n; ++n) {
    const Histogram hist = tabulate_fixed_points(brute_force_set(n, Variant::Classical, {}, bf));
    for (int k = 0; k <= n; ++k) {
      reports.push_back(make_report(TheoremId::ClassicalFixed, {{"n", n}, {"k", k}},
                                    count_fixed_classical(n, k).str(), hist.at(k).str()));
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_classical_cycles(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  const BruteForceOptions bf{grid.budget, grid.threads};
  for (int n = 1; n <= grid.max_n; ++n) {
    const std::vector<PrefSeq> population = brute_force_set(n, Variant::Classical, {}, bf);
    for (int m = 1; m <= n; ++m) {
      const Histogram hist = tabulate_m_cycles(population, m);
      for (int k = 0; k <= n / m; ++k) {
        reports.push_back(make_report(TheoremId::ClassicalCycles, {{"n", n}, {"m", m}, {"k", k}},
                                      count_cycles_classical(n, m, k).str(), hist.at(k).str()));
      }
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_classical_expectation(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  const BruteForceOptions bf{grid.budget, grid.threads};
  for (int n = 1; n <= grid.max_n; ++n) {
    const std::vector<PrefSeq> population = brute_force_set(n, Variant::Classical, {}, bf);
    for (int m = 1; m <= n; ++m) {
      const Rational observed(total_m_cycles(tabulate_m_cycles(population, m)),
                              Count(population.size()));
      reports.push_back(make_report(TheoremId::ClassicalExpectation, {{"n", n}, {"m", m}},
                                    to_fraction_string(expected_cycles_classical(n, m)),
                                    to_fraction_string(observed)));
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_prime_fixed(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  const BruteForceOptions bf{grid.budget, grid.threads};
  for (int n = 1; n <= grid.max_n; ++n) {
    const Histogram hist = tabulate_fixed_points(brute_force_set(n, Variant::Prime, {}, bf));
    for (int k = 0; k <= n - 1; ++k) {
      // the n=1 point is a recorded mismatch: the formula gives 1 sequence
      // with no fixed point, but (1) maps 1 to itself
      reports.push_back(make_report(TheoremId::PrimeFixed, {{"n", n}, {"k", k}},
                                    count_fixed_prime(n, k).str(), hist.at(k).str(),
                                    /*known_issue=*/n == 1));
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_prime_cycles(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  const BruteForceOptions bf{grid.budget, grid.threads};
  for (int n = 2; n <= grid.max_n; ++n) {
    const std::vector<PrefSeq> population = brute_force_set(n, Variant::Prime, {}, bf);
    for (int m = 1; m <= n - 1; ++m) {
      const Histogram hist = tabulate_m_cycles(population, m);
      for (int k = 0; k <= (n - 1) / m; ++k) {
        reports.push_back(make_report(TheoremId::PrimeCycles, {{"n", n}, {"m", m}, {"k", k}},
                                      count_cycles_prime(n, m, k).str(), hist.at(k).str()));
      }
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_prime_expectation(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  const BruteForceOptions bf{grid.budget, grid.threads};
  for (int n = 2; n <= grid.max_n; ++n) {
    const std::vector<PrefSeq> population = brute_force_set(n, Variant::Prime, {}, bf);
    for (int m = 1; m <= n - 1; ++m) {
      const Rational observed(total_m_cycles(tabulate_m_cycles(population, m)),
                              Count(population.size()));
      reports.push_back(make_report(TheoremId::PrimeExpectation, {{"n", n}, {"m", m}},
                                    to_fraction_string(expected_cycles_prime(n, m)),
                                    to_fraction_string(observed)));
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_rk_sorted_prefix(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  const BruteForceOptions bf{grid.budget, grid.threads};
  for (int r = 1; r <= grid.max_r; ++r) {
    for (int k = 1; k <= grid.max_k; ++k) {
      const RkParams params(r, k);
      for (int n = 0; n <= grid.max_n_rk; ++n) {
        const std::vector<PrefSeq> population = brute_force_set(n, Variant::Rk, params, bf);
        for (int s = 0; s <= n; ++s) {
          Count observed = 0;
          for (const PrefSeq& seq : population) {
            if (has_increasing_prefix(seq, s)) ++observed;
          }
          reports.push_back(make_report(TheoremId::RkSortedPrefix,
                                        {{"n", n}, {"r", r}, {"k", k}, {"s", s}},
                                        count_sorted_prefix_rk(n, params, s).str(),
                                        observed.str()));
        }
      }
    }
  }
  return reports;
}

// Scans the whole ambient space [M]^n and counts tuples whose number of
// valid rotations differs from the predicted constant.
Count coset_violations(int n, int modulus, std::uint64_t budget, int expected,
                       const std::function<bool(const PrefSeq&)>& pred) {
  const std::uint64_t tuples = checked_power(modulus, n, budget, "coset scan");
  std::vector<int> values(static_cast<std::size_t>(n), 1);
  Count violations = 0;
  for (std::uint64_t i = 0; i < tuples; ++i) {
    const ModTuple tuple(values, modulus);
    if (static_cast<int>(valid_rotations(tuple, pred).size()) != expected) ++violations;
    advance_candidate(values, modulus);
  }
  return violations;
}

std::vector<VerificationReport> verify_coset_classical(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  for (int n = 1; n <= grid.max_n; ++n) {
    const Count violations = coset_violations(
        n, n + 1, grid.budget, 1, [](const PrefSeq& seq) { return is_parking_function(seq); });
    reports.push_back(
        make_report(TheoremId::CosetClassical, {{"n", n}}, "0", violations.str()));
  }
  return reports;
}

std::vector<VerificationReport> verify_coset_prime(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  for (int n = 2; n <= grid.max_n; ++n) {
    const Count violations =
        coset_violations(n, n - 1, grid.budget, 1,
                         [](const PrefSeq& seq) { return is_prime_parking_function(seq); });
    reports.push_back(make_report(TheoremId::CosetPrime, {{"n", n}}, "0", violations.str()));
  }
  return reports;
}

std::vector<VerificationReport> verify_coset_rk(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  for (int r = 1; r <= grid.max_r; ++r) {
    for (int k = 1; k <= grid.max_k; ++k) {
      const RkParams params(r, k);
      for (int n = 1; n <= grid.max_n_rk; ++n) {
        const Count violations =
            coset_violations(n, params.modulus(n), grid.budget, k,
                             [&params](const PrefSeq& seq) {
                               return is_rk_parking_function(seq, params);
                             });
        reports.push_back(make_report(TheoremId::CosetRk, {{"n", n}, {"r", r}, {"k", k}}, "0",
                                      violations.str()));
      }
    }
  }
  return reports;
}

}  // namespace

std::vector<VerificationReport> verify(TheoremId theorem, const ParamGrid& grid) {
  switch (theorem) {
    case TheoremId::ClassicalFixed:
      return verify_classical_fixed(grid);
    case TheoremId::ClassicalCycles:
      return verify_classical_cycles(grid);
    case TheoremId::ClassicalExpectation:
      return verify_classical_expectation(grid);
    case TheoremId::PrimeFixed:
      return verify_prime_fixed(grid);
    case TheoremId::PrimeCycles:
      return verify_prime_cycles(grid);
    case TheoremId::PrimeExpectation:
      return verify_prime_expectation(grid);
    case TheoremId::RkSortedPrefix:
      return verify_rk_sorted_prefix(grid);
    case TheoremId::CosetClassical:
      return verify_coset_classical(grid);
    case TheoremId::CosetPrime:
      return verify_coset_prime(grid);
    case TheoremId::CosetRk:
      return verify_coset_rk(grid);
  }
  throw std::domain_error("verify: unknown theorem");
}

std::vector<VerificationReport> verify_all(const ParamGrid& grid) {
  std::vector<VerificationReport> reports;
  for (TheoremId id : all_theorem_ids()) {
    std::vector<VerificationReport> part = verify(id, grid);
    std::move(part.begin(), part.end(), std::back_inserter(reports));
  }
  return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
    return r.pass || r.known_issue;
  });
}

}  // namespace parkfn
