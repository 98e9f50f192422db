#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "parkfn/counting.hpp"
#include "parkfn/cycles.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/oracle.hpp"
#include "parkfn/pollak.hpp"
#include "test_util.hpp"

using namespace parkfn;
using testutil::for_each_tuple;

TEST_CASE("brute_force_set basics") {
  CHECK(brute_force_set(2, Variant::Classical) ==
        std::vector<PrefSeq>{PrefSeq({1, 1}), PrefSeq({1, 2}), PrefSeq({2, 1})});
  CHECK(brute_force_set(0, Variant::Classical) == std::vector<PrefSeq>{PrefSeq{}});
  CHECK(brute_force_set(0, Variant::Prime).empty());
  CHECK(brute_force_set(1, Variant::Prime) == std::vector<PrefSeq>{PrefSeq({1})});
  CHECK(brute_force_set(3, Variant::Prime) ==
        std::vector<PrefSeq>{PrefSeq({1, 1, 1}), PrefSeq({1, 1, 2}), PrefSeq({1, 2, 1}),
                             PrefSeq({2, 1, 1})});
  CHECK(brute_force_set(0, Variant::Rk, RkParams(2, 3)) == std::vector<PrefSeq>{PrefSeq{}});
  CHECK_THROWS_AS(brute_force_set(2, Variant::Rk), std::domain_error);
  CHECK_THROWS_AS(brute_force_set(-1, Variant::Classical), std::domain_error);
}

TEST_CASE("brute_force_set budget") {
  BruteForceOptions options;
  options.budget = 1000;
  CHECK_THROWS_AS(brute_force_set(12, Variant::Classical, {}, options), BudgetError);
  CHECK_THROWS_AS(brute_force_set(8, Variant::Rk, RkParams(3, 3), options), BudgetError);
}

TEST_CASE("population sizes match closed forms") {
  for (int n = 0; n <= 7; ++n) {
    CHECK(Count(brute_force_set(n, Variant::Classical).size()) == count_parking_functions(n));
  }
  for (int n = 2; n <= 7; ++n) {
    CHECK(Count(brute_force_set(n, Variant::Prime).size()) ==
          count_prime_parking_functions(n));
  }
  for (int r = 1; r <= 3; ++r) {
    for (int k = 1; k <= 3; ++k) {
      const RkParams params(r, k);
      for (int n = 0; n <= 4; ++n) {
        CHECK(Count(brute_force_set(n, Variant::Rk, params).size()) ==
              count_rk_parking_functions(n, params));
      }
    }
  }
}

TEST_CASE("brute_force_set is identical for any thread count") {
  BruteForceOptions four;
  four.threads = 4;
  CHECK(brute_force_set(5, Variant::Classical) ==
        brute_force_set(5, Variant::Classical, {}, four));
  CHECK(brute_force_set(6, Variant::Prime) == brute_force_set(6, Variant::Prime, {}, four));
  const RkParams params(2, 2);
  CHECK(brute_force_set(4, Variant::Rk, params) ==
        brute_force_set(4, Variant::Rk, params, four));
}

TEST_CASE("tabulate histograms") {
  const auto pf3 = brute_force_set(3, Variant::Classical);
  const Histogram fixed3 = tabulate_fixed_points(pf3);
  CHECK(fixed3.at(0) == 5);
  CHECK(fixed3.at(1) == 7);
  CHECK(fixed3.at(2) == 3);
  CHECK(fixed3.at(3) == 1);
  CHECK(fixed3.at(4) == 0);
  CHECK(fixed3.total() == 16);

  const Histogram cycles3 = tabulate_m_cycles(pf3, 2);
  CHECK(cycles3.at(0) == 10);
  CHECK(cycles3.at(1) == 6);
  CHECK(cycles3.total() == 16);

  const Histogram prime3 = tabulate_fixed_points(brute_force_set(3, Variant::Prime));
  CHECK(prime3.at(0) == 1);
  CHECK(prime3.at(1) == 2);
  CHECK(prime3.at(2) == 1);
}

TEST_CASE("naive subset counter agrees with the walk-based census, exhaustive n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_tuple(n, n, [&](const std::vector<int>& values) {
      const PrefSeq seq = PrefSeq::unchecked(values);
      const CycleCensus census = cycle_census(seq);
      for (int m = 1; m <= n; ++m) {
        CHECK(count_m_cycles_naive(seq, m) == census.at(m));
      }
    });
  }
  CHECK_THROWS_AS(count_m_cycles_naive(PrefSeq({3, 1}), 1), std::domain_error);
  CHECK_THROWS_AS(count_m_cycles_naive(PrefSeq({1}), 0), std::domain_error);
}

TEST_CASE("enumerators match brute force as sorted multisets, n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<PrefSeq> enumerated;
    enumerate_classical(n, [&](const PrefSeq& s) { enumerated.push_back(s); });
    std::sort(enumerated.begin(), enumerated.end());
    CHECK(enumerated == brute_force_set(n, Variant::Classical));
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<PrefSeq> enumerated;
    enumerate_prime(n, [&](const PrefSeq& s) { enumerated.push_back(s); });
    std::sort(enumerated.begin(), enumerated.end());
    CHECK(enumerated == brute_force_set(n, Variant::Prime));
  }
  for (const RkParams& params : {RkParams(1, 2), RkParams(2, 1), RkParams(2, 2)}) {
    for (int n = 1; n <= 5; ++n) {
      std::vector<PrefSeq> enumerated;
      enumerate_rk(n, params, [&](const PrefSeq& s) { enumerated.push_back(s); });
      std::sort(enumerated.begin(), enumerated.end());
      CHECK(enumerated == brute_force_set(n, Variant::Rk, params));
    }
  }
}

TEST_CASE("theorem id round trip") {
  for (TheoremId id : all_theorem_ids()) {
    const auto parsed = parse_theorem_id(to_string(id));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == id);
  }
  CHECK(to_string(TheoremId::ClassicalFixed) == "T2.1");
  CHECK(to_string(TheoremId::RkSortedPrefix) == "P4.1");
  CHECK(to_string(TheoremId::CosetPrime) == "coset-prime");
  CHECK_FALSE(parse_theorem_id("T9.9").has_value());
}

TEST_CASE("verify: classical fixed points all pass on n <= 6") {
  ParamGrid grid;
  grid.max_n = 6;
  const auto reports = verify(TheoremId::ClassicalFixed, grid);
  CHECK(reports.size() == 1 + 2 + 3 + 4 + 5 + 6 + 7);  // k = 0..n for each n = 0..6
  for (const auto& report : reports) {
    CHECK(report.pass);
    CHECK(report.theorem_id == "T2.1");
    CHECK(report.formula_value == report.oracle_value);
    CHECK_FALSE(report.known_issue);
  }
}

TEST_CASE("verify: prime fixed points flag the n=1 discrepancy") {
  ParamGrid grid;
  grid.max_n = 4;
  const auto reports = verify(TheoremId::PrimeFixed, grid);
  int flagged = 0;
  for (const auto& report : reports) {
    if (report.known_issue) {
      ++flagged;
      CHECK(report.params == std::vector<std::pair<std::string, long long>>{{"n", 1}, {"k", 0}});
      CHECK_FALSE(report.pass);
      CHECK(report.formula_value == "1");
      CHECK(report.oracle_value == "0");
    } else {
      CHECK(report.pass);
    }
  }
  CHECK(flagged == 1);
  CHECK(all_pass(reports));  // known issue excluded from the aggregate
}

TEST_CASE("verify: coset scans find zero violations") {
  ParamGrid grid;
  grid.max_n = 4;
  grid.max_n_rk = 3;
  for (TheoremId id : {TheoremId::CosetClassical, TheoremId::CosetPrime, TheoremId::CosetRk}) {
    for (const auto& report : verify(id, grid)) {
      CHECK(report.pass);
      CHECK(report.formula_value == "0");
      CHECK(report.oracle_value == "0");
    }
  }
}

TEST_CASE("verify_all small grid passes and all_pass flags real failures") {
  ParamGrid grid;
  grid.max_n = 3;
  grid.max_n_rk = 2;
  auto reports = verify_all(grid);
  CHECK(all_pass(reports));
  CHECK(reports.size() > 50);
  VerificationReport broken;
  broken.pass = false;
  broken.known_issue = false;
  reports.push_back(broken);
  CHECK_FALSE(all_pass(reports));
}
