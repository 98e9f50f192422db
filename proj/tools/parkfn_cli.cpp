// parkfn: closed-form counts, enumeration, sampling, and verification for
// classical, prime, and (r,k)-parking functions.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parkfn/counting.hpp"
#include "parkfn/cycles.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/montecarlo.hpp"
#include "parkfn/oracle.hpp"
#include "parkfn/pollak.hpp"
#include "parkfn/prefseq.hpp"
#include "parkfn/rng.hpp"

namespace {

using nlohmann::ordered_json;

enum class Format { Jsonl, Csv, Plain };

Format parse_format(const std::string& text) {
  if (text == "jsonl") return Format::Jsonl;
  if (text == "csv") return Format::Csv;
  return Format::Plain;
}

std::string flatten_object(const ordered_json& obj);

std::string scalar_text(const ordered_json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_object()) return flatten_object(value);
  return value.dump();
}

std::string flatten_object(const ordered_json& obj) {
  std::string text;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!text.empty()) text += ';';
    text += it.key() + '=' + scalar_text(it.value());
  }
  return text;
}

class Writer {
 public:
  explicit Writer(Format format) : format_(format) {}

  void row(const ordered_json& obj) {
    switch (format_) {
      case Format::Jsonl:
        std::cout << obj.dump() << '\n';
        return;
      case Format::Csv: {
        if (!header_done_) {
          header_done_ = true;
          std::string header;
          for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (!header.empty()) header += ',';
            header += it.key();
          }
          std::cout << header << '\n';
        }
        std::string line;
        for (auto it = obj.begin(); it != obj.end(); ++it) {
          if (!line.empty()) line += ',';
          line += scalar_text(it.value());
        }
        std::cout << line << '\n';
        return;
      }
      case Format::Plain: {
        std::string line;
        for (auto it = obj.begin(); it != obj.end(); ++it) {
          if (!line.empty()) line += ' ';
          line += it.key() + '=' + scalar_text(it.value());
        }
        std::cout << line << '\n';
        return;
      }
    }
  }

  void sequence(const parkfn::PrefSeq& seq) {
    if (format_ == Format::Csv && !header_done_) {
      header_done_ = true;
      std::string header;
      for (int i = 1; i <= seq.size(); ++i) {
        if (!header.empty()) header += ',';
        header += 'v' + std::to_string(i);
      }
      std::cout << header << '\n';
    }
    const char sep = format_ == Format::Plain ? ' ' : ',';
    std::string line;
    for (int v : seq.values()) {
      if (!line.empty()) line += sep;
      line += std::to_string(v);
    }
    if (format_ == Format::Jsonl) {
      std::cout << '[' << line << "]\n";
    } else {
      std::cout << line << '\n';
    }
  }

 private:
  Format format_;
  bool header_done_ = false;
};

std::string decimal_text(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", value);
  return buffer;
}

// Accepts a JSON array like [3,1,1] or a comma/space separated row. Returns
// false for rows without numbers (e.g. a CSV header).
bool parse_sequence_line(const std::string& line, std::vector<int>& values) {
  values.clear();
  const auto start = line.find_first_not_of(" \t\r");
  if (start == std::string::npos) return false;
  if (line[start] == '[') {
    const ordered_json parsed = ordered_json::parse(line);
    for (const auto& v : parsed) values.push_back(v.get<int>());
    return true;
  }
  std::string token;
  std::istringstream in(line);
  while (std::getline(in, token, ',')) {
    std::istringstream fields(token);
    std::string field;
    while (fields >> field) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(field, &used);
      } catch (const std::exception&) {
        return false;
      }
      if (used != field.size()) return false;
      values.push_back(value);
    }
  }
  return true;
}

struct Config {
  std::string variant = "classical";
  int n = 0;
  int k = 0;
  int m = 1;
  int s = 0;
  int r = 1;
  int rk_k = 1;
  std::uint64_t samples = 1;
  std::uint64_t estimate_samples = 100'000;
  std::uint64_t seed = 0;
  std::string format = "jsonl";
  std::uint64_t budget = 100'000'000;
  int threads = 1;
  int max_n = 5;
  std::string theorem;
  std::string input;
};

// --r/--rk-k must be given exactly when the variant is rk
parkfn::RkParams require_rk(const Config& cfg, const CLI::Option* r_opt,
                            const CLI::Option* rk_k_opt) {
  if (r_opt->count() == 0 || rk_k_opt->count() == 0) {
    throw std::domain_error("the rk variant requires --r and --rk-k");
  }
  return parkfn::RkParams(cfg.r, cfg.rk_k);
}

void reject_rk_flags(const CLI::Option* r_opt, const CLI::Option* rk_k_opt) {
  if (r_opt->count() > 0 || rk_k_opt->count() > 0) {
    throw std::domain_error("--r and --rk-k apply only to the rk variant");
  }
}

int run(int argc, char** argv) {
  Config cfg;
  std::function<int(Writer&)> action;

  CLI::App app{"exact combinatorics of classical, prime, and (r,k)-parking functions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"jsonl", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker cap; never changes output")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "max candidates for exhaustive work")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // ---- count ----
  auto* count = app.add_subcommand("count", "closed-form counts");
  count->require_subcommand(1);
  count->fallthrough();

  auto* count_fixed =
      count->add_subcommand("fixed", "sequences with exactly k fixed points");
  count_fixed->fallthrough();
  count_fixed->add_option("--variant", cfg.variant, "classical or prime")
      ->check(CLI::IsMember({"classical", "prime"}))
      ->required();
  count_fixed->add_option("--n", cfg.n, "sequence length")->required();
  count_fixed->add_option("--k", cfg.k, "number of fixed points")->required();
  count_fixed->callback([&] {
    action = [&](Writer& out) {
      const bool prime = cfg.variant == "prime";
      const parkfn::Count value = prime ? parkfn::count_fixed_prime(cfg.n, cfg.k)
                                        : parkfn::count_fixed_classical(cfg.n, cfg.k);
      out.row({{"theorem", prime ? "T3.1" : "T2.1"},
               {"n", cfg.n},
               {"k", cfg.k},
               {"count", value.str()}});
      return 0;
    };
  });

  auto* count_cycles =
      count->add_subcommand("cycles", "sequences with exactly k m-cycles");
  count_cycles->fallthrough();
  count_cycles->add_option("--variant", cfg.variant, "classical or prime")
      ->check(CLI::IsMember({"classical", "prime"}))
      ->required();
  count_cycles->add_option("--n", cfg.n, "sequence length")->required();
  count_cycles->add_option("--m", cfg.m, "cycle length")->required();
  count_cycles->add_option("--k", cfg.k, "number of m-cycles")->required();
  count_cycles->callback([&] {
    action = [&](Writer& out) {
      const bool prime = cfg.variant == "prime";
      const parkfn::Count value = prime
                                      ? parkfn::count_cycles_prime(cfg.n, cfg.m, cfg.k)
                                      : parkfn::count_cycles_classical(cfg.n, cfg.m, cfg.k);
      out.row({{"theorem", prime ? "T3.2" : "T2.2"},
               {"n", cfg.n},
               {"m", cfg.m},
               {"k", cfg.k},
               {"count", value.str()}});
      return 0;
    };
  });

  auto* count_prefix = count->add_subcommand(
      "sorted-prefix", "sequences whose first s coordinates strictly increase");
  count_prefix->fallthrough();
  count_prefix->add_option("--variant", cfg.variant, "classical or rk")
      ->check(CLI::IsMember({"classical", "rk"}))
      ->required();
  count_prefix->add_option("--n", cfg.n, "sequence length")->required();
  count_prefix->add_option("--s", cfg.s, "prefix length")->required();
  auto* prefix_r = count_prefix->add_option("--r", cfg.r, "rk step");
  auto* prefix_rk_k = count_prefix->add_option("--rk-k", cfg.rk_k, "rk offset");
  count_prefix->callback([&] {
    action = [&](Writer& out) {
      if (cfg.variant == "rk") {
        const parkfn::RkParams params = require_rk(cfg, prefix_r, prefix_rk_k);
        out.row({{"theorem", "P4.1"},
                 {"n", cfg.n},
                 {"r", params.step},
                 {"k", params.offset},
                 {"s", cfg.s},
                 {"count", parkfn::count_sorted_prefix_rk(cfg.n, params, cfg.s).str()}});
      } else {
        reject_rk_flags(prefix_r, prefix_rk_k);
        out.row({{"n", cfg.n},
                 {"s", cfg.s},
                 {"count", parkfn::count_sorted_prefix_classical(cfg.n, cfg.s).str()}});
      }
      return 0;
    };
  });

  auto* count_total = count->add_subcommand("total", "all sequences of the variant");
  count_total->fallthrough();
  count_total->add_option("--variant", cfg.variant, "classical, prime, or rk")
      ->check(CLI::IsMember({"classical", "prime", "rk"}))
      ->required();
  count_total->add_option("--n", cfg.n, "sequence length")->required();
  auto* total_r = count_total->add_option("--r", cfg.r, "rk step");
  auto* total_rk_k = count_total->add_option("--rk-k", cfg.rk_k, "rk offset");
  count_total->callback([&] {
    action = [&](Writer& out) {
      if (cfg.variant == "rk") {
        const parkfn::RkParams params = require_rk(cfg, total_r, total_rk_k);
        out.row({{"variant", cfg.variant},
                 {"n", cfg.n},
                 {"r", params.step},
                 {"k", params.offset},
                 {"count", parkfn::count_rk_parking_functions(cfg.n, params).str()}});
      } else {
        reject_rk_flags(total_r, total_rk_k);
        const parkfn::Count value = cfg.variant == "prime"
                                        ? parkfn::count_prime_parking_functions(cfg.n)
                                        : parkfn::count_parking_functions(cfg.n);
        out.row({{"variant", cfg.variant}, {"n", cfg.n}, {"count", value.str()}});
      }
      return 0;
    };
  });

  // ---- expect ----
  auto* expect = app.add_subcommand("expect", "expected number of m-cycles");
  expect->fallthrough();
  expect->add_option("--variant", cfg.variant, "classical or prime")
      ->check(CLI::IsMember({"classical", "prime"}))
      ->required();
  expect->add_option("--n", cfg.n, "sequence length")->required();
  expect->add_option("--m", cfg.m, "cycle length")->required();
  expect->callback([&] {
    action = [&](Writer& out) {
      const parkfn::Rational value = cfg.variant == "prime"
                                         ? parkfn::expected_cycles_prime(cfg.n, cfg.m)
                                         : parkfn::expected_cycles_classical(cfg.n, cfg.m);
      out.row({{"exact", parkfn::to_fraction_string(value)},
               {"decimal", parkfn::to_decimal_string(value)}});
      return 0;
    };
  });

  // ---- enumerate ----
  auto* enumerate = app.add_subcommand("enumerate", "every sequence of the variant, once");
  enumerate->fallthrough();
  enumerate->add_option("--variant", cfg.variant, "classical, prime, or rk")
      ->check(CLI::IsMember({"classical", "prime", "rk"}))
      ->required();
  enumerate->add_option("--n", cfg.n, "sequence length")->required();
  auto* enum_r = enumerate->add_option("--r", cfg.r, "rk step");
  auto* enum_rk_k = enumerate->add_option("--rk-k", cfg.rk_k, "rk offset");
  enumerate->callback([&] {
    action = [&](Writer& out) {
      const parkfn::EnumOptions options{cfg.budget, cfg.threads};
      const parkfn::SeqSink sink = [&out](const parkfn::PrefSeq& seq) { out.sequence(seq); };
      if (cfg.variant == "rk") {
        parkfn::enumerate_rk(cfg.n, require_rk(cfg, enum_r, enum_rk_k), sink, options);
      } else if (cfg.variant == "prime") {
        reject_rk_flags(enum_r, enum_rk_k);
        parkfn::enumerate_prime(cfg.n, sink, options);
      } else {
        reject_rk_flags(enum_r, enum_rk_k);
        parkfn::enumerate_classical(cfg.n, sink, options);
      }
      return 0;
    };
  });

  // ---- sample ----
  auto* sample = app.add_subcommand("sample", "seeded uniform samples");
  sample->fallthrough();
  sample->add_option("--variant", cfg.variant, "classical, prime, or rk")
      ->check(CLI::IsMember({"classical", "prime", "rk"}))
      ->required();
  sample->add_option("--n", cfg.n, "sequence length")->required();
  sample->add_option("--samples", cfg.samples, "number of draws")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  auto* sample_r = sample->add_option("--r", cfg.r, "rk step");
  auto* sample_rk_k = sample->add_option("--rk-k", cfg.rk_k, "rk offset");
  sample->callback([&] {
    action = [&](Writer& out) {
      parkfn::Rng rng(cfg.seed);
      if (cfg.variant == "rk") {
        const parkfn::RkParams params = require_rk(cfg, sample_r, sample_rk_k);
        for (std::uint64_t i = 0; i < cfg.samples; ++i) {
          out.sequence(parkfn::sample_rk(cfg.n, params, rng));
        }
      } else if (cfg.variant == "prime") {
        reject_rk_flags(sample_r, sample_rk_k);
        for (std::uint64_t i = 0; i < cfg.samples; ++i) {
          out.sequence(parkfn::sample_prime(cfg.n, rng));
        }
      } else {
        reject_rk_flags(sample_r, sample_rk_k);
        for (std::uint64_t i = 0; i < cfg.samples; ++i) {
          out.sequence(parkfn::sample_classical(cfg.n, rng));
        }
      }
      return 0;
    };
  });

  // ---- stats ----
  auto* stats = app.add_subcommand("stats", "statistics of sequences");
  stats->require_subcommand(1);
  stats->fallthrough();

  auto* census = stats->add_subcommand(
      "census", "cycle census per input sequence (stdin or --input)");
  census->fallthrough();
  census->add_option("--input", cfg.input, "file of sequences; default stdin");
  census->callback([&] {
    action = [&](Writer& out) {
      std::ifstream file;
      if (!cfg.input.empty()) {
        file.open(cfg.input);
        if (!file) throw std::domain_error("cannot open " + cfg.input);
      }
      std::istream& in = cfg.input.empty() ? std::cin : file;
      std::string line;
      std::vector<int> values;
      while (std::getline(in, line)) {
        if (!parse_sequence_line(line, values)) continue;  // header or blank
        const parkfn::CycleCensus census_result =
            parkfn::cycle_census(parkfn::PrefSeq(values));
        ordered_json obj = ordered_json::object();
        for (const auto& [length, cycles] : census_result.counts) {
          obj[std::to_string(length)] = cycles;
        }
        out.row(obj);
      }
      return 0;
    };
  });

  auto* estimate = stats->add_subcommand("estimate", "Monte Carlo expected m-cycles");
  estimate->fallthrough();
  estimate->add_option("--variant", cfg.variant, "classical or prime")
      ->check(CLI::IsMember({"classical", "prime"}))
      ->required();
  estimate->add_option("--n", cfg.n, "sequence length")->required();
  estimate->add_option("--m", cfg.m, "cycle length")->required();
  estimate->add_option("--samples", cfg.estimate_samples, "number of draws")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  estimate->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  estimate->callback([&] {
    action = [&](Writer& out) {
      const parkfn::Variant variant =
          cfg.variant == "prime" ? parkfn::Variant::Prime : parkfn::Variant::Classical;
      const parkfn::Estimate result = parkfn::estimate_expected_cycles(
          cfg.n, cfg.m, variant, cfg.estimate_samples, cfg.seed, {cfg.threads});
      out.row({{"mean", decimal_text(result.mean)},
               {"std_error", decimal_text(result.std_error)},
               {"samples", result.samples},
               {"seed", result.seed},
               {"exact_value", parkfn::to_fraction_string(result.exact_value)}});
      return 0;
    };
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "formula vs. brute-force oracle");
  verify->fallthrough();
  verify->add_option("--theorem", cfg.theorem,
                     "single check (T2.1 T2.2 T2.3 T3.1 T3.2 T3.3 P4.1 "
                     "coset-classical coset-prime coset-rk); default all");
  verify->add_option("--max-n", cfg.max_n, "largest n checked (rk capped at 4)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->callback([&] {
    action = [&](Writer& out) {
      parkfn::ParamGrid grid;
      grid.max_n = cfg.max_n;
      grid.max_n_rk = std::min(cfg.max_n, grid.max_n_rk);
      grid.budget = cfg.budget;
      grid.threads = cfg.threads;
      std::vector<parkfn::VerificationReport> reports;
      if (cfg.theorem.empty()) {
        reports = parkfn::verify_all(grid);
      } else {
        const auto id = parkfn::parse_theorem_id(cfg.theorem);
        if (!id) throw std::domain_error("unknown theorem id: " + cfg.theorem);
        reports = parkfn::verify(*id, grid);
      }
      for (const parkfn::VerificationReport& report : reports) {
        ordered_json params = ordered_json::object();
        for (const auto& [key, value] : report.params) params[key] = value;
        out.row({{"theorem_id", report.theorem_id},
                 {"params", params},
                 {"formula_value", report.formula_value},
                 {"oracle_value", report.oracle_value},
                 {"pass", report.pass},
                 {"known_issue", report.known_issue}});
      }
      return parkfn::all_pass(reports) ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Writer writer(parse_format(cfg.format));
  return action(writer);
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  try {
    return run(argc, argv);
  } catch (const parkfn::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
