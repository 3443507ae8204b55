#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/colouring.hpp"
#include "oddcycle/errors.hpp"

namespace oddcycle {

// Minimum monochromatic odd cycle length, or n+1 when every class is
// bipartite.
std::size_t colouring_objective(const EdgeColouring& c);

inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

class InfeasibleEnumeration : public InputError {
 public:
  InfeasibleEnumeration(const std::string& what, long double needed) : InputError(what), needed(needed) {}
  long double needed;  // colourings the enumeration would visit
};

struct ExhaustiveResult {
  // Max over colourings of the shortest monochromatic odd cycle; nullopt
  // when some colouring has none (then the witness is such a colouring).
  std::optional<std::size_t> value;
  EdgeColouring witness;
  std::uint64_t enumerated = 0;
};

// Enumerates all q-colourings of K_n with edge {0,1} fixed to colour 0.
ExhaustiveResult exhaustive_L(std::size_t q, std::size_t n);

struct AnnealResult {
  std::size_t objective = 0;  // best colouring_objective seen
  EdgeColouring colouring;
  std::size_t best_iteration = 0;
  std::size_t accepted = 0;
};

// Simulated annealing over single-edge recolourings, maximizing the
// objective (ties broken towards fewer vertices on a shortest odd walk).
// Starts from the binary colouring on the first n vertices when n <= 2^q,
// otherwise from random_colouring(n, q, seed).
AnnealResult anneal_search(std::size_t q, std::size_t n, std::size_t iterations, std::uint64_t seed);

// ---------------------------------------------------------------------------

struct ExperimentConfig {
  std::vector<std::string> generators{"random"};
  std::vector<std::size_t> qs;
  std::string n_rule = "2^q+1";
  std::vector<std::uint64_t> seeds{0};
  std::vector<std::string> methods{"pipeline"};
  double eps = 0.5;
  double C = 4.0;
  std::string delta = "1";
  std::string k_rule = "8*q^3";
  std::string small_rule = "4*q^10";
  std::string fallback = "oracle";
  std::size_t threads = 1;
  bool record_time = false;

  // JSON object; unknown keys are rejected.
  static ExperimentConfig parse(const std::string& json_text);
};

struct ExperimentRow {
  std::string generator;
  std::size_t q = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string method;
  std::optional<std::size_t> cycle_length;
  std::optional<std::size_t> bound_claimed;
  std::string branch;
  std::optional<double> wall_time_ms;
  std::string error;
};

std::vector<ExperimentRow> run_experiments(const ExperimentConfig& config);
std::string to_csv(const std::vector<ExperimentRow>& rows);
std::string experiment_table(const ExperimentConfig& config);

}  // namespace oddcycle
