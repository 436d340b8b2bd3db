#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardy/quadrature.hpp"

namespace hardy::cli {

enum class Command { constants, verify, sweep, semigroup, discrete_gs };
enum class Format { json, csv };

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_computation = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiscreteSource {
  std::uint64_t seed = 1;
  int count = 1000;
  int max_n = 50;
  /// JSON file with "K", "u" and "phi"; replaces the random instances when set.
  std::string file;
};

struct RunConfig {
  Command command = Command::constants;
  int dimension = 3;
  double alpha = 1.0;
  double s = 0.0;
  std::optional<double> beta;
  /// verify only: A-prime, B-prime, C-prime, fls, local-hardy or power-law.
  std::string identity;
  std::string profile = "gaussian:1";
  QuadratureSpec quadrature;
  std::vector<double> lambdas;
  std::vector<double> radii = {0.1, 1.0, 10.0};
  std::optional<double> tol;
  std::string output_path;
  /// csv for sweeps, json otherwise, unless set.
  std::optional<Format> format;
  DiscreteSource discrete;
  bool concurrent = true;
  /// Writes runtime_seconds as 0 so that identical configs give identical files.
  bool deterministic = false;

  /// Throws UsageError when a field is missing or outside its domain.
  void validate() const;
  Format output_format() const;
};

/// Flags override values from --config. Throws UsageError; returns nullopt after printing help.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Applies an INI file with sections [params] [profile] [quadrature] [sweep] [verify] [discrete] [output].
void apply_config_file(const std::string& path, RunConfig& config);

struct RunOutcome {
  bool pass = false;
  std::string summary;
  std::string document;
};

/// Runs a validated config. Computation errors propagate.
RunOutcome run(const RunConfig& config);

/// Full front end: parse, run, write the document to output_path (or to out when unset).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct DiscreteInstance {
  std::vector<std::vector<double>> K;
  std::vector<double> u;
  std::vector<double> phi;
};

/// Random symmetric nonnegative K of size 1..max_n with a random sparsity level and
/// occasional zero rows, positive u and arbitrary phi.
DiscreteInstance random_discrete_instance(std::mt19937_64& rng, int max_n);

}  // namespace hardy::cli
