#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hardy/constants.hpp"
#include "hardy/errors.hpp"
#include "hardy/identities.hpp"
#include "hardy/radial.hpp"
#include "hardy/report.hpp"
#include "hardy/sharpness.hpp"

namespace hardy::cli {
namespace {

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(fmt::format("{}: cannot parse '{}'", what, item));
    }
  }
  if (out.empty()) throw UsageError(fmt::format("{}: empty list", what));
  return out;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw UsageError(fmt::format("unknown format '{}'", text));
}

const char* command_name(Command c) {
  switch (c) {
    case Command::constants: return "constants";
    case Command::verify: return "verify";
    case Command::sweep: return "sweep";
    case Command::semigroup: return "semigroup";
    case Command::discrete_gs: return "discrete-gs";
  }
  return "?";
}

// Copies value into target only when the option was given on the command line.
template <class T>
void override_if(const CLI::Option* opt, const T& value, T& target) {
  if (opt != nullptr && opt->count() > 0) target = value;
}

template <class F>
void checked(F&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const UnsupportedError& e) {
    throw UsageError(e.what());
  }
}

// Missing keys give nullopt; present but unparsable values are usage errors.
template <class T>
std::optional<T> read_key(const boost::property_tree::ptree& tree, const char* key) {
  const auto child = tree.get_child_optional(key);
  if (!child) return std::nullopt;
  try {
    return child->get_value<T>();
  } catch (const boost::property_tree::ptree_bad_data&) {
    throw UsageError(fmt::format("config: cannot parse {} = '{}'", key, child->data()));
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary_line(const VerificationReport& r) {
  return fmt::format("{}: lhs = {:.12g}, rhs = {:.12g} + {:.12g}, residual {:.3g} (tol {:.3g}) {}\n",
                     r.identity_name, r.lhs, r.rhs_main, r.rhs_remainder, r.residual_rel, r.tolerance,
                     r.pass ? "PASS" : "FAIL");
}

RunOutcome report_outcome(const VerificationReport& r, double runtime) {
  return {r.pass, summary_line(r), report_to_json(r, runtime)};
}

RunOutcome run_constants(const RunConfig& c) {
  const InequalityParams params(c.dimension, c.alpha, c.s);
  const double value = sharp_constant(params);
  const double a = riesz_normalization(c.dimension, c.alpha);
  std::string summary = fmt::format("C = {:.10f}  ({}, C = {:.17g})\n", value, params.describe(), value);
  summary += fmt::format("A_alpha = {:.17g}\n", a);
  std::string doc = fmt::format(
      "{{\n  \"params\": {{\"N\": {}, \"alpha\": {}, \"s\": {}}},\n  \"sharp_constant\": {},\n"
      "  \"riesz_normalization\": {},\n",
      c.dimension, json_number(c.alpha), json_number(c.s), json_number(value), json_number(a));
  if (params.is_fractional()) {
    const double d = seminorm_normalization(c.dimension, c.s);
    summary += fmt::format("D_(N,s) = {:.17g}\n", d);
    doc += fmt::format("  \"seminorm_normalization\": {},\n", json_number(d));
  }
  doc += fmt::format("  \"artifact_version\": \"{}\"\n}}\n", artifact_version);
  return {true, summary, doc};
}

VerificationReport run_identity(const RunConfig& c) {
  const auto& q = c.quadrature;
  if (c.identity == "power-law") return verify_riesz_power_law(c.dimension, c.alpha, *c.beta, c.radii, q, c.tol);
  const RadialProfile phi = RadialProfile::parse(c.profile);
  if (c.identity == "A-prime") return verify_theorem_A_prime(phi, c.dimension, c.alpha, q, c.tol);
  if (c.identity == "B-prime") return verify_theorem_B_prime(phi, c.dimension, c.alpha, q, c.tol);
  if (c.identity == "C-prime")
    return verify_theorem_C_prime(phi, InequalityParams(c.dimension, c.alpha, c.s), q, c.tol);
  if (c.identity == "fls") return verify_fls_representation(phi, c.dimension, c.s, q, c.tol);
  if (c.identity == "local-hardy") return verify_local_hardy(phi, c.dimension, q, c.tol);
  throw UsageError(fmt::format("unknown identity '{}'", c.identity));
}

RunOutcome run_sweep(const RunConfig& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const InequalityParams params(c.dimension, c.alpha, c.s);
  const auto lambdas = c.lambdas.empty() ? default_lambdas() : c.lambdas;
  const SweepResult sweep = sharpness_sweep(params, lambdas, c.quadrature, c.concurrent);
  const double runtime = c.deterministic ? 0.0 : seconds_since(t0);

  std::string summary = fmt::format("sweep {}, C = {:.17g}\n", params.describe(), sweep.sharp_constant);
  summary += fmt::format("{:>10} {:>14} {:>12} {:>14} {:>14} {:>14}\n", "lambda", "quotient", "deficit",
                         "remainder_J", "remainder_R", "denominator");
  for (const auto& row : sweep.rows)
    summary += fmt::format("{:>10g} {:>14.9g} {:>12.6g} {:>14.9g} {:>14} {:>14.9g}\n", row.lambda, row.quotient,
                           row.deficit, row.remainder_J,
                           row.remainder_R ? fmt::format("{:.9g}", *row.remainder_R) : "-", row.denominator);
  for (const auto& check : sweep.checks)
    summary += fmt::format("  {:<24} {}  {}\n", check.name, check.pass ? "PASS" : "FAIL", check.detail);
  const std::string doc = c.output_format() == Format::csv ? sweep_to_csv(sweep) : sweep_to_json(sweep, runtime);
  return {sweep.all_pass(), summary, doc};
}

DiscreteInstance load_discrete_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot open '{}'", path));
  try {
    const auto j = nlohmann::json::parse(in);
    return {j.at("K").get<std::vector<std::vector<double>>>(), j.at("u").get<std::vector<double>>(),
            j.at("phi").get<std::vector<double>>()};
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(fmt::format("{}: {}", path, e.what()));
  }
}

RunOutcome run_discrete(const RunConfig& c) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!c.discrete.file.empty()) {
    const auto inst = load_discrete_instance(c.discrete.file);
    auto report = verify_discrete_groundstate(inst.K, inst.u, inst.phi, c.tol);
    report.profile = c.discrete.file;
    return report_outcome(report, c.deterministic ? 0.0 : seconds_since(t0));
  }
  std::mt19937_64 rng(c.discrete.seed);
  VerificationReport worst;
  int failures = 0;
  for (int i = 0; i < c.discrete.count; ++i) {
    const auto inst = random_discrete_instance(rng, c.discrete.max_n);
    auto report = verify_discrete_groundstate(inst.K, inst.u, inst.phi, c.tol);
    if (!report.pass) ++failures;
    if (i == 0 || report.residual_rel > worst.residual_rel) worst = report;
  }
  worst.profile = fmt::format("random:seed={},count={},max_n={}", c.discrete.seed, c.discrete.count, c.discrete.max_n);
  worst.pass = failures == 0;
  RunOutcome out = report_outcome(worst, c.deterministic ? 0.0 : seconds_since(t0));
  out.summary = fmt::format("{} instances, {} failed; worst ", c.discrete.count, failures) + out.summary;
  return out;
}

}  // namespace

Format RunConfig::output_format() const {
  if (format) return *format;
  return command == Command::sweep ? Format::csv : Format::json;
}

void RunConfig::validate() const {
  checked([&] {
    quadrature.validate();
    if (tol && !(*tol > 0.0)) throw UsageError("--tol must be positive");
    if (output_format() == Format::csv && command != Command::sweep)
      throw UsageError("csv output is only available for sweep");
    switch (command) {
      case Command::constants:
        InequalityParams(dimension, alpha, s);
        break;
      case Command::sweep: {
        InequalityParams(dimension, alpha, s);
        for (size_t i = 0; i < lambdas.size(); ++i) {
          if (!(lambdas[i] >= 1.0)) throw UsageError("lambdas must be >= 1");
          if (i > 0 && !(lambdas[i] > lambdas[i - 1])) throw UsageError("lambdas must be strictly increasing");
        }
        break;
      }
      case Command::verify: {
        if (identity.empty()) throw UsageError("verify needs --identity");
        if (identity == "power-law") {
          if (!beta) throw UsageError("power-law needs --beta");
          if (!(alpha > 0.0 && alpha < *beta && *beta < dimension))
            throw UsageError("power-law needs 0 < alpha < beta < N");
          break;
        }
        RadialProfile::parse(profile);
        if (identity == "A-prime") {
          InequalityParams(dimension, alpha, 0.0);
        } else if (identity == "B-prime") {
          InequalityParams(dimension, alpha, 2.0);
        } else if (identity == "C-prime") {
          const InequalityParams p(dimension, alpha, s);
          if (!p.is_fractional()) throw UsageError("C-prime needs 0 < s < 2");
        } else if (identity == "fls") {
          if (dimension < 1 || !(s > 0.0 && s < 2.0 && s < dimension)) throw UsageError("fls needs 0 < s < min(2, N)");
        } else if (identity == "local-hardy") {
          if (dimension < 3) throw UsageError("local-hardy needs N >= 3");
        } else {
          throw UsageError(fmt::format("unknown identity '{}'", identity));
        }
        break;
      }
      case Command::semigroup:
        if (!beta) throw UsageError("semigroup needs --beta");
        if (!(dimension >= 1 && alpha > 0.0 && *beta > 0.0 && alpha + *beta < dimension))
          throw UsageError("semigroup needs alpha, beta > 0 and alpha + beta < N");
        RadialProfile::parse(profile);
        for (double r : radii)
          if (!(r > 0.0)) throw UsageError("radii must be positive");
        break;
      case Command::discrete_gs:
        if (discrete.file.empty() && (discrete.count < 1 || discrete.max_n < 1))
          throw UsageError("discrete-gs needs count >= 1 and max-n >= 1");
        break;
    }
  });
}

void apply_config_file(const std::string& path, RunConfig& c) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw UsageError(fmt::format("config: {}", e.what()));
  }
  if (auto v = read_key<int>(tree, "params.N")) c.dimension = *v;
  if (auto v = read_key<double>(tree, "params.alpha")) c.alpha = *v;
  if (auto v = read_key<double>(tree, "params.s")) c.s = *v;
  if (auto v = read_key<double>(tree, "params.beta")) c.beta = *v;
  if (auto v = read_key<std::string>(tree, "profile.descriptor")) c.profile = *v;
  if (auto v = read_key<double>(tree, "quadrature.rel_tol")) c.quadrature.rel_tol = *v;
  if (auto v = read_key<double>(tree, "quadrature.abs_tol")) c.quadrature.abs_tol = *v;
  if (auto v = read_key<int>(tree, "quadrature.max_subdivisions")) c.quadrature.max_subdivisions = *v;
  if (auto v = read_key<double>(tree, "quadrature.band_width")) c.quadrature.diagonal_band_width = *v;
  if (auto v = read_key<std::string>(tree, "sweep.lambdas")) c.lambdas = parse_list(*v, "sweep.lambdas");
  if (auto v = read_key<std::string>(tree, "verify.identity")) c.identity = *v;
  if (auto v = read_key<double>(tree, "verify.tol")) c.tol = *v;
  if (auto v = read_key<std::string>(tree, "verify.radii")) c.radii = parse_list(*v, "verify.radii");
  if (auto v = read_key<std::uint64_t>(tree, "discrete.seed")) c.discrete.seed = *v;
  if (auto v = read_key<int>(tree, "discrete.count")) c.discrete.count = *v;
  if (auto v = read_key<int>(tree, "discrete.max_n")) c.discrete.max_n = *v;
  if (auto v = read_key<std::string>(tree, "discrete.file")) c.discrete.file = *v;
  if (auto v = read_key<std::string>(tree, "output.path")) c.output_path = *v;
  if (auto v = read_key<std::string>(tree, "output.format")) c.format = parse_format(*v);
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Sharp constants and groundstate identities for weighted Riesz potential inequalities",
               "hardy-verify"};
  app.require_subcommand(1);

  RunConfig flags;
  std::string lambdas_text, radii_text, format_text, config_path;
  double beta = 0.0, tol = 0.0;
  struct Handles {
    CLI::Option *N = nullptr, *alpha = nullptr, *s = nullptr, *beta = nullptr, *profile = nullptr, *lambdas = nullptr,
                *radii = nullptr, *output = nullptr, *format = nullptr, *rel_tol = nullptr, *abs_tol = nullptr,
                *max_sub = nullptr, *band = nullptr, *tol = nullptr, *identity = nullptr, *seed = nullptr,
                *count = nullptr, *max_n = nullptr, *file = nullptr;
  };
  std::map<CLI::App*, Handles> handles;

  auto common = [&](CLI::App* sub) {
    Handles h;
    h.N = sub->add_option("--N", flags.dimension, "Dimension N");
    h.alpha = sub->add_option("--alpha", flags.alpha, "Riesz order alpha");
    h.s = sub->add_option("--s", flags.s, "Smoothness s in [0, 2]");
    h.output = sub->add_option("--output", flags.output_path, "Report file (standard output when omitted)");
    h.format = sub->add_option("--format", format_text, "json or csv");
    h.rel_tol = sub->add_option("--rel-tol", flags.quadrature.rel_tol, "Quadrature relative tolerance");
    h.abs_tol = sub->add_option("--abs-tol", flags.quadrature.abs_tol, "Quadrature absolute tolerance");
    h.max_sub = sub->add_option("--max-subdivisions", flags.quadrature.max_subdivisions, "Subdivision budget");
    h.band = sub->add_option("--band-width", flags.quadrature.diagonal_band_width, "Relative diagonal band width");
    h.tol = sub->add_option("--tol", tol, "Residual tolerance (default from the error budget)");
    sub->add_option("--config", config_path, "INI config file; flags override its values");
    sub->add_flag("--deterministic", flags.deterministic, "Write runtime_seconds as 0");
    return h;
  };

  auto* constants = app.add_subcommand("constants", "Print sharp constants");
  handles[constants] = common(constants);

  auto* verify = app.add_subcommand("verify", "Verify one identity");
  auto hv = common(verify);
  hv.identity = verify->add_option("--identity", flags.identity, "A-prime, B-prime, C-prime, fls, local-hardy, power-law");
  hv.profile = verify->add_option("--profile", flags.profile, "Profile descriptor, e.g. gaussian:1");
  hv.beta = verify->add_option("--beta", beta, "Power-law exponent");
  hv.radii = verify->add_option("--radii", radii_text, "Comma-separated radii");
  handles[verify] = hv;

  auto* sweep = app.add_subcommand("sweep", "Rayleigh quotients along the extremizing family");
  auto hs = common(sweep);
  hs.lambdas = sweep->add_option("--lambdas", lambdas_text, "Comma-separated increasing lambdas >= 1");
  sweep->add_flag("!--serial", flags.concurrent, "Compute rows one after another");
  handles[sweep] = hs;

  auto* semigroup = app.add_subcommand("semigroup", "Check I_alpha I_beta f = I_(alpha+beta) f");
  auto hg = common(semigroup);
  hg.profile = semigroup->add_option("--profile", flags.profile, "Profile descriptor");
  hg.beta = semigroup->add_option("--beta", beta, "Second order beta");
  hg.radii = semigroup->add_option("--radii", radii_text, "Comma-separated radii");
  handles[semigroup] = hg;

  auto* discrete = app.add_subcommand("discrete-gs", "Finite-dimensional groundstate identity");
  auto hd = common(discrete);
  hd.seed = discrete->add_option("--seed", flags.discrete.seed, "Random seed");
  hd.count = discrete->add_option("--count", flags.discrete.count, "Number of random instances");
  hd.max_n = discrete->add_option("--max-n", flags.discrete.max_n, "Largest matrix size");
  hd.file = discrete->add_option("--input", flags.discrete.file, "JSON file with K, u, phi");
  handles[discrete] = hd;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  const Handles& h = handles.at(chosen);
  RunConfig c;
  if (chosen == constants) c.command = Command::constants;
  if (chosen == verify) c.command = Command::verify;
  if (chosen == sweep) c.command = Command::sweep;
  if (chosen == semigroup) c.command = Command::semigroup;
  if (chosen == discrete) c.command = Command::discrete_gs;
  if (!config_path.empty()) apply_config_file(config_path, c);

  override_if(h.N, flags.dimension, c.dimension);
  override_if(h.alpha, flags.alpha, c.alpha);
  override_if(h.s, flags.s, c.s);
  if (h.beta && h.beta->count() > 0) c.beta = beta;
  override_if(h.profile, flags.profile, c.profile);
  if (h.lambdas && h.lambdas->count() > 0) c.lambdas = parse_list(lambdas_text, "--lambdas");
  if (h.radii && h.radii->count() > 0) c.radii = parse_list(radii_text, "--radii");
  override_if(h.output, flags.output_path, c.output_path);
  if (h.format->count() > 0) c.format = parse_format(format_text);
  override_if(h.rel_tol, flags.quadrature.rel_tol, c.quadrature.rel_tol);
  override_if(h.abs_tol, flags.quadrature.abs_tol, c.quadrature.abs_tol);
  override_if(h.max_sub, flags.quadrature.max_subdivisions, c.quadrature.max_subdivisions);
  override_if(h.band, flags.quadrature.diagonal_band_width, c.quadrature.diagonal_band_width);
  if (h.tol->count() > 0) c.tol = tol;
  override_if(h.identity, flags.identity, c.identity);
  override_if(h.seed, flags.discrete.seed, c.discrete.seed);
  override_if(h.count, flags.discrete.count, c.discrete.count);
  override_if(h.max_n, flags.discrete.max_n, c.discrete.max_n);
  override_if(h.file, flags.discrete.file, c.discrete.file);
  c.deterministic = flags.deterministic;
  c.concurrent = flags.concurrent;

  c.validate();
  return c;
}

RunOutcome run(const RunConfig& c) {
  const auto t0 = std::chrono::steady_clock::now();
  switch (c.command) {
    case Command::constants:
      return run_constants(c);
    case Command::verify: {
      const auto report = run_identity(c);
      return report_outcome(report, c.deterministic ? 0.0 : seconds_since(t0));
    }
    case Command::sweep:
      return run_sweep(c);
    case Command::semigroup: {
      const auto report = verify_semigroup(c.dimension, c.alpha, *c.beta, RadialProfile::parse(c.profile), c.radii,
                                           c.quadrature, c.tol);
      return report_outcome(report, c.deterministic ? 0.0 : seconds_since(t0));
    }
    case Command::discrete_gs:
      return run_discrete(c);
  }
  throw UsageError("unknown command");
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
    if (!config) return exit_pass;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for options\n";
    return exit_usage;
  }

  RunOutcome outcome;
  try {
    outcome = run(*config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "computation error in " << command_name(config->command)
        << (config->command == Command::verify ? " " + config->identity : std::string()) << ": " << e.what()
        << '\n';
    return exit_computation;
  }

  out << outcome.summary;
  if (config->output_path.empty()) {
    out << outcome.document;
  } else {
    std::ofstream file(config->output_path, std::ios::binary);
    file << outcome.document;
    if (!file) {
      err << "cannot write " << config->output_path << '\n';
      return exit_computation;
    }
  }
  return outcome.pass ? exit_pass : exit_fail;
}

DiscreteInstance random_discrete_instance(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> size(1, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = size(rng);
  const double density = unit(rng);
  const double zero_row_rate = unit(rng) < 0.3 ? 0.2 : 0.0;

  DiscreteInstance inst;
  inst.K.assign(n, std::vector<double>(n, 0.0));
  std::vector<bool> zero_row(n);
  for (int i = 0; i < n; ++i) zero_row[i] = unit(rng) < zero_row_rate;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (zero_row[i] || zero_row[j] || unit(rng) >= density) continue;
      const double v = std::exp(6.0 * unit(rng) - 3.0);
      inst.K[i][j] = v;
      inst.K[j][i] = v;
    }
  }
  inst.u.resize(n);
  inst.phi.resize(n);
  for (int i = 0; i < n; ++i) {
    inst.u[i] = std::exp(4.0 * unit(rng) - 2.0);
    inst.phi[i] = 4.0 * unit(rng) - 2.0;
  }
  return inst;
}

}  // namespace hardy::cli
