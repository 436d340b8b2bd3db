#include "hardy/report.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>
#include <json.hpp>

#include "hardy/errors.hpp"

namespace hardy {
namespace {

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

double number_field(const nlohmann::json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return v.get<double>();
}

}  // namespace

std::string json_number(double x) {
  if (!std::isfinite(x)) return "null";
  return fmt::format("{:.17g}", x);
}

std::string report_to_json(const VerificationReport& r, double runtime_seconds) {
  std::string params = fmt::format("{{\"N\": {}, \"alpha\": {}, \"s\": {}", r.params.dimension,
                                   json_number(r.params.alpha), json_number(r.params.s));
  if (r.params.beta) params += fmt::format(", \"beta\": {}", json_number(*r.params.beta));
  params += "}";

  std::string out = "{\n";
  out += fmt::format("  \"identity_name\": {},\n", json_string(r.identity_name));
  out += fmt::format("  \"params\": {},\n", params);
  out += fmt::format("  \"profile\": {},\n", json_string(r.profile));
  out += fmt::format("  \"lhs\": {},\n", json_number(r.lhs));
  out += fmt::format("  \"rhs_main\": {},\n", json_number(r.rhs_main));
  out += fmt::format("  \"rhs_remainder\": {},\n", json_number(r.rhs_remainder));
  out += fmt::format("  \"residual_rel\": {},\n", json_number(r.residual_rel));
  out += fmt::format("  \"tolerance\": {},\n", json_number(r.tolerance));
  out += fmt::format("  \"pass\": {},\n", r.pass ? "true" : "false");
  out += fmt::format("  \"err_budget\": {},\n", json_number(r.err_budget));
  if (r.worst_radius) out += fmt::format("  \"worst_radius\": {},\n", json_number(*r.worst_radius));
  out += fmt::format("  \"runtime_seconds\": {},\n", json_number(runtime_seconds));
  out += fmt::format("  \"artifact_version\": {}\n", json_string(artifact_version));
  out += "}\n";
  return out;
}

ReportRecord report_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ReportRecord rec;
    auto& r = rec.report;
    r.identity_name = j.at("identity_name").get<std::string>();
    const auto& p = j.at("params");
    r.params.dimension = p.at("N").get<int>();
    r.params.alpha = number_field(p, "alpha");
    r.params.s = number_field(p, "s");
    if (p.contains("beta")) r.params.beta = number_field(p, "beta");
    r.profile = j.at("profile").get<std::string>();
    r.lhs = number_field(j, "lhs");
    r.rhs_main = number_field(j, "rhs_main");
    r.rhs_remainder = number_field(j, "rhs_remainder");
    r.residual_rel = number_field(j, "residual_rel");
    r.tolerance = number_field(j, "tolerance");
    r.pass = j.at("pass").get<bool>();
    r.err_budget = number_field(j, "err_budget");
    if (j.contains("worst_radius")) r.worst_radius = number_field(j, "worst_radius");
    rec.runtime_seconds = number_field(j, "runtime_seconds");
    rec.artifact_version = j.at("artifact_version").get<std::string>();
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(fmt::format("malformed report: {}", e.what()));
  }
}

std::string sweep_to_csv(const SweepResult& sweep) {
  std::string out = "lambda,quotient,deficit,remainder_J,remainder_R,denominator\n";
  for (const auto& row : sweep.rows) {
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{},{:.17g}\n", row.lambda, row.quotient, row.deficit,
                       row.remainder_J, row.remainder_R ? fmt::format("{:.17g}", *row.remainder_R) : "",
                       row.denominator);
  }
  return out;
}

std::string sweep_to_json(const SweepResult& sweep, double runtime_seconds) {
  const auto& p = sweep.params;
  std::string out = "{\n";
  out += fmt::format("  \"params\": {{\"N\": {}, \"alpha\": {}, \"s\": {}}},\n", p.dimension(),
                     json_number(p.alpha()), json_number(p.s()));
  out += fmt::format("  \"sharp_constant\": {},\n", json_number(sweep.sharp_constant));
  out += "  \"rows\": [";
  for (size_t i = 0; i < sweep.rows.size(); ++i) {
    const auto& row = sweep.rows[i];
    out += fmt::format(
        "{}\n    {{\"lambda\": {}, \"quotient\": {}, \"deficit\": {}, \"remainder_J\": {}, \"remainder_R\": {}, "
        "\"denominator\": {}, \"closure_residual\": {}}}",
        i ? "," : "", json_number(row.lambda), json_number(row.quotient), json_number(row.deficit),
        json_number(row.remainder_J), row.remainder_R ? json_number(*row.remainder_R) : "null",
        json_number(row.denominator), json_number(row.closure_residual));
  }
  out += "\n  ],\n  \"checks\": [";
  for (size_t i = 0; i < sweep.checks.size(); ++i) {
    const auto& c = sweep.checks[i];
    out += fmt::format("{}\n    {{\"name\": {}, \"pass\": {}, \"detail\": {}}}", i ? "," : "", json_string(c.name),
                       c.pass ? "true" : "false", json_string(c.detail));
  }
  out += "\n  ],\n";
  out += fmt::format("  \"pass\": {},\n", sweep.all_pass() ? "true" : "false");
  out += fmt::format("  \"runtime_seconds\": {},\n", json_number(runtime_seconds));
  out += fmt::format("  \"artifact_version\": {}\n}}\n", json_string(artifact_version));
  return out;
}

}  // namespace hardy
