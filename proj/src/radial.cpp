#include "hardy/radial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "hardy/errors.hpp"

namespace hardy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive_radius(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw DomainError(fmt::format("{}: radius must be finite and positive, got {}", what, r));
}

// Smooth factor of a truncated power: eta(x / lambda) * eta(1 / (lambda x)).
double window(double x, double lambda) {
  return Cutoff::value(x / lambda) * Cutoff::value(1.0 / (lambda * x));
}

double window_derivative(double x, double lambda) {
  const double outer = x / lambda;
  const double inner = 1.0 / (lambda * x);
  return Cutoff::derivative(outer) / lambda * Cutoff::value(inner) -
         Cutoff::value(outer) * Cutoff::derivative(inner) * inner / x;
}

// window(x1) - window(x2), dx = x2 - x1.
double window_difference(double x1, double x2, double dx, double lambda) {
  const double a1 = Cutoff::value(x1 / lambda);
  const double b2 = Cutoff::value(1.0 / (lambda * x2));
  const double da = Cutoff::difference(x1 / lambda, x2 / lambda, -dx / lambda);
  const double db = Cutoff::difference(1.0 / (lambda * x1), 1.0 / (lambda * x2), dx / (lambda * x1 * x2));
  return a1 * db + da * b2;
}

double parse_number(std::string_view text, std::string_view descriptor) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw DomainError(fmt::format("profile '{}': cannot parse number '{}'", descriptor, text));
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

double Cutoff::value(double t) noexcept {
  if (t <= 1.0) return 1.0;
  if (t >= 2.0) return 0.0;
  const double u = t - 1.0;
  return 1.0 - u * u * (3.0 - 2.0 * u);
}

double Cutoff::derivative(double t) noexcept {
  if (t <= 1.0 || t >= 2.0) return 0.0;
  const double u = t - 1.0;
  return -6.0 * u * (1.0 - u);
}

double Cutoff::difference(double t1, double t2, double dt) noexcept {
  const bool inside1 = t1 > 1.0 && t1 < 2.0;
  const bool inside2 = t2 > 1.0 && t2 < 2.0;
  if (inside1 && inside2) {
    const double u1 = t1 - 1.0;
    const double u2 = t2 - 1.0;
    return dt * (-3.0 * (u1 + u2) + 2.0 * (u1 * u1 + u1 * u2 + u2 * u2));
  }
  return value(t1) - value(t2);
}

double power_difference(double e, double r, double rho, double delta) {
  if (e == 0.0) return 0.0;
  if (delta >= 0.0) return -std::pow(r, e) * std::expm1(e * std::log1p(delta / r));
  return std::pow(rho, e) * std::expm1(e * std::log1p(-delta / rho));
}

RadialProfile::RadialProfile(ProfileShape shape, double amplitude, double scale)
    : shape_(shape), amplitude_(amplitude), scale_(scale) {
  if (!std::isfinite(amplitude)) throw DomainError("profile amplitude must be finite");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("profile scale must be positive");
  std::visit(Overloaded{
                 [](const PurePower& p) {
                   if (!std::isfinite(p.exponent)) throw DomainError("power exponent must be finite");
                 },
                 [](const TruncatedPower& p) {
                   if (!std::isfinite(p.exponent)) throw DomainError("power exponent must be finite");
                   if (!(p.lambda >= 1.0) || !std::isfinite(p.lambda))
                     throw DomainError(fmt::format("truncated power requires lambda >= 1, got {}", p.lambda));
                 },
                 [](const Gaussian& g) {
                   if (!(g.sigma > 0.0) || !std::isfinite(g.sigma))
                     throw DomainError("gaussian sigma must be positive");
                 },
                 [](const Bump&) {},
             },
             shape_);
}

RadialProfile RadialProfile::pure_power(double exponent) { return RadialProfile(PurePower{exponent}); }

RadialProfile RadialProfile::truncated_power(double exponent, double lambda) {
  return RadialProfile(TruncatedPower{exponent, lambda});
}

RadialProfile RadialProfile::gaussian(double sigma) { return RadialProfile(Gaussian{sigma}); }

RadialProfile RadialProfile::bump() { return RadialProfile(Bump{}); }

RadialProfile RadialProfile::parse(std::string_view descriptor) {
  const auto sections = split(descriptor, ';');
  const std::string_view head = sections.front();
  const size_t colon = head.find(':');
  const std::string_view name = head.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string_view::npos)
    for (auto part : split(head.substr(colon + 1), ',')) args.push_back(parse_number(part, descriptor));

  auto expect_args = [&](size_t n) {
    if (args.size() != n)
      throw DomainError(fmt::format("profile '{}': '{}' takes {} parameter(s)", descriptor, name, n));
  };

  ProfileShape shape;
  if (name == "gaussian") {
    if (args.empty()) args.push_back(1.0);
    expect_args(1);
    shape = Gaussian{args[0]};
  } else if (name == "bump") {
    expect_args(0);
    shape = Bump{};
  } else if (name == "power") {
    expect_args(1);
    shape = PurePower{args[0]};
  } else if (name == "truncated") {
    expect_args(2);
    shape = TruncatedPower{args[0], args[1]};
  } else {
    throw DomainError(fmt::format("unknown profile variant '{}'", name));
  }

  double amplitude = 1.0;
  double scale = 1.0;
  for (size_t i = 1; i < sections.size(); ++i) {
    const auto kv = split(sections[i], '=');
    if (kv.size() != 2) throw DomainError(fmt::format("profile '{}': malformed option '{}'", descriptor, sections[i]));
    if (kv[0] == "amplitude")
      amplitude = parse_number(kv[1], descriptor);
    else if (kv[0] == "scale")
      scale = parse_number(kv[1], descriptor);
    else
      throw DomainError(fmt::format("profile '{}': unknown option '{}'", descriptor, kv[0]));
  }
  return RadialProfile(shape, amplitude, scale);
}

RadialProfile RadialProfile::dilated(double t) const {
  if (!(t > 0.0)) throw DomainError("dilation factor must be positive");
  return RadialProfile(shape_, amplitude_, scale_ * t);
}

RadialProfile RadialProfile::multiplied(double c) const { return RadialProfile(shape_, amplitude_ * c, scale_); }

double RadialProfile::eval(double r) const { return weighted(0.0, r); }

double RadialProfile::eval_derivative(double r) const { return weighted_derivative(0.0, r); }

double RadialProfile::weighted(double p, double r) const {
  require_positive_radius(r, "eval");
  const double x = r / scale_;
  return amplitude_ *
         std::visit(Overloaded{
                        [&](const PurePower& s) { return std::pow(scale_, s.exponent) * std::pow(r, p - s.exponent); },
                        [&](const TruncatedPower& s) {
                          const double w = window(x, s.lambda);
                          if (w == 0.0) return 0.0;
                          return std::pow(scale_, s.exponent) * std::pow(r, p - s.exponent) * w;
                        },
                        [&](const Gaussian& s) { return std::pow(r, p) * std::exp(-0.5 * x * x / (s.sigma * s.sigma)); },
                        [&](const Bump&) {
                          if (x >= 2.0) return 0.0;
                          const double g = 1.0 - 0.25 * x * x;
                          return std::pow(r, p) * g * g;
                        },
                    },
                    shape_);
}

double RadialProfile::weighted_derivative(double p, double r) const {
  require_positive_radius(r, "eval_derivative");
  const double x = r / scale_;
  const double t = scale_;
  return amplitude_ *
         std::visit(
             Overloaded{
                 [&](const PurePower& s) {
                   const double e = p - s.exponent;
                   return e == 0.0 ? 0.0 : std::pow(t, s.exponent) * e * std::pow(r, e - 1.0);
                 },
                 [&](const TruncatedPower& s) {
                   const double e = p - s.exponent;
                   const double w = window(x, s.lambda);
                   const double dw = window_derivative(x, s.lambda) / t;
                   const double re = std::pow(r, e);
                   return std::pow(t, s.exponent) * (e == 0.0 ? dw : re * (dw + e * w / r));
                 },
                 [&](const Gaussian& s) {
                   const double f = std::exp(-0.5 * x * x / (s.sigma * s.sigma));
                   const double df = -x / (s.sigma * s.sigma) * f / t;
                   return p == 0.0 ? df : std::pow(r, p) * (df + p * f / r);
                 },
                 [&](const Bump&) {
                   if (x >= 2.0) return 0.0;
                   const double g = 1.0 - 0.25 * x * x;
                   const double df = -x * g / t;
                   return p == 0.0 ? df : std::pow(r, p) * (df + p * g * g / r);
                 },
             },
             shape_);
}

double RadialProfile::weighted_difference(double p, double r, double rho, double delta) const {
  require_positive_radius(r, "difference");
  require_positive_radius(rho, "difference");
  // Well separated radii: the plain difference has no cancellation to speak of.
  if (std::abs(delta) > 0.25 * std::min(r, rho)) return weighted(p, r) - weighted(p, rho);
  const double t = scale_;
  const double x1 = r / t;
  const double x2 = rho / t;
  const double dx = delta / t;
  return amplitude_ *
         std::visit(
             Overloaded{
                 [&](const PurePower& s) {
                   return std::pow(t, s.exponent) * power_difference(p - s.exponent, r, rho, delta);
                 },
                 [&](const TruncatedPower& s) {
                   const double e = p - s.exponent;
                   const double w1 = window(x1, s.lambda);
                   const double dw = window_difference(x1, x2, dx, s.lambda);
                   const double value = e == 0.0 ? dw
                                                 : w1 * power_difference(e, r, rho, delta) + dw * std::pow(rho, e);
                   return std::pow(t, s.exponent) * value;
                 },
                 [&](const Gaussian& s) {
                   const double inv = 0.5 / (s.sigma * s.sigma);
                   const double f1 = std::exp(-inv * x1 * x1);
                   const double f2 = std::exp(-inv * x2 * x2);
                   const double df = -f1 * std::expm1(-inv * dx * (2.0 * x1 + dx));
                   if (p == 0.0) return df;
                   return std::pow(r, p) * df + power_difference(p, r, rho, delta) * f2;
                 },
                 [&](const Bump&) {
                   const double g1 = x1 < 2.0 ? 1.0 - 0.25 * x1 * x1 : 0.0;
                   const double g2 = x2 < 2.0 ? 1.0 - 0.25 * x2 * x2 : 0.0;
                   const double b2 = g2 * g2;
                   double df;
                   if (x1 < 2.0 && x2 < 2.0)
                     df = 0.25 * dx * (2.0 * x1 + dx) * (g1 + g2);
                   else
                     df = g1 * g1 - b2;
                   if (p == 0.0) return df;
                   return std::pow(r, p) * df + power_difference(p, r, rho, delta) * b2;
                 },
             },
             shape_);
}

std::vector<double> RadialProfile::breakpoints() const {
  std::vector<double> points = std::visit(
      Overloaded{
          [](const PurePower&) { return std::vector<double>{1.0}; },
          [](const TruncatedPower& s) {
            return std::vector<double>{0.5 / s.lambda, 1.0 / s.lambda, s.lambda, 2.0 * s.lambda};
          },
          [](const Gaussian& s) { return std::vector<double>{0.25 * s.sigma, s.sigma, 3.0 * s.sigma}; },
          [](const Bump&) { return std::vector<double>{1.0, 2.0}; },
      },
      shape_);
  for (double& b : points) b *= scale_;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

double RadialProfile::origin_order() const {
  return std::visit(Overloaded{
                        [](const PurePower& s) { return -s.exponent; },
                        [](const TruncatedPower&) { return kInf; },
                        [](const Gaussian&) { return 0.0; },
                        [](const Bump&) { return 0.0; },
                    },
                    shape_);
}

double RadialProfile::support_end() const {
  return std::visit(Overloaded{
                        [](const PurePower&) { return kInf; },
                        [&](const TruncatedPower& s) { return 2.0 * s.lambda * scale_; },
                        [](const Gaussian&) { return kInf; },
                        [&](const Bump&) { return 2.0 * scale_; },
                    },
                    shape_);
}

double RadialProfile::power_exponent() const {
  if (const auto* p = std::get_if<PurePower>(&shape_)) return p->exponent;
  if (const auto* p = std::get_if<TruncatedPower>(&shape_)) return p->exponent;
  throw UnsupportedError("profile is not a power law");
}

std::string RadialProfile::describe() const {
  std::string head = std::visit(Overloaded{
                                    [](const PurePower& s) { return fmt::format("power:{}", s.exponent); },
                                    [](const TruncatedPower& s) {
                                      return fmt::format("truncated:{},{}", s.exponent, s.lambda);
                                    },
                                    [](const Gaussian& s) { return fmt::format("gaussian:{}", s.sigma); },
                                    [](const Bump&) { return std::string("bump"); },
                                },
                                shape_);
  if (amplitude_ != 1.0) head += fmt::format(";amplitude={}", amplitude_);
  if (scale_ != 1.0) head += fmt::format(";scale={}", scale_);
  return head;
}

RadialProfile u_lambda(const InequalityParams& params, double lambda) {
  if (!(lambda >= 1.0)) throw DomainError(fmt::format("u_lambda requires lambda >= 1, got {}", lambda));
  return RadialProfile::truncated_power(params.ground_exponent(), lambda);
}

}  // namespace hardy
