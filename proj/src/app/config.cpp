#include "qwalk/app/config.hpp"

#include <charconv>
#include <cmath>

#include "qwalk/error.hpp"

namespace qwalk::app {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::TimeAverage: return "time-average";
    case Method::SpectralNumeric: return "spectral-numeric";
    case Method::SpectralAnalytic: return "spectral-analytic";
  }
  return "?";
}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Svg: return "svg";
  }
  return "?";
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Simulate: return "simulate";
    case Command::Spectrum: return "spectrum";
    case Command::Limitdist: return "limitdist";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::TimeAverage, Method::SpectralNumeric, Method::SpectralAnalytic})
    if (name == to_string(m)) return m;
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view name) {
  for (Format f : {Format::Csv, Format::Json, Format::Svg})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

namespace {

long parse_long(std::string_view text, std::string_view what) {
  long value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw InvalidInput("bad " + std::string(what) + " in --omega-frac: '" + std::string(text) + "'");
  return value;
}

[[noreturn]] void analytic_unavailable(const std::string& why) {
  throw InvalidInput("analytic mode unavailable: " + why);
}

}  // namespace

double parse_omega_frac(std::string_view text) {
  const auto slash = text.find('/');
  const long p = parse_long(text.substr(0, slash), "numerator");
  const long q = slash == std::string_view::npos ? 1 : parse_long(text.substr(slash + 1), "denominator");
  if (q == 0) throw InvalidInput("--omega-frac denominator must be non-zero");
  return std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
}

CoinParams coin_of(const RunConfig& config) { return CoinParams::from_angle(config.omega, config.coin_phase); }

void validate(const RunConfig& c, Command command) {
  if (c.n_sites < 3) throw InvalidInput("--n must be >= 3, got " + std::to_string(c.n_sites));
  if (!(c.omega > 0.0 && c.omega < std::numbers::pi))
    throw InvalidInput("--omega must lie in (0, pi), got " + std::to_string(c.omega));
  if (!std::isfinite(c.coin_phase)) throw InvalidInput("--coin-phase must be finite");
  if (c.start < 1 || c.start > c.n_sites)
    throw InvalidInput("--start must lie in [1, " + std::to_string(c.n_sites) + "], got " + std::to_string(c.start));
  if (!std::isfinite(c.omega0) || !std::isfinite(c.phi0)) throw InvalidInput("--omega0 and --phi0 must be finite");

  if (command == Command::Simulate) {
    if (c.method != Method::TimeAverage) throw InvalidInput("simulate supports --method time-average only");
    if (c.horizon < 0) throw InvalidInput("--steps must be >= 0, got " + std::to_string(c.horizon));
    if (c.n_sites > kMaxSimulateSites) throw InvalidInput("--n too large for simulate");
    return;
  }

  if (c.method == Method::TimeAverage)
    throw InvalidInput(std::string(to_string(command)) + " supports spectral-numeric and spectral-analytic only");
  if (c.n_sites > kMaxSpectralSites)
    throw InvalidInput("--n must be <= " + std::to_string(kMaxSpectralSites) + " for spectral methods");

  const bool analytic = c.method == Method::SpectralAnalytic || (command == Command::Spectrum && c.compare);
  if (!analytic) return;
  if (c.coin_phase != 0.0) analytic_unavailable("closed forms need --coin-phase 0");
  const CoinParams coin = coin_of(c);
  if (c.shift == ShiftKind::Moving) {
    if (c.n_sites < 4) analytic_unavailable("moving shift needs N >= 4");
    if (std::abs(coin.a) < 1e-12) analytic_unavailable("moving shift needs omega != pi/2 (cos(omega) = 0)");
    if (command == Command::Limitdist && c.start != 1)
      analytic_unavailable("moving-shift closed form covers --start 1 only");
  }
}

}  // namespace qwalk::app
