#include "qwalk/analytic_swapping.hpp"

#include <cmath>
#include <numbers>

#include "qwalk/chebyshev.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

using cheb::cheb_u_real;

void require_swapping_analytic(int n_sites, const CoinParams& coin) {
  if (n_sites < 3)
    throw InvalidInput("swapping-shift closed form needs N >= 3, got " + std::to_string(n_sites));
  if (coin.has_phase()) throw InvalidInput("swapping-shift closed form needs coin phase 0");
  if (!(coin.b > 0.0)) throw InvalidInput("swapping-shift closed form needs sin(omega) > 0");
}

double swapping_continuum_root(int k, int n_sites) {
  if (k < 1 || k > n_sites - 2)
    throw InvalidInput("continuum index k must lie in [1, N-2], got " + std::to_string(k));
  return std::cos(k * std::numbers::pi / (n_sites - 1));
}

complex swapping_continuum_eigenvalue(int k, bool plus_branch, int n_sites, const CoinParams& coin) {
  const double x = swapping_continuum_root(k, n_sites);
  const double s = std::sqrt(std::max(0.0, 1.0 - coin.b * coin.b * x * x));
  return {coin.b * x, plus_branch ? s : -s};
}

std::vector<complex> swapping_eigenvalues(int n_sites, const CoinParams& coin) {
  require_swapping_analytic(n_sites, coin);
  std::vector<complex> values{{1.0, 0.0}, {-1.0, 0.0}};
  for (int k = 1; k <= n_sites - 2; ++k) {
    values.push_back(swapping_continuum_eigenvalue(k, true, n_sites, coin));
    values.push_back(swapping_continuum_eigenvalue(k, false, n_sites, coin));
  }
  return values;
}

StateVector swapping_eigenstate_isolated(int sign, const ChainGeometry& geometry, const CoinParams& coin) {
  using enum Direction;
  const int n = geometry.n_sites();
  require_swapping_analytic(n, coin);
  if (sign != 1 && sign != -1) throw InvalidInput("isolated eigenvector sign must be +1 or -1");
  const double rho = sign * (1.0 - coin.a) / coin.b;
  std::vector<complex> amps(geometry.dimension());
  double p = 1.0;  // rho^{i-2}
  for (int i = 2; i <= n; ++i) {
    amps[geometry.index_of({i, L})] = p;
    p *= rho;
  }
  p = 1.0;
  for (int i = 1; i <= n - 1; ++i) {
    amps[geometry.index_of({i, R})] = sign * p;
    p *= rho;
  }
  return StateVector::normalized(geometry, std::move(amps));
}

std::vector<complex> swapping_continuum_components(int k, bool plus_branch, const ChainGeometry& geometry,
                                                   const CoinParams& coin) {
  using enum Direction;
  const int n = geometry.n_sites();
  require_swapping_analytic(n, coin);
  const double x = swapping_continuum_root(k, n);
  const complex u = swapping_continuum_eigenvalue(k, plus_branch, n, coin);
  const double c = (1.0 + coin.a) / coin.b;
#ifdef QWALK_MUTATE_CONTINUUM_SIGN
  const double upper_sign = -1.0;
#else
  const double upper_sign = 1.0;
#endif
  std::vector<complex> amps(geometry.dimension());
  for (int i = 2; i <= n; ++i)
    amps[geometry.index_of({i, L})] = cheb_u_real(i - 2, x) - c * u * cheb_u_real(i - 3, x);
  for (int i = 1; i <= n - 1; ++i)
    amps[geometry.index_of({i, R})] = -c * cheb_u_real(i - 2, x) + upper_sign * u * cheb_u_real(i - 1, x);
  return amps;
}

StateVector swapping_eigenstate_continuum(int k, bool plus_branch, const ChainGeometry& geometry,
                                          const CoinParams& coin) {
  return StateVector::normalized(geometry, swapping_continuum_components(k, plus_branch, geometry, coin));
}

std::vector<SwappingEigenpair> swapping_eigensystem(const ChainGeometry& geometry, const CoinParams& coin) {
  const int n = geometry.n_sites();
  require_swapping_analytic(n, coin);
  std::vector<SwappingEigenpair> pairs;
  pairs.push_back({SwappingKind::IsolatedPlus, 1.0 / coin.b, 0, true, {1.0, 0.0},
                   swapping_eigenstate_isolated(1, geometry, coin)});
  pairs.push_back({SwappingKind::IsolatedMinus, -1.0 / coin.b, 0, false, {-1.0, 0.0},
                   swapping_eigenstate_isolated(-1, geometry, coin)});
  for (int k = 1; k <= n - 2; ++k) {
    for (bool plus : {true, false})
      pairs.push_back({SwappingKind::Continuum, swapping_continuum_root(k, n), k, plus,
                       swapping_continuum_eigenvalue(k, plus, n, coin),
                       swapping_eigenstate_continuum(k, plus, geometry, coin)});
  }
  return pairs;
}

double swapping_continuum_norm_approx(int k, int n_sites, const CoinParams& coin) {
  const double t = k * std::numbers::pi / (n_sites - 1);
  const double s = std::sin(t), c = std::cos(t);
  return (1.0 - coin.a) / 2.0 * s * s / ((n_sites - 1) * (1.0 - coin.b * coin.b * c * c));
}

namespace {

double norm_for_r(double r, int n_sites) {
  if (std::abs(1.0 - r) < 1e-12) return 1.0 / (2.0 * (n_sites - 1));
  return (1.0 - r) / (2.0 * (1.0 - std::pow(r, n_sites - 1)));
}

}  // namespace

double swapping_isolated_norm(int n_sites, const CoinParams& coin) { return norm_for_r(coin.r, n_sites); }

double intrinsic_profile(double r, int j, int n_sites) {
  if (j < 1 || j > n_sites) throw InvalidInput("position out of range: " + std::to_string(j));
  const double base = norm_for_r(r, n_sites);
  if (j == 1) return base;
  if (j == n_sites) return base * std::pow(r, n_sites - 2);
  return base * (std::pow(r, j - 2) + std::pow(r, j - 1));
}

double intrinsic_overlap(double r, int i, int n_sites, double omega0) {
  if (i < 1 || i > n_sites) throw InvalidInput("start out of range: " + std::to_string(i));
  const double base = norm_for_r(r, n_sites);
  if (i == 1) return base;
  if (i == n_sites) return base * std::pow(r, n_sites - 2);
  const double c = std::cos(omega0), s = std::sin(omega0);
  return base * (std::pow(r, i - 2) * c * c + std::pow(r, i - 1) * s * s);
}

PositionDistribution intrinsic_closed_form(int start, int n_sites, const CoinParams& coin, double omega0) {
  require_swapping_analytic(n_sites, coin);
  const double weight = 2.0 * intrinsic_overlap(coin.r, start, n_sites, omega0);
  std::vector<double> chi(static_cast<std::size_t>(n_sites));
  for (int j = 1; j <= n_sites; ++j) chi[j - 1] = weight * intrinsic_profile(coin.r, j, n_sites);
  return PositionDistribution(ChainGeometry(n_sites), std::move(chi));
}

namespace {

PositionDistribution projected_profile(const StateVector& eigenvector, const StateVector& psi0) {
  const double w = std::norm(inner_product(eigenvector, psi0));
  std::vector<double> weights(eigenvector.size());
  for (std::size_t m = 0; m < weights.size(); ++m) weights[m] = w * std::norm(eigenvector[m]);
  return position_marginal(eigenvector.geometry(), weights);
}

std::vector<double> add(std::span<const double> x, std::span<const double> y) {
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += y[k];
  return out;
}

}  // namespace

std::pair<PositionDistribution, PositionDistribution> intrinsic_parts(int start, int n_sites,
                                                                      const CoinParams& coin,
                                                                      double omega0, double phi0) {
  require_swapping_analytic(n_sites, coin);
  const ChainGeometry geometry(n_sites);
  const StateVector psi0 = initial_state(geometry, start, omega0, phi0);
  return {projected_profile(swapping_eigenstate_isolated(1, geometry, coin), psi0),
          projected_profile(swapping_eigenstate_isolated(-1, geometry, coin), psi0)};
}

PositionDistribution intrinsic_distribution(int start, int n_sites, const CoinParams& coin, double omega0,
                                            double phi0) {
  auto [plus, minus] = intrinsic_parts(start, n_sites, coin, omega0, phi0);
  return PositionDistribution(plus.geometry(), add(plus.values(), minus.values()));
}

double intrinsic_total_limit(int start, const CoinParams& coin, double omega0) {
  const double r = coin.r;
  if (r >= 1.0) return 0.0;
  if (start == 1) return 1.0 - r;
  const double c = std::cos(omega0), s = std::sin(omega0);
  return (1.0 - r) * (std::pow(r, start - 2) * c * c + std::pow(r, start - 1) * s * s);
}

SwappingChi chi_swapping_closed_form(int start, int n_sites, const CoinParams& coin, double omega0,
                                     double phi0) {
  const ChainGeometry geometry(n_sites);
  const StateVector psi0 = initial_state(geometry, start, omega0, phi0);
  std::vector<double> intrinsic(geometry.dimension(), 0.0), continuum(geometry.dimension(), 0.0);
  // All 2N-2 eigenvalues are simple, so each eigenpair contributes on its own.
  for (const auto& pair : swapping_eigensystem(geometry, coin)) {
    auto& acc = pair.kind == SwappingKind::Continuum ? continuum : intrinsic;
    const double w = std::norm(inner_product(pair.eigenvector, psi0));
    for (std::size_t m = 0; m < acc.size(); ++m) acc[m] += w * std::norm(pair.eigenvector[m]);
  }
  auto intr = position_marginal(geometry, intrinsic);
  auto cont = position_marginal(geometry, continuum);
  auto total = PositionDistribution(geometry, add(intr.values(), cont.values()));
  return {std::move(intr), std::move(cont), std::move(total)};
}

double chi_swapping_closed_form(int start, int j, int n_sites, const CoinParams& coin, double omega0,
                                double phi0) {
  return chi_swapping_closed_form(start, n_sites, coin, omega0, phi0).total.at(j);
}

double swapping_chi11_continuum_asymptote(int n_sites, const CoinParams& coin) {
  const double a = coin.a;
  return (a + 2.0) * (1.0 - a) * (1.0 - a) / (4.0 * (a + 1.0) * (a + 1.0)) / (n_sites - 1);
}

double swapping_chi1n_continuum_asymptote(int n_sites, const CoinParams& coin) {
  const double a = coin.a;
  return (a + 2.0) * (1.0 - a) / (4.0 * (a + 1.0)) / (n_sites - 1);
}

}  // namespace qwalk
