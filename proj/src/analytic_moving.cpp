#include "qwalk/analytic_moving.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qwalk/chebyshev.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

using cheb::cheb_u_real;

void require_moving_analytic(int n_sites, const CoinParams& coin) {
  if (n_sites < 4)
    throw InvalidInput("moving-shift closed form needs N >= 4, got " + std::to_string(n_sites));
  if (coin.has_phase()) throw InvalidInput("moving-shift closed form needs coin phase 0");
  if (std::abs(coin.a) < 1e-12)
    throw InvalidInput("moving-shift closed form needs cos(omega) != 0 (omega != pi/2)");
}

double moving_determinant(double x, int n_sites, const CoinParams& coin) {
  const double c = (coin.b - 1.0) / (coin.b + 1.0);
  return cheb_u_real(n_sites - 1, x) + c * cheb_u_real(n_sites - 3, x);
}

namespace {

double bisect(double lo, double hi, int n_sites, const CoinParams& coin) {
  double f_lo = moving_determinant(lo, n_sites, coin);
  const double f_hi = moving_determinant(hi, n_sites, coin);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "no sign change of the moving-shift determinant on [" << lo << ", " << hi
        << "] (f = " << f_lo << ", " << f_hi << ")";
    throw NumericalFailure(msg.str());
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = moving_determinant(mid, n_sites, coin);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double f_end = moving_determinant(hi, n_sites, coin);
  return std::abs(f_lo) <= std::abs(f_end) ? lo : hi;
}

}  // namespace

std::vector<double> moving_determinant_roots(int n_sites, const CoinParams& coin) {
  require_moving_analytic(n_sites, coin);
  // Bracket points, descending: 1, zeros of U_{N-2}, -1.
  std::vector<double> points{1.0};
  for (int m = 1; m <= n_sites - 2; ++m) points.push_back(std::cos(m * std::numbers::pi / (n_sites - 1)));
  points.push_back(-1.0);

  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n_sites - 1));
  for (std::size_t k = 0; k + 1 < points.size(); ++k)
    roots.push_back(bisect(points[k + 1], points[k], n_sites, coin));
  return roots;
}

std::vector<double> moving_approx_roots(int n_sites) {
  std::vector<double> roots;
  for (int k = 1; k <= n_sites - 1; ++k) roots.push_back(std::cos(k * std::numbers::pi / n_sites));
  return roots;
}

complex moving_eigenvalue(double x, Branch branch, const CoinParams& coin) {
  const double s = std::sqrt(std::max(0.0, 1.0 - coin.a * coin.a * x * x));
  return {branch == Branch::Plus ? s : -s, coin.a * x};
}

std::vector<complex> moving_eigenvalues(int n_sites, const CoinParams& coin, RootMode mode) {
  require_moving_analytic(n_sites, coin);
  const auto roots =
      mode == RootMode::ExactRoots ? moving_determinant_roots(n_sites, coin) : moving_approx_roots(n_sites);
  std::vector<complex> values;
  for (double x : roots) {
    values.push_back(moving_eigenvalue(x, Branch::Plus, coin));
    values.push_back(moving_eigenvalue(x, Branch::Minus, coin));
  }
  return values;
}

namespace {

complex i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

std::vector<complex> moving_eigenstate_components(double x, Branch branch,
                                                  const ChainGeometry& geometry,
                                                  const CoinParams& coin) {
  using enum Direction;
  const int n = geometry.n_sites();
  require_moving_analytic(n, coin);
  const double a = coin.a, b = coin.b;
  const complex u = moving_eigenvalue(x, branch, coin);
  const complex denom = u * u - b;
  if (std::abs(denom) < 1e-12) {
    std::ostringstream msg;
    msg << "singular moving-shift eigenvector: |u^2 - b| = " << std::abs(denom) << " at x = " << x;
    throw NumericalFailure(msg.str());
  }
  const complex I(0.0, 1.0);
  auto U = [x](int k) { return cheb_u_real(k, x); };

  std::vector<complex> amps(geometry.dimension(), 0.0);
  auto at = [&](int pos, Direction d) -> complex& { return amps[geometry.index_of({pos, d})]; };

  for (int j = 2; j <= n - 1; ++j) {
    at(j, L) = -i_pow(j) * (a * u * I * U(j - 1) + (1.0 - b) * U(j - 2)) / denom;
    at(j, R) = -i_pow(j) * ((1.0 - b) * u * I * U(j - 3) + a * U(j - 2)) / denom;
  }
  at(n, L) = u * at(n - 1, L);
  at(1, R) = a * u / denom;
  return amps;
}

StateVector moving_eigenstate(double x_root, Branch branch, const ChainGeometry& geometry,
                              const CoinParams& coin) {
  return StateVector::normalized(geometry, moving_eigenstate_components(x_root, branch, geometry, coin));
}

std::vector<MovingEigenpair> moving_eigensystem(const ChainGeometry& geometry, const CoinParams& coin) {
  std::vector<MovingEigenpair> pairs;
  for (double x : moving_determinant_roots(geometry.n_sites(), coin)) {
    for (Branch br : {Branch::Plus, Branch::Minus})
      pairs.push_back({x, br, moving_eigenvalue(x, br, coin), moving_eigenstate(x, br, geometry, coin)});
  }
  return pairs;
}

double moving_norm_approx(double x_root, const CoinParams& coin, int n_sites) {
  const double b = coin.b;
  const double t = std::acos(std::clamp(x_root, -1.0, 1.0));
  const double c = std::cos(t), s = std::sin(t);
  return (1.0 - b + 4.0 * b * (1.0 + b) * c * c) * s * s /
         (n_sites * (1.0 + b * b + (b * b - 1.0) * std::cos(2.0 * t)));
}

double RootIdentityResiduals::max() const { return std::max({upper, lower, norm}); }

RootIdentityResiduals moving_root_identities(double x, int n_sites, const CoinParams& coin) {
  const double b = coin.b, a = coin.a;
  const double u1 = cheb_u_real(n_sites - 1, x);
  const double u2 = cheb_u_real(n_sites - 2, x);
  const double u3 = cheb_u_real(n_sites - 3, x);
  return {std::abs(u1 - (1.0 - b) * x * u2), std::abs(u3 - (1.0 + b) * x * u2),
          std::abs((1.0 - a * a * x * x) * u2 * u2 - 1.0)};
}

PositionDistribution chi_moving_closed_form_profile(int n_sites, const CoinParams& coin) {
  const ChainGeometry geometry(n_sites);
  const auto start_index = geometry.index_of({1, Direction::R});
  std::vector<double> weights(geometry.dimension(), 0.0);
  for (const auto& pair : moving_eigensystem(geometry, coin)) {
    const double overlap = std::norm(pair.eigenvector[start_index]);
    for (std::size_t k = 0; k < weights.size(); ++k) weights[k] += std::norm(pair.eigenvector[k]) * overlap;
  }
  return position_marginal(geometry, weights);
}

double chi_moving_closed_form(int start, int j, int n_sites, const CoinParams& coin) {
  if (start != 1)
    throw InvalidInput("moving-shift closed form covers start 1 only, got " + std::to_string(start));
  return chi_moving_closed_form_profile(n_sites, coin).at(j);
}

double chi_moving_asymptote(int n_sites, const CoinParams& coin) {
  const double b = coin.b;
  return (2.0 + b * (b * b - 3.0)) / (4.0 * (b - 1.0) * (b - 1.0)) / n_sites;
}

}  // namespace qwalk
