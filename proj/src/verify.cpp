#include "qwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qwalk/chebyshev.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

using cheb::cheb_u_real;
using cheb::cheb_v;

namespace {

constexpr complex kI{0.0, 1.0};

complex i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int min_sites(MappingKind kind) { return kind == MappingKind::Moving ? 6 : 4; }

}  // namespace

double mapping_residual(const DeterminantSample& s) {
  const complex u = s.u;
  if (s.kind == MappingKind::Moving) return std::abs(u * u - 2.0 * kI * s.coin.a * s.x * u - 1.0);
  return std::abs(u * u - 2.0 * s.coin.b * s.x * u + 1.0);
}

DeterminantSample make_sample(MappingKind kind, double x, complex u, int n_sites, const CoinParams& coin) {
  if (n_sites < min_sites(kind))
    throw InvalidInput("determinant sample needs N >= " + std::to_string(min_sites(kind)) + ", got " +
                       std::to_string(n_sites));
  if (kind == MappingKind::Moving && coin.a == 0.0) throw InvalidInput("moving mapping needs a != 0");
  if (kind == MappingKind::Swapping && coin.b == 0.0) throw InvalidInput("swapping mapping needs b != 0");
  DeterminantSample s{kind, x, u, coin, n_sites};
  const double res = mapping_residual(s);
  if (!(res <= 1e-12 * std::max(1.0, std::norm(u)))) {
    std::ostringstream msg;
    msg << "sample violates the mapping relation (residual " << res << ")";
    throw InvalidInput(msg.str());
  }
  return s;
}

DeterminantSample moving_sample(double x, bool plus_branch, int n_sites, const CoinParams& coin) {
  const complex root = std::sqrt(complex(1.0 - coin.a * coin.a * x * x, 0.0));
  const complex u = kI * coin.a * x + (plus_branch ? root : -root);
  return make_sample(MappingKind::Moving, x, u, n_sites, coin);
}

DeterminantSample swapping_sample(double x, bool plus_branch, int n_sites, const CoinParams& coin) {
  const complex root = std::sqrt(complex(coin.b * coin.b * x * x - 1.0, 0.0));
  const complex u = coin.b * x + (plus_branch ? root : -root);
  return make_sample(MappingKind::Swapping, x, u, n_sites, coin);
}

std::vector<DeterminantSample> random_samples(MappingKind kind, std::size_t count, std::uint64_t seed,
                                              int n_min, int n_max, const CoinParams& coin) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(n_min, n_max);
  std::uniform_real_distribution<double> pick_x(-1.0, 1.0);
  std::bernoulli_distribution pick_branch(0.5);
  std::vector<DeterminantSample> out;
  out.reserve(count);
  while (out.size() < count) {
    const int n = pick_n(rng);
    const double x = pick_x(rng);
    const bool plus = pick_branch(rng);
    if (x == -1.0) continue;
    out.push_back(kind == MappingKind::Moving ? moving_sample(x, plus, n, coin)
                                              : swapping_sample(x, plus, n, coin));
  }
  return out;
}

std::array<complex, 4> appendix_c_coefficients(const DeterminantSample& s) {
  const double a = s.coin.a, b = s.coin.b;
  const int n = s.n_sites;
  const complex u = s.u, y = kI * s.x;
  const complex c1 = a * u * (u * u - b);
  const complex c2 = (u * u - b) * (u * u - b * b) + a * a * b;
  const complex c3 = (1.0 - b * u * u) * cheb_v(n - 4, y) - a * u * cheb_v(n - 5, y);
  const complex c4 = a * u * cheb_v(n - 6, y) - (1.0 - b * u * u) * cheb_v(n - 5, y);
  return {c1, c2, c3, c4};
}

std::array<complex, 4> appendix_c_coefficients_reduced(const DeterminantSample& s) {
  const double a = s.coin.a, b = s.coin.b, x = s.x;
  const int n = s.n_sites;
  const complex u = s.u;
  const double u4 = cheb_u_real(n - 4, x), u5 = cheb_u_real(n - 5, x), u6 = cheb_u_real(n - 6, x);
  const complex c1 = u * a * (1.0 - b) * (1.0 - 4.0 * (1.0 + b) * x * x) + 2.0 * kI * x * a * a;
  const complex c2 =
      (1.0 - b) * (2.0 * kI * u * a * x * (-4.0 * (b + 1.0) * x * x + b + 2.0) + (1.0 + b) * (1.0 - 4.0 * x * x));
  const complex c3 = i_pow(n - 5) * (u * (2.0 * a * b * x * u4 - a * u5) + kI * (1.0 - b) * u4);
  const complex c4 = i_pow(n - 5) * (u * kI * (2.0 * a * b * x * u5 - a * u6) - (1.0 - b) * u5);
  return {c1, c2, c3, c4};
}

double appendix_c_reduction_residual(const DeterminantSample& s) {
  const auto full = appendix_c_coefficients(s);
  const auto reduced = appendix_c_coefficients_reduced(s);
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(full[k] - reduced[k]));
  return worst;
}

complex appendix_c_determinant(const DeterminantSample& s) {
  const auto [c1, c2, c3, c4] = appendix_c_coefficients(s);
  return c1 * c4 - c2 * c3;
}

complex appendix_c_factored(const DeterminantSample& s) {
  const double a = s.coin.a, b = s.coin.b, x = s.x;
  const int n = s.n_sites;
  const double x2 = x * x, x4 = x2 * x2;
  const double brace = (8.0 * b * x4 + 8.0 * x4 - 4.0 * b * x2 - 8.0 * x2 + 1.0) * cheb_u_real(n - 5, x) -
                       x * (4.0 * b * x2 + 4.0 * x2 - b - 3.0) * cheb_u_real(n - 6, x);
  const complex bracket = 2.0 * a * x * kI + s.u * (1.0 - 4.0 * a * a * x2);
  return i_pow(n - 5) * 2.0 * a * b * (1.0 - b) * bracket * brace;
}

double appendix_c_residual(const DeterminantSample& s) {
  if (s.kind != MappingKind::Moving) throw InvalidInput("boundary determinant needs a moving-shift sample");
  return std::abs(appendix_c_determinant(s) - appendix_c_factored(s));
}

double appendix_c_residual_opposite_sign(const DeterminantSample& s) {
  if (s.kind != MappingKind::Moving) throw InvalidInput("boundary determinant needs a moving-shift sample");
  return std::abs(-appendix_c_determinant(s) - appendix_c_factored(s));
}

double SplitResiduals::max() const { return std::max({quartic, cubic, recombination}); }

SplitResiduals appendix_c_split_residuals(double x, double b, int n_sites) {
  if (n_sites < 6) throw InvalidInput("split check needs N >= 6");
  auto U = [x](int k) { return cheb_u_real(k, x); };
  const double x2 = x * x, x4 = x2 * x2;
  const double quartic_lhs = 8.0 * b * x4 + 8.0 * x4 - 4.0 * b * x2 - 8.0 * x2 + 1.0;
  const double quartic_mid = 0.5 * (b + 1.0) * (16.0 * x4 - 12.0 * x2 + 1.0) + 0.5 * (b - 1.0) * (4.0 * x2 - 1.0);
  const double quartic_rhs = 0.5 * (b + 1.0) * U(4) + 0.5 * (b - 1.0) * U(2);
  const double cubic_lhs = x * (4.0 * b * x2 + 4.0 * x2 - b - 3.0);
  const double cubic_mid = 0.5 * (b + 1.0) * (x * (8.0 * x2 - 4.0)) + 0.5 * (b - 1.0) * (2.0 * x);
  const double cubic_rhs = 0.5 * (b + 1.0) * U(3) + 0.5 * (b - 1.0) * U(1);
  const int n = n_sites;
  const double rec = std::max(std::abs(U(4) * U(n - 5) - U(3) * U(n - 6) - U(n - 1)),
                              std::abs(U(2) * U(n - 5) - U(1) * U(n - 6) - U(n - 3)));
  return {std::max(std::abs(quartic_lhs - quartic_mid), std::abs(quartic_mid - quartic_rhs)),
          std::max(std::abs(cubic_lhs - cubic_mid), std::abs(cubic_mid - cubic_rhs)), rec};
}

complex appendix_d_lhs(const DeterminantSample& s) {
  if (s.kind != MappingKind::Swapping) throw InvalidInput("boundary determinant needs a swapping-shift sample");
  const double a = s.coin.a, b = s.coin.b, x = s.x;
  const int n = s.n_sites;
  const complex u = s.u, u2 = u * u;
  auto U = [x](int k) { return cheb_u_real(k, x); };
  return b * u * ((a + u2) * U(n - 4) - b * u * U(n - 5)) - (1.0 - a * u2) * ((a + u2) * U(n - 3) - b * u * U(n - 4));
}

complex appendix_d_rhs(const DeterminantSample& s) {
  const complex u = s.u;
  return s.coin.a * s.coin.b * u * (u * u - 1.0) * cheb_u_real(s.n_sites - 2, s.x);
}

double appendix_d_residual(const DeterminantSample& s) { return std::abs(appendix_d_lhs(s) - appendix_d_rhs(s)); }

}  // namespace qwalk
