#include "qwalk/chebyshev.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk::cheb {
namespace {

// Multiply by i^k without rounding: each power of i is a component swap.
complex times_i_pow(complex v, int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return v;
    case 1: return {-v.imag(), v.real()};
    case 2: return {-v.real(), -v.imag()};
    default: return {v.imag(), -v.real()};
  }
}

complex exterior_z(complex x) { return x - std::sqrt(x * x - 1.0); }

// Integer power by repeated squaring; std::pow(complex, int) goes through
// exp/log and picks up spurious imaginary parts for negative real bases.
complex ipow(complex base, int e) {
  complex result = 1.0;
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

double u_interior(int n, double x) {
  // n >= 0 here.
  if (x == 1.0) return n + 1.0;
  if (x == -1.0) return (n % 2 == 0 ? 1.0 : -1.0) * (n + 1.0);
  const double theta = std::acos(x);
  return std::sin((n + 1) * theta) / std::sin(theta);
}

complex u_nonnegative(int n, PolyArgument arg) {
  const complex x = arg.value();
  if (arg.regime() == Regime::Interior) return u_interior(n, x.real());
  const complex z = exterior_z(x);
  const complex zinv = 1.0 / z;
  return (ipow(zinv, n + 1) - ipow(z, n + 1)) / (zinv - z);
}

}  // namespace

complex cheb_t(int n, PolyArgument arg) {
  n = std::abs(n);
  const complex x = arg.value();
  if (arg.regime() == Regime::Interior) return std::cos(n * std::acos(x.real()));
  const complex z = exterior_z(x);
  return 0.5 * (ipow(z, n) + ipow(z, -n));
}

complex cheb_u(int n, PolyArgument arg) {
  if (n == -1) return 0.0;
  if (n < -1) return -u_nonnegative(-n - 2, arg);
  return u_nonnegative(n, arg);
}

complex cheb_v(int n, complex y) {
  if (n < 0) throw InvalidInput("cheb_v: order must be non-negative, got " + std::to_string(n));
  return times_i_pow(cheb_u(n, times_i_pow(y, 3)), n);
}

double cheb_t_real(int n, double x) { return cheb_t(n, x).real(); }
double cheb_u_real(int n, double x) { return cheb_u(n, x).real(); }

complex cheb_t_recurrence(int n, complex x) {
  n = std::abs(n);
  complex prev = 1.0, cur = x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const complex next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

complex cheb_u_recurrence(int n, complex x) {
  if (n == -1) return 0.0;
  if (n < -1) return -cheb_u_recurrence(-n - 2, x);
  complex prev = 1.0, cur = 2.0 * x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const complex next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

complex cheb_v_recurrence(int n, complex y) {
  if (n < 0) throw InvalidInput("cheb_v_recurrence: order must be non-negative");
  complex prev = 1.0, cur = 2.0 * y;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const complex next = 2.0 * y * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

constexpr std::array<std::pair<std::string_view, Identity>, 9> kIdentityNames{{
    {"a6", Identity::A6},
    {"a7", Identity::A7},
    {"a8", Identity::A8},
    {"a9", Identity::A9},
    {"a10", Identity::A10},
    {"a11", Identity::A11},
    {"a12", Identity::A12},
    {"a13", Identity::A13},
    {"a14", Identity::A14},
}};

}  // namespace

std::optional<Identity> parse_identity(std::string_view tag) {
  for (const auto& [name, id] : kIdentityNames)
    if (name == tag) return id;
  return std::nullopt;
}

std::string_view identity_name(Identity id) {
  for (const auto& [name, value] : kIdentityNames)
    if (value == id) return name;
  return "?";
}

double identity_residual(Identity id, int n, int m, double x) {
  if (n < 0 || n > 64 || m < 0 || m > 64)
    throw InvalidInput("identity_residual: n and m must lie in [0, 64]");
  if (!(x > -1.0 && x < 1.0)) throw InvalidInput("identity_residual: x must lie in (-1, 1)");

  auto U = [x](int k) { return cheb_u(k, x); };
  auto T = [x](int k) { return cheb_t(k, x); };

  switch (id) {
    case Identity::A6:
      return std::abs(U(n - 1) + U(-n - 1));
    case Identity::A7:
      return std::abs(2.0 * x * U(n) - U(n - 1) - U(n + 1));
    case Identity::A8:
      return std::max(std::abs(T(n) - (U(n) - x * U(n - 1))),
                      std::abs(T(n) - (x * U(n - 1) - U(n - 2))));
    case Identity::A9:
      return std::abs(U(n) * U(m) - U(n - 1) * U(m - 1) - U(n + m));
    case Identity::A10:
      return std::abs(U(n) * U(m) - U(n + 1) * U(m - 1) - U(n - m));
    case Identity::A11:
      return std::abs(U(n) * T(m) + U(m - 1) * T(n + 1) - U(n + m));
    case Identity::A12:
      return std::abs(U(n) * T(m) - U(m - 1) * T(n + 1) - U(n - m));
    case Identity::A13:
      return std::abs(T(n) * T(n) - (x * x - 1.0) * U(n - 1) * U(n - 1) - 1.0);
    case Identity::A14:
      return std::max(std::abs(T(m) * U(n) - 0.5 * (U(m + n) + U(n - m))),
                      std::abs(T(m) * T(n) - 0.5 * (T(m + n) + T(std::abs(m - n)))));
  }
  return 0.0;
}

double identity_residual(std::string_view tag, int n, int m, double x) {
  const auto id = parse_identity(tag);
  if (!id) throw InvalidInput("identity_residual: unknown identity '" + std::string(tag) + "'");
  return identity_residual(*id, n, m, x);
}

}  // namespace qwalk::cheb
