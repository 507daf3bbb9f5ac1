#include <doctest.h>

#include <cmath>
#include <random>

#include "qwalk/chebyshev.hpp"
#include "qwalk/error.hpp"

using namespace qwalk::cheb;

namespace {

// Reference values by long-double recurrence, independent of the library.
std::complex<long double> ref_u(int n, std::complex<long double> x) {
  if (n == -1) return 0.0L;
  std::complex<long double> prev = 1.0L, cur = 2.0L * x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    auto next = 2.0L * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<long double> ref_t(int n, std::complex<long double> x) {
  std::complex<long double> prev = 1.0L, cur = x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    auto next = 2.0L * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double rel_gap(complex got, std::complex<long double> want) {
  const complex w(static_cast<double>(want.real()), static_cast<double>(want.imag()));
  return std::abs(got - w) / std::max(1.0, std::abs(w));
}

}  // namespace

TEST_CASE("low orders match the explicit polynomials") {
  for (double x : {-0.9, -0.3, 0.0, 0.25, 0.8, 1.0, -1.0, 1.7, -2.5}) {
    CHECK(cheb_u_real(0, x) == doctest::Approx(1.0));
    CHECK(cheb_u_real(1, x) == doctest::Approx(2 * x));
    CHECK(cheb_u_real(2, x) == doctest::Approx(4 * x * x - 1));
    CHECK(cheb_u_real(3, x) == doctest::Approx(8 * x * x * x - 4 * x));
    CHECK(cheb_t_real(3, x) == doctest::Approx(4 * x * x * x - 3 * x));
    CHECK(cheb_t_real(2, x) == doctest::Approx(2 * x * x - 1));
  }
}

TEST_CASE("negative orders") {
  CHECK(cheb_u_real(-1, 0.3) == 0.0);
  CHECK(cheb_u_real(-2, 0.3) == doctest::Approx(-1.0));
  CHECK(cheb_u_real(-3, 0.3) == doctest::Approx(-0.6));
  CHECK(cheb_t_real(-4, 0.3) == doctest::Approx(cheb_t_real(4, 0.3)));
}

TEST_CASE("endpoints use the limits U_n(1) = n+1, U_n(-1) = (-1)^n (n+1)") {
  for (int n = 0; n <= 30; ++n) {
    CHECK(cheb_u_real(n, 1.0) == doctest::Approx(n + 1));
    CHECK(cheb_u_real(n, -1.0) == doctest::Approx((n % 2 ? -1 : 1) * (n + 1)));
  }
}

TEST_CASE("closed forms agree with a long-double recurrence") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pick(-2.0, 2.0);
  double worst = 0.0;
  for (int s = 0; s < 300; ++s) {
    const complex x = s % 3 == 0 ? complex(pick(rng), pick(rng)) : complex(pick(rng) / 2.0, 0.0);
    const std::complex<long double> xl(x.real(), x.imag());
    for (int n = 0; n <= 40; n += 3) {
      worst = std::max(worst, rel_gap(cheb_u(n, x), ref_u(n, xl)));
      worst = std::max(worst, rel_gap(cheb_t(n, x), ref_t(n, xl)));
      worst = std::max(worst, rel_gap(cheb_u_recurrence(n, x), ref_u(n, xl)));
    }
  }
  // exterior values grow like |z|^n, so compare relative to magnitude
  CHECK(worst < 1e-9);
}

TEST_CASE("U_n - U_{n-2} = 2 T_n") {
  for (int n = 2; n < 50; n += 7)
    for (double x : {-0.77, 0.1, 0.93}) CHECK(cheb_u_real(n, x) - cheb_u_real(n - 2, x) == doctest::Approx(2 * cheb_t_real(n, x)));
}

TEST_CASE("variant polynomials follow their recurrence and V_n(ix) = i^n U_n(x)") {
  for (double x : {-0.6, 0.05, 0.9}) {
    const complex y(0.0, x);
    CHECK(std::abs(cheb_v(0, y) - 1.0) < 1e-15);
    CHECK(std::abs(cheb_v(1, y) - 2.0 * y) < 1e-15);
    complex ipow = 1.0;
    for (int n = 0; n <= 40; ++n) {
      if (n >= 1) CHECK(std::abs(cheb_v(n + 1, y) - 2.0 * y * cheb_v(n, y) - cheb_v(n - 1, y)) < 1e-11);
      CHECK(std::abs(cheb_v(n, y) - ipow * cheb_u_real(n, x)) < 1e-11);
      CHECK(std::abs(cheb_v_recurrence(n, y) - cheb_v(n, y)) < 1e-11);
      ipow *= complex(0.0, 1.0);
    }
  }
  CHECK_THROWS_AS(cheb_v(-1, complex(0.0, 0.5)), qwalk::InvalidInput);
}

TEST_CASE("identity battery") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pick(0, 64);
  std::uniform_real_distribution<double> pick_x(-0.999, 0.999);
  for (const char* tag : {"a6", "a7", "a8", "a9", "a10", "a11", "a12", "a13", "a14"}) {
    double worst = 0.0;
    for (int s = 0; s < 200; ++s) worst = std::max(worst, identity_residual(tag, pick(rng), pick(rng), pick_x(rng)));
    INFO(tag);
    CHECK(worst < 1e-10);
  }
  CHECK(identity_name(Identity::A10) == "a10");
  CHECK(parse_identity("a13") == Identity::A13);
  CHECK_FALSE(parse_identity("a15").has_value());
}

TEST_CASE("identity residual preconditions") {
  CHECK_THROWS_AS(identity_residual("a99", 1, 1, 0.1), qwalk::InvalidInput);
  CHECK_THROWS_AS(identity_residual(Identity::A6, 65, 1, 0.1), qwalk::InvalidInput);
  CHECK_THROWS_AS(identity_residual(Identity::A6, 3, -1, 0.1), qwalk::InvalidInput);
  CHECK_THROWS_AS(identity_residual(Identity::A6, 3, 2, 1.0), qwalk::InvalidInput);
}

TEST_CASE("regime classification") {
  CHECK(PolyArgument(0.5).regime() == Regime::Interior);
  CHECK(PolyArgument(1.0).regime() == Regime::Interior);
  CHECK(PolyArgument(1.5).regime() == Regime::Exterior);
  CHECK(PolyArgument(complex(0.1, 0.1)).regime() == Regime::Exterior);
}
