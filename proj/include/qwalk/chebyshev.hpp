#pragma once

// Chebyshev polynomials of the first and second kind, the "variant" family
// V_n(y) = i^n U_n(-iy), and a residual battery for the standard identities.
//
// Real arguments in [-1, 1] are evaluated through the trigonometric form;
// everything else goes through the closed form in z = x - sqrt(x^2 - 1).
// The plain three-term recurrences are exposed as an independent path.

#include <complex>
#include <optional>
#include <string_view>

namespace qwalk::cheb {

using complex = std::complex<double>;

enum class Regime { Interior, Exterior };

class PolyArgument {
 public:
  PolyArgument(double x) : value_(x, 0.0) {}  // NOLINT(google-explicit-constructor)
  PolyArgument(complex x) : value_(x) {}      // NOLINT(google-explicit-constructor)

  complex value() const { return value_; }
  Regime regime() const {
    return (value_.imag() == 0.0 && std::abs(value_.real()) <= 1.0) ? Regime::Interior
                                                                    : Regime::Exterior;
  }

 private:
  complex value_;
};

/// T_n(x). Negative n uses T_{-n} = T_n.
complex cheb_t(int n, PolyArgument x);

/// U_n(x) for every integer n: U_{-1} = 0 and U_{-n-1} = -U_{n-1}.
complex cheb_u(int n, PolyArgument x);

/// V_n(y) = i^n U_n(y / i), n >= 0.
complex cheb_v(int n, complex y);

double cheb_t_real(int n, double x);
double cheb_u_real(int n, double x);

// Three-term recurrence evaluation, used to cross-check the closed forms.
complex cheb_t_recurrence(int n, complex x);
complex cheb_u_recurrence(int n, complex x);
complex cheb_v_recurrence(int n, complex y);

enum class Identity { A6, A7, A8, A9, A10, A11, A12, A13, A14 };

std::optional<Identity> parse_identity(std::string_view tag);
std::string_view identity_name(Identity id);

/// |LHS - RHS| of the named identity at (n, m, x). Identities with several
/// equalities report the largest residual. Requires 0 <= n, m <= 64 and
/// x in (-1, 1).
double identity_residual(Identity id, int n, int m, double x);

/// Same, keyed by tag ("a6" .. "a14"); unknown tags throw InvalidInput.
double identity_residual(std::string_view tag, int n, int m, double x);

}  // namespace qwalk::cheb
