#pragma once

// Numerical checks of the determinant simplifications behind the moving-shift
// root equation and the swapping-shift eigenvalue equation.
//
// A DeterminantSample pairs a Chebyshev argument x with an eigenvalue
// candidate u related through the mapping of the respective walk:
//   moving:   u^2 = 2 i a x u + 1
//   swapping: u^2 = 2 b x u - 1
// Samples are built from x by solving the quadratic for u, so the mapping
// holds by construction; hand-built samples are checked on entry.

#include <array>
#include <cstdint>
#include <vector>

#include "qwalk/hilbert.hpp"

namespace qwalk {

enum class MappingKind { Moving, Swapping };

struct DeterminantSample {
  MappingKind kind;
  double x;
  complex u;
  CoinParams coin;
  int n_sites;
};

/// Validates the mapping relation to 1e-12 (scaled by max(1, |u|^2)).
DeterminantSample make_sample(MappingKind kind, double x, complex u, int n_sites, const CoinParams& coin);
DeterminantSample moving_sample(double x, bool plus_branch, int n_sites, const CoinParams& coin);
DeterminantSample swapping_sample(double x, bool plus_branch, int n_sites, const CoinParams& coin);

/// `count` samples with N uniform in [n_min, n_max], x uniform in (-1, 1) and
/// a random branch. Deterministic for a given seed.
std::vector<DeterminantSample> random_samples(MappingKind kind, std::size_t count, std::uint64_t seed,
                                              int n_min, int n_max, const CoinParams& coin);

double mapping_residual(const DeterminantSample& sample);

/// c1..c4 of the two moving-shift boundary equations, from their defining
/// products (c3, c4 through the variant polynomials V_n(ix)).
std::array<complex, 4> appendix_c_coefficients(const DeterminantSample& sample);

/// The same coefficients after reducing u^2 with the mapping relation.
std::array<complex, 4> appendix_c_coefficients_reduced(const DeterminantSample& sample);

/// max_k |c_k - reduced c_k|.
double appendix_c_reduction_residual(const DeterminantSample& sample);

/// c1 c4 - c2 c3.
complex appendix_c_determinant(const DeterminantSample& sample);

/// Factored form
///   i^{N-5} 2ab(1-b) [2axi + u(1 - 4a^2x^2)]
///     { (8bx^4+8x^4-4bx^2-8x^2+1) U_{N-5} - x(4bx^2+4x^2-b-3) U_{N-6} }.
complex appendix_c_factored(const DeterminantSample& sample);

/// |c1 c4 - c2 c3 - factored|. The factored form carries the sign of
/// c1 c4 - c2 c3; against c2 c3 - c1 c4 it is off by an overall -1.
double appendix_c_residual(const DeterminantSample& sample);

/// |c2 c3 - c1 c4 - factored|, kept to document the sign.
double appendix_c_residual_opposite_sign(const DeterminantSample& sample);

/// Residuals of the polynomial splits into U_4, U_2 and U_3, U_1 and of the
/// recombination U_4 U_{N-5} - U_3 U_{N-6} = U_{N-1},
/// U_2 U_{N-5} - U_1 U_{N-6} = U_{N-3}. Requires N >= 6.
struct SplitResiduals {
  double quartic;
  double cubic;
  double recombination;
  double max() const;
};
SplitResiduals appendix_c_split_residuals(double x, double b, int n_sites);

/// bu[(a+u^2)U_{N-4} - buU_{N-5}] - (1-au^2)[(a+u^2)U_{N-3} - buU_{N-4}].
complex appendix_d_lhs(const DeterminantSample& sample);

/// abu(u^2-1)U_{N-2}(x).
complex appendix_d_rhs(const DeterminantSample& sample);

/// |lhs - rhs|.
double appendix_d_residual(const DeterminantSample& sample);

}  // namespace qwalk
