#pragma once

// Inner-loop kernels for time stepping and probability accumulation.
//
// Every kernel has a scalar reference implementation. On x86-64 an AVX2+FMA
// variant is compiled separately and chosen at runtime when the CPU supports
// it. The variants agree to rounding; tests/test_kernels.cpp pins the bounds.
//
// Set QWALK_KERNEL=scalar (or avx2) in the environment to override the
// automatic choice made by active_kernels().

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qwalk::simd {

using complex = std::complex<double>;

/// Row-compressed operator with at most two non-zeros per row:
///   out[r] = w0[r] * in[col0[r]] + w1[r] * in[col1[r]]
/// Rows with a single entry carry w1 = 0 and col1 = col0.
struct TwoTermRows {
  std::vector<std::uint32_t> col0;
  std::vector<std::uint32_t> col1;
  std::vector<complex> w0;
  std::vector<complex> w1;

  std::size_t size() const { return col0.size(); }
};

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  /// out = rows * in; `out` must not alias `in`.
  void (*apply_two_term)(const TwoTermRows& rows, std::span<const complex> in,
                         std::span<complex> out);

  /// out = m * in for a row-major dim x dim matrix.
  void (*apply_dense)(std::span<const complex> m, std::span<const complex> in,
                      std::span<complex> out);

  /// Compensated running sum: (hi, lo) += |amps|^2 elementwise.
  void (*accumulate_abs2)(std::span<const complex> amps, std::span<double> hi,
                          std::span<double> lo);

  /// sum |amps|^2
  double (*norm_sq)(std::span<const complex> amps);
};

bool isa_supported(Isa isa);

/// Kernel table for `isa`; throws InvalidInput when the ISA was not compiled in
/// or the CPU lacks it.
const KernelTable& kernel_table(Isa isa);

Isa best_supported_isa();

/// The table used by default: QWALK_KERNEL override, else best supported.
const KernelTable& active_kernels();

namespace detail {
extern const KernelTable kScalarTable;
#if defined(QWALK_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
}  // namespace detail

}  // namespace qwalk::simd
