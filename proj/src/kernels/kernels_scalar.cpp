#include <cmath>

#include "qwalk/kernels.hpp"

namespace qwalk::simd {
namespace {

// Plain component arithmetic: avoids the NaN-recovery path of operator* for
// std::complex and keeps the reference easy to read against the AVX2 code.
inline void cmul_add(const complex& w, const complex& v, double& re, double& im) {
  re += w.real() * v.real() - w.imag() * v.imag();
  im += w.real() * v.imag() + w.imag() * v.real();
}

void apply_two_term(const TwoTermRows& rows, std::span<const complex> in, std::span<complex> out) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    double re = 0.0, im = 0.0;
    cmul_add(rows.w0[r], in[rows.col0[r]], re, im);
    cmul_add(rows.w1[r], in[rows.col1[r]], re, im);
    out[r] = {re, im};
  }
}

void apply_dense(std::span<const complex> m, std::span<const complex> in, std::span<complex> out) {
  const std::size_t dim = in.size();
  for (std::size_t r = 0; r < dim; ++r) {
    double re = 0.0, im = 0.0;
    const complex* row = m.data() + r * dim;
    for (std::size_t c = 0; c < dim; ++c) cmul_add(row[c], in[c], re, im);
    out[r] = {re, im};
  }
}

void accumulate_abs2(std::span<const complex> amps, std::span<double> hi, std::span<double> lo) {
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const double p = amps[k].real() * amps[k].real() + amps[k].imag() * amps[k].imag();
    const double t = hi[k] + p;
    const double big = std::fmax(hi[k], p);
    const double small = std::fmin(hi[k], p);
    lo[k] += (big - t) + small;
    hi[k] = t;
  }
}

double norm_sq(std::span<const complex> amps) {
  double sum = 0.0;
  for (const auto& c : amps) sum += c.real() * c.real() + c.imag() * c.imag();
  return sum;
}

}  // namespace

namespace detail {
extern const KernelTable kScalarTable;
const KernelTable kScalarTable{Isa::Scalar, &apply_two_term, &apply_dense, &accumulate_abs2,
                               &norm_sq};
}  // namespace detail

}  // namespace qwalk::simd
