// AVX2 + FMA variants. Compiled with -mavx2 -mfma -ffp-contract=off and only
// reached through kernel_table() after a CPU feature check.

#include <immintrin.h>

#include "qwalk/kernels.hpp"

namespace qwalk::simd {
namespace {

// Two packed complex doubles per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swapped = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swapped, b_im));
}

inline __m256d load2(const complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

inline __m256d gather2(const complex* base, std::uint32_t i0, std::uint32_t i1) {
  const __m128d lo = _mm_loadu_pd(reinterpret_cast<const double*>(base + i0));
  const __m128d hi = _mm_loadu_pd(reinterpret_cast<const double*>(base + i1));
  return _mm256_set_m128d(hi, lo);
}

inline void store2(complex* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline __m128d cmul1(__m128d a, __m128d b) {
  const __m128d b_re = _mm_movedup_pd(b);
  const __m128d b_im = _mm_permute_pd(b, 0x3);
  const __m128d a_swapped = _mm_permute_pd(a, 0x1);
  return _mm_fmaddsub_pd(a, b_re, _mm_mul_pd(a_swapped, b_im));
}

inline __m128d load1(const complex* p) { return _mm_loadu_pd(reinterpret_cast<const double*>(p)); }

void apply_two_term(const TwoTermRows& rows, std::span<const complex> in, std::span<complex> out) {
  const std::size_t n = rows.size();
  const complex* src = in.data();
  std::size_t r = 0;
  for (; r + 2 <= n; r += 2) {
    const __m256d t0 = cmul(load2(&rows.w0[r]), gather2(src, rows.col0[r], rows.col0[r + 1]));
    const __m256d t1 = cmul(load2(&rows.w1[r]), gather2(src, rows.col1[r], rows.col1[r + 1]));
    store2(&out[r], _mm256_add_pd(t0, t1));
  }
  for (; r < n; ++r) {
    const __m128d t0 = cmul1(load1(&rows.w0[r]), load1(src + rows.col0[r]));
    const __m128d t1 = cmul1(load1(&rows.w1[r]), load1(src + rows.col1[r]));
    _mm_storeu_pd(reinterpret_cast<double*>(&out[r]), _mm_add_pd(t0, t1));
  }
}

void apply_dense(std::span<const complex> m, std::span<const complex> in, std::span<complex> out) {
  const std::size_t dim = in.size();
  for (std::size_t r = 0; r < dim; ++r) {
    const complex* row = m.data() + r * dim;
    __m256d acc = _mm256_setzero_pd();
    std::size_t c = 0;
    for (; c + 2 <= dim; c += 2) acc = _mm256_add_pd(acc, cmul(load2(row + c), load2(in.data() + c)));
    __m128d sum = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    for (; c < dim; ++c) sum = _mm_add_pd(sum, cmul1(load1(row + c), load1(in.data() + c)));
    _mm_storeu_pd(reinterpret_cast<double*>(&out[r]), sum);
  }
}

void accumulate_abs2(std::span<const complex> amps, std::span<double> hi, std::span<double> lo) {
  const std::size_t n = amps.size();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d a0 = load2(&amps[k]);
    const __m256d a1 = load2(&amps[k + 2]);
    // hadd yields [p0, p2, p1, p3]; restore order.
    const __m256d p = _mm256_permute4x64_pd(
        _mm256_hadd_pd(_mm256_mul_pd(a0, a0), _mm256_mul_pd(a1, a1)), 0xD8);
    const __m256d h = _mm256_loadu_pd(&hi[k]);
    const __m256d t = _mm256_add_pd(h, p);
    const __m256d big = _mm256_max_pd(h, p);
    const __m256d small = _mm256_min_pd(h, p);
    const __m256d l = _mm256_add_pd(_mm256_loadu_pd(&lo[k]),
                                    _mm256_add_pd(_mm256_sub_pd(big, t), small));
    _mm256_storeu_pd(&hi[k], t);
    _mm256_storeu_pd(&lo[k], l);
  }
  for (; k < n; ++k) {
    const double p = amps[k].real() * amps[k].real() + amps[k].imag() * amps[k].imag();
    const double t = hi[k] + p;
    const double big = hi[k] > p ? hi[k] : p;
    const double small = hi[k] > p ? p : hi[k];
    lo[k] += (big - t) + small;
    hi[k] = t;
  }
}

double norm_sq(std::span<const complex> amps) {
  const std::size_t n = amps.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d a = load2(&amps[k]);
    acc = _mm256_fmadd_pd(a, a, acc);
  }
  __m128d s = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
  double sum = _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
  for (; k < n; ++k) sum += amps[k].real() * amps[k].real() + amps[k].imag() * amps[k].imag();
  return sum;
}

}  // namespace

namespace detail {
extern const KernelTable kAvx2Table;
const KernelTable kAvx2Table{Isa::Avx2, &apply_two_term, &apply_dense, &accumulate_abs2, &norm_sq};
}  // namespace detail

}  // namespace qwalk::simd
