#include "lexp/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cassert>
#include <cstddef>

#define LEXP_AVX2 __attribute__((target("avx2")))

namespace lexp::kernels {

// Products and sums are kept as separate mul/add (no FMA) so that the
// elementwise kernels round exactly like the scalar reference. Only dot
// reassociates its sum.

LEXP_AVX2 double dot_avx2(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  const double* pa = a.data();
  const double* pb = b.data();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
    acc1 = _mm256_add_pd(acc1,
                         _mm256_mul_pd(_mm256_loadu_pd(pa + i + 4), _mm256_loadu_pd(pb + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  const __m128d lo = _mm256_castpd256_pd128(acc0);
  const __m128d hi = _mm256_extractf128_pd(acc0, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  double sum = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
  for (; i < n; ++i) sum += pa[i] * pb[i];
  return sum;
}

LEXP_AVX2 void axpy_avx2(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const double* px = x.data();
  double* py = y.data();
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(px + i));
    _mm256_storeu_pd(py + i, _mm256_add_pd(_mm256_loadu_pd(py + i), prod));
  }
  for (; i < n; ++i) py[i] += alpha * px[i];
}

LEXP_AVX2 void scale_avx2(double alpha, std::span<double> y) {
  const std::size_t n = y.size();
  double* py = y.data();
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(py + i, _mm256_mul_pd(_mm256_loadu_pd(py + i), va));
  for (; i < n; ++i) py[i] *= alpha;
}

LEXP_AVX2 void leaky_relu_avx2(double slope, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const double* px = x.data();
  double* py = y.data();
  const __m256d vs = _mm256_set1_pd(slope);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(px + i);
    const __m256d positive = _mm256_cmp_pd(v, zero, _CMP_GT_OQ);
    _mm256_storeu_pd(py + i, _mm256_blendv_pd(_mm256_mul_pd(v, vs), v, positive));
  }
  for (; i < n; ++i) py[i] = px[i] > 0.0 ? px[i] : slope * px[i];
}

}  // namespace lexp::kernels

#endif
