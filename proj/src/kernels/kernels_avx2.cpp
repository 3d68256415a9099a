// AVX2 variants of the histogram kernels, 4 doubles per lane. This TU is
// compiled with -mavx2 -mfma on x86 builds only; callers must check
// kernels::available(Impl::Avx2) before dispatching here.

#ifdef DMST_KERNELS_HAVE_AVX2

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace dmst::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

} // namespace

double sum(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        total += a[i];
    }
    return total;
}

double dotSqrtSum(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_sqrt_pd(prod));
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        total += std::sqrt(a[i] * b[i]);
    }
    return total;
}

double squaredDistance(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        total += d * d;
    }
    return total;
}

void multiply(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) {
        dst[i] = a[i] * b[i];
    }
}

void scaleInPlace(double* a, double s, std::size_t n) {
    const __m256d factor = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(a + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), factor));
    }
    for (; i < n; ++i) {
        a[i] *= s;
    }
}

void sqrtRatio(double* dst, const double* a, const double* b, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vb = _mm256_loadu_pd(b + i);
        const __m256d mask = _mm256_cmp_pd(vb, zero, _CMP_GT_OQ);
        // Divide against 1 in the masked-off lanes to avoid spurious FP faults.
        const __m256d safeB = _mm256_blendv_pd(_mm256_set1_pd(1.0), vb, mask);
        const __m256d ratio = _mm256_div_pd(_mm256_loadu_pd(a + i), safeB);
        _mm256_storeu_pd(dst + i, _mm256_and_pd(_mm256_sqrt_pd(ratio), mask));
    }
    for (; i < n; ++i) {
        dst[i] = b[i] > 0.0 ? std::sqrt(a[i] / b[i]) : 0.0;
    }
}

} // namespace dmst::kernels::avx2

#endif // DMST_KERNELS_HAVE_AVX2
