// NEON (AArch64) variants of the histogram kernels, 2 doubles per lane.

#ifdef DMST_KERNELS_HAVE_NEON

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

namespace dmst::kernels::neon {

double sum(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vaddq_f64(acc, vld1q_f64(a + i));
    }
    double total = vaddvq_f64(acc);
    for (; i < n; ++i) {
        total += a[i];
    }
    return total;
}

double dotSqrtSum(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t prod = vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vaddq_f64(acc, vsqrtq_f64(prod));
    }
    double total = vaddvq_f64(acc);
    for (; i < n; ++i) {
        total += std::sqrt(a[i] * b[i]);
    }
    return total;
}

double squaredDistance(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vfmaq_f64(acc, d, d);
    }
    double total = vaddvq_f64(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        total += d * d;
    }
    return total;
}

void multiply(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    for (; i < n; ++i) {
        dst[i] = a[i] * b[i];
    }
}

void scaleInPlace(double* a, double s, std::size_t n) {
    const float64x2_t factor = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(a + i, vmulq_f64(vld1q_f64(a + i), factor));
    }
    for (; i < n; ++i) {
        a[i] *= s;
    }
}

void sqrtRatio(double* dst, const double* a, const double* b, std::size_t n) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    const float64x2_t one = vdupq_n_f64(1.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vb = vld1q_f64(b + i);
        const uint64x2_t mask = vcgtq_f64(vb, zero);
        const float64x2_t safeB = vbslq_f64(mask, vb, one);
        const float64x2_t root = vsqrtq_f64(vdivq_f64(vld1q_f64(a + i), safeB));
        vst1q_f64(dst + i,
                  vreinterpretq_f64_u64(vandq_u64(vreinterpretq_u64_f64(root), mask)));
    }
    for (; i < n; ++i) {
        dst[i] = b[i] > 0.0 ? std::sqrt(a[i] / b[i]) : 0.0;
    }
}

} // namespace dmst::kernels::neon

#endif // DMST_KERNELS_HAVE_NEON
