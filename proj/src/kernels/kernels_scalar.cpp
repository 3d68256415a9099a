#include <cmath>
#include <cstddef>

#include "dmst/kernels.hpp"

namespace dmst::kernels::scalar {

double sum(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i];
    }
    return acc;
}

double dotSqrtSum(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::sqrt(a[i] * b[i]);
    }
    return acc;
}

double squaredDistance(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void multiply(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = a[i] * b[i];
    }
}

void scaleInPlace(double* a, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        a[i] *= s;
    }
}

void sqrtRatio(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = b[i] > 0.0 ? std::sqrt(a[i] / b[i]) : 0.0;
    }
}

} // namespace dmst::kernels::scalar
