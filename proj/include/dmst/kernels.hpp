#pragma once

#include <cstddef>
#include <string>

namespace dmst::kernels {

// The histogram arithmetic the trackers spend their time in: reductions and
// elementwise transforms over m-bin weight vectors. Each operation has a
// scalar reference implementation and, where the ISA allows, a SIMD variant;
// the active table is picked once at runtime from CPU capabilities. SIMD
// variants reassociate the reductions, so results may differ from the scalar
// reference in the last ulps — the equivalence tests bound that difference.

enum class Impl {
    Scalar,
    Avx2,
    Neon,
};

struct Ops {
    // sum(a)
    double (*sum)(const double* a, std::size_t n);
    // sum(sqrt(a[i] * b[i]))  -- the Bhattacharyya reduction
    double (*dotSqrtSum)(const double* a, const double* b, std::size_t n);
    // sum((a[i] - b[i])^2)
    double (*squaredDistance)(const double* a, const double* b, std::size_t n);
    // dst[i] = a[i] * b[i]
    void (*multiply)(double* dst, const double* a, const double* b, std::size_t n);
    // a[i] *= s
    void (*scaleInPlace)(double* a, double s, std::size_t n);
    // dst[i] = b[i] > 0 ? sqrt(a[i] / b[i]) : 0  -- the mean-shift weight table
    void (*sqrtRatio)(double* dst, const double* a, const double* b, std::size_t n);
};

// Scalar reference kernels; always available, semantics authoritative.
namespace scalar {
double sum(const double* a, std::size_t n);
double dotSqrtSum(const double* a, const double* b, std::size_t n);
double squaredDistance(const double* a, const double* b, std::size_t n);
void multiply(double* dst, const double* a, const double* b, std::size_t n);
void scaleInPlace(double* a, double s, std::size_t n);
void sqrtRatio(double* dst, const double* a, const double* b, std::size_t n);
} // namespace scalar

bool available(Impl impl);

// Active table. First call picks the widest available implementation unless
// the DMST_KERNEL_IMPL environment variable (scalar|avx2|neon) says otherwise.
const Ops& ops();
Impl activeImpl();
const char* implName(Impl impl);

// Force an implementation; returns false (and leaves the table unchanged)
// when it is not available on this machine.
bool setImpl(Impl impl);

// Table for a specific implementation, for side-by-side testing.
const Ops& opsFor(Impl impl);

} // namespace dmst::kernels
