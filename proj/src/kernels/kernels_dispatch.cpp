#include "dmst/kernels.hpp"

#include <cstdlib>
#include <string>

namespace dmst::kernels {

#ifdef DMST_KERNELS_HAVE_AVX2
namespace avx2 {
double sum(const double*, std::size_t);
double dotSqrtSum(const double*, const double*, std::size_t);
double squaredDistance(const double*, const double*, std::size_t);
void multiply(double*, const double*, const double*, std::size_t);
void scaleInPlace(double*, double, std::size_t);
void sqrtRatio(double*, const double*, const double*, std::size_t);
} // namespace avx2
#endif

#ifdef DMST_KERNELS_HAVE_NEON
namespace neon {
double sum(const double*, std::size_t);
double dotSqrtSum(const double*, const double*, std::size_t);
double squaredDistance(const double*, const double*, std::size_t);
void multiply(double*, const double*, const double*, std::size_t);
void scaleInPlace(double*, double, std::size_t);
void sqrtRatio(double*, const double*, const double*, std::size_t);
} // namespace neon
#endif

namespace {

constexpr Ops kScalarOps{
    &scalar::sum,       &scalar::dotSqrtSum,   &scalar::squaredDistance,
    &scalar::multiply,  &scalar::scaleInPlace, &scalar::sqrtRatio,
};

#ifdef DMST_KERNELS_HAVE_AVX2
constexpr Ops kAvx2Ops{
    &avx2::sum,      &avx2::dotSqrtSum,   &avx2::squaredDistance,
    &avx2::multiply, &avx2::scaleInPlace, &avx2::sqrtRatio,
};
#endif

#ifdef DMST_KERNELS_HAVE_NEON
constexpr Ops kNeonOps{
    &neon::sum,      &neon::dotSqrtSum,   &neon::squaredDistance,
    &neon::multiply, &neon::scaleInPlace, &neon::sqrtRatio,
};
#endif

Impl pickDefault() {
    if (const char* env = std::getenv("DMST_KERNEL_IMPL")) {
        const std::string want(env);
        if (want == "scalar") return Impl::Scalar;
        if (want == "avx2" && available(Impl::Avx2)) return Impl::Avx2;
        if (want == "neon" && available(Impl::Neon)) return Impl::Neon;
        return Impl::Scalar;
    }
    if (available(Impl::Avx2)) return Impl::Avx2;
    if (available(Impl::Neon)) return Impl::Neon;
    return Impl::Scalar;
}

Impl& activeImplSlot() {
    static Impl impl = pickDefault();
    return impl;
}

} // namespace

bool available(Impl impl) {
    switch (impl) {
    case Impl::Scalar:
        return true;
    case Impl::Avx2:
#ifdef DMST_KERNELS_HAVE_AVX2
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Impl::Neon:
#ifdef DMST_KERNELS_HAVE_NEON
        return true; // NEON is baseline on AArch64
#else
        return false;
#endif
    }
    return false;
}

const Ops& opsFor(Impl impl) {
    switch (impl) {
    case Impl::Scalar:
        return kScalarOps;
    case Impl::Avx2:
#ifdef DMST_KERNELS_HAVE_AVX2
        return kAvx2Ops;
#else
        break;
#endif
    case Impl::Neon:
#ifdef DMST_KERNELS_HAVE_NEON
        return kNeonOps;
#else
        break;
#endif
    }
    return kScalarOps;
}

const Ops& ops() {
    return opsFor(activeImplSlot());
}

Impl activeImpl() {
    return activeImplSlot();
}

bool setImpl(Impl impl) {
    if (!available(impl)) {
        return false;
    }
    activeImplSlot() = impl;
    return true;
}

const char* implName(Impl impl) {
    switch (impl) {
    case Impl::Scalar:
        return "scalar";
    case Impl::Avx2:
        return "avx2";
    case Impl::Neon:
        return "neon";
    }
    return "unknown";
}

} // namespace dmst::kernels
