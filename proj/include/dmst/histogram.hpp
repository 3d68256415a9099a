#pragma once

#include <utility>
#include <vector>

#include "dmst/image.hpp"

namespace dmst {

enum class KernelKind {
    Epanechnikov,
    Uniform,
};

// Radially non-increasing profile k over the squared normalized distance.
// Support ends at 1: pixels beyond the inscribed ellipse get zero weight.
struct KernelProfile {
    KernelKind kind = KernelKind::Epanechnikov;

    double profile(double x) const {
        if (x > 1.0) {
            return 0.0;
        }
        return kind == KernelKind::Epanechnikov ? 1.0 - x : 1.0;
    }
};

enum class HistogramRole {
    Target,     // q
    Candidate,  // p(y)
    Background, // o
    CbwhTarget, // q'
};

// Normalized m-bin color PDF. Entries are non-negative and sum to 1
// within 1e-9; every transform renormalizes.
class WeightedHistogram {
public:
    WeightedHistogram() = default;

    // Normalizes `weights`; throws ZeroMassError when they sum to zero.
    static WeightedHistogram fromWeights(std::vector<double> weights, HistogramRole role);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t u) const { return weights_[u]; }
    const std::vector<double>& weights() const { return weights_; }
    const double* data() const { return weights_.data(); }
    HistogramRole role() const { return role_; }

    double sum() const;

    bool operator==(const WeightedHistogram&) const = default;

private:
    std::vector<double> weights_;
    HistogramRole role_ = HistogramRole::Target;
};

// Per-bin attenuation v_u = min(o*/o_u, 1) derived from the background
// histogram; bins absent from the background keep v_u = 1.
struct TransferFunction {
    std::vector<double> v;

    std::size_t size() const { return v.size(); }
    bool isIdentity() const;
};

// Kernel-weighted color PDF of the window content, offsets measured from
// the window center and normalized by the per-axis bandwidth.
// Throws EmptyWindowError (no pixels) or DegenerateKernelError (all pixels
// outside the kernel support).
WeightedHistogram buildTargetModel(const FrameImage& frame, const Window& w,
                                   const ColorQuantizer& q, const KernelProfile& kernel);

// Same construction evaluated at a candidate center; tagged Candidate.
WeightedHistogram buildCandidateModel(const FrameImage& frame, const Window& w,
                                      const ColorQuantizer& q, const KernelProfile& kernel);

// Bhattacharyya coefficient rho = sum(sqrt(p_u * q_u)) in [0, 1].
double bhattacharyya(const WeightedHistogram& p, const WeightedHistogram& q);

// d = sqrt(1 - rho).
double bhattDistance(const WeightedHistogram& p, const WeightedHistogram& q);

// Unweighted normalized histogram of the ring around the target: the window
// enlarged by `ringScale` per axis, minus the window itself.
WeightedHistogram buildBackgroundHistogram(const FrameImage& frame, const Window& target,
                                           const ColorQuantizer& q, double ringScale = 2.0);

TransferFunction computeTransfer(const WeightedHistogram& background);

// CBWH target model: raw kernel-weighted bin masses attenuated by v, then
// renormalized.
WeightedHistogram buildCbwhTargetModel(const FrameImage& frame, const Window& w,
                                       const ColorQuantizer& q, const KernelProfile& kernel,
                                       const TransferFunction& v);

// Plain BWH: both models attenuated by v and renormalized. Kept to exercise
// the equivalence result that this cannot change the mean-shift iterates.
std::pair<WeightedHistogram, WeightedHistogram>
applyBwhWeighting(const WeightedHistogram& target, const WeightedHistogram& candidate,
                  const TransferFunction& v);

} // namespace dmst
