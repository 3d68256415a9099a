#pragma once

#include <vector>

#include "dmst/histogram.hpp"
#include "dmst/image.hpp"

namespace dmst {

struct LocalizationConfig {
    double minDist = 0.5; // exit threshold on the step length, pixels
    int maxIterations = 20;
};

struct LocalizationResult {
    Window finalWindow;
    int iterations = 0;
    // Per-iteration step lengths in pixels; same length as `iterations`.
    std::vector<double> displacements;
    // Centers after each iteration, for iterate-level comparisons.
    std::vector<Point2d> trajectory;
    // Bhattacharyya coefficient of the candidate at the final center
    // against the target model.
    double finalRho = 0.0;
};

// One mean-shift iterate: the centroid of window pixels weighted by
// w_i = sqrt(q_u / p_u(y0)) of the pixel's bin. Bins absent from the
// candidate contribute zero. Throws TargetLostError when the total
// weight vanishes.
// When `bwh` is set, both models are attenuated by it and renormalized
// before the weights are formed (the provably ineffective BWH variant).
Point2d meanShiftStep(const FrameImage& frame, const Window& w,
                      const WeightedHistogram& target, const ColorQuantizer& q,
                      const KernelProfile& kernel, const TransferFunction* bwh = nullptr);

// Iterates meanShiftStep from the start window until the step length falls
// below cfg.minDist or cfg.maxIterations is reached. Centers are clamped to
// the frame. Extents never change here.
LocalizationResult localize(const FrameImage& frame, const Window& start,
                            const WeightedHistogram& target, const ColorQuantizer& q,
                            const KernelProfile& kernel, const LocalizationConfig& cfg,
                            const TransferFunction* bwh = nullptr);

} // namespace dmst
