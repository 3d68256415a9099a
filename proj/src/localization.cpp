#include "dmst/localization.hpp"

#include <algorithm>
#include <cmath>

#include "dmst/kernels.hpp"

namespace dmst {

namespace {

// Per-bin weight table sqrt(q_u / p_u), zero where the candidate is empty.
std::vector<double> weightTable(const WeightedHistogram& target,
                                const WeightedHistogram& candidate) {
    std::vector<double> table(target.size());
    kernels::ops().sqrtRatio(table.data(), target.data(), candidate.data(), table.size());
    return table;
}

} // namespace

Point2d meanShiftStep(const FrameImage& frame, const Window& w,
                      const WeightedHistogram& target, const ColorQuantizer& q,
                      const KernelProfile& kernel, const TransferFunction* bwh) {
    WeightedHistogram candidate = buildCandidateModel(frame, w, q, kernel);
    std::vector<double> table;
    if (bwh != nullptr) {
        auto [wq, wp] = applyBwhWeighting(target, candidate, *bwh);
        table = weightTable(wq, wp);
    } else {
        table = weightTable(target, candidate);
    }

    // The Epanechnikov profile has constant negative derivative over its
    // support, so the iterate is the plain weighted centroid of the pixels
    // inside the inscribed ellipse.
    const PixelBounds b = clipWindow(frame, w);
    double sumW = 0.0;
    double sumX = 0.0;
    double sumY = 0.0;
    for (int y = b.y0; y <= b.y1; ++y) {
        for (int x = b.x0; x <= b.x1; ++x) {
            if (normalizedOffset(x, y, w) > 1.0) {
                continue;
            }
            const double wi = table[static_cast<std::size_t>(q.bin(frame.at(x, y)))];
            if (wi <= 0.0) {
                continue;
            }
            sumW += wi;
            sumX += wi * x;
            sumY += wi * y;
        }
    }
    if (sumW <= 0.0) {
        throw TargetLostError("no candidate pixel shares a bin with the target model");
    }
    return Point2d{sumX / sumW, sumY / sumW};
}

LocalizationResult localize(const FrameImage& frame, const Window& start,
                            const WeightedHistogram& target, const ColorQuantizer& q,
                            const KernelProfile& kernel, const LocalizationConfig& cfg,
                            const TransferFunction* bwh) {
    LocalizationResult res;
    Window w = start;
    for (int i = 0; i < cfg.maxIterations; ++i) {
        Point2d next = meanShiftStep(frame, w, target, q, kernel, bwh);
        next.x = std::clamp(next.x, 0.0, static_cast<double>(frame.width() - 1));
        next.y = std::clamp(next.y, 0.0, static_cast<double>(frame.height() - 1));
        const double step = std::hypot(next.x - w.cx, next.y - w.cy);
        w = w.withCenter(next.x, next.y);
        res.displacements.push_back(step);
        res.trajectory.push_back(next);
        if (step < cfg.minDist) {
            break;
        }
    }
    res.iterations = static_cast<int>(res.displacements.size());
    res.finalWindow = w;
    res.finalRho = bhattacharyya(buildCandidateModel(frame, w, q, kernel), target);
    return res;
}

} // namespace dmst
