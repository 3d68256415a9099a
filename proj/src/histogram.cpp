#include "dmst/histogram.hpp"

#include <algorithm>
#include <cmath>

#include "dmst/kernels.hpp"

namespace dmst {

namespace {

void normalizeInPlace(std::vector<double>& w) {
    const double total = kernels::ops().sum(w.data(), w.size());
    if (total <= 0.0) {
        throw ZeroMassError("histogram mass is zero");
    }
    kernels::ops().scaleInPlace(w.data(), 1.0 / total, w.size());
}

// Shared core of Eq.-2/4/9-style construction: kernel-weighted bin masses.
std::vector<double> rawKernelHistogram(const FrameImage& frame, const Window& w,
                                       const ColorQuantizer& q, const KernelProfile& kernel) {
    const PixelBounds b = clipWindow(frame, w);
    if (b.empty()) {
        throw EmptyWindowError("window does not cover any frame pixel");
    }
    std::vector<double> raw(static_cast<std::size_t>(q.binCount()), 0.0);
    double totalWeight = 0.0;
    for (int y = b.y0; y <= b.y1; ++y) {
        for (int x = b.x0; x <= b.x1; ++x) {
            const double k = kernel.profile(normalizedOffset(x, y, w));
            if (k <= 0.0) {
                continue;
            }
            raw[static_cast<std::size_t>(q.bin(frame.at(x, y)))] += k;
            totalWeight += k;
        }
    }
    if (totalWeight <= 0.0) {
        throw DegenerateKernelError("every window pixel lies outside the kernel support");
    }
    return raw;
}

} // namespace

WeightedHistogram WeightedHistogram::fromWeights(std::vector<double> weights,
                                                 HistogramRole role) {
    normalizeInPlace(weights);
    WeightedHistogram h;
    h.weights_ = std::move(weights);
    h.role_ = role;
    return h;
}

double WeightedHistogram::sum() const {
    return kernels::ops().sum(weights_.data(), weights_.size());
}

bool TransferFunction::isIdentity() const {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 1.0; });
}

WeightedHistogram buildTargetModel(const FrameImage& frame, const Window& w,
                                   const ColorQuantizer& q, const KernelProfile& kernel) {
    return WeightedHistogram::fromWeights(rawKernelHistogram(frame, w, q, kernel),
                                          HistogramRole::Target);
}

WeightedHistogram buildCandidateModel(const FrameImage& frame, const Window& w,
                                      const ColorQuantizer& q, const KernelProfile& kernel) {
    return WeightedHistogram::fromWeights(rawKernelHistogram(frame, w, q, kernel),
                                          HistogramRole::Candidate);
}

double bhattacharyya(const WeightedHistogram& p, const WeightedHistogram& q) {
    if (p.size() != q.size()) {
        throw DimensionMismatchError("histogram bin counts differ");
    }
    return kernels::ops().dotSqrtSum(p.data(), q.data(), p.size());
}

double bhattDistance(const WeightedHistogram& p, const WeightedHistogram& q) {
    return std::sqrt(std::max(0.0, 1.0 - bhattacharyya(p, q)));
}

WeightedHistogram buildBackgroundHistogram(const FrameImage& frame, const Window& target,
                                           const ColorQuantizer& q, double ringScale) {
    const Window outer = target.scaled(ringScale);
    const PixelBounds ob = clipWindow(frame, outer);
    if (ob.empty()) {
        throw EmptyWindowError("background ring lies fully outside the frame");
    }
    const PixelBounds ib = clipWindow(frame, target);
    std::vector<double> counts(static_cast<std::size_t>(q.binCount()), 0.0);
    long long n = 0;
    for (int y = ob.y0; y <= ob.y1; ++y) {
        for (int x = ob.x0; x <= ob.x1; ++x) {
            const bool inTarget =
                !ib.empty() && x >= ib.x0 && x <= ib.x1 && y >= ib.y0 && y <= ib.y1;
            if (inTarget) {
                continue;
            }
            counts[static_cast<std::size_t>(q.bin(frame.at(x, y)))] += 1.0;
            ++n;
        }
    }
    if (n == 0) {
        throw EmptyWindowError("background ring contains zero pixels");
    }
    return WeightedHistogram::fromWeights(std::move(counts), HistogramRole::Background);
}

TransferFunction computeTransfer(const WeightedHistogram& background) {
    double smallestNonzero = 0.0;
    for (std::size_t u = 0; u < background.size(); ++u) {
        const double o = background[u];
        if (o > 0.0 && (smallestNonzero == 0.0 || o < smallestNonzero)) {
            smallestNonzero = o;
        }
    }
    TransferFunction t;
    t.v.resize(background.size(), 1.0);
    if (smallestNonzero == 0.0) {
        return t; // normalized histograms always have mass, but stay safe
    }
    for (std::size_t u = 0; u < background.size(); ++u) {
        const double o = background[u];
        if (o > 0.0) {
            t.v[u] = std::min(smallestNonzero / o, 1.0);
        }
    }
    return t;
}

WeightedHistogram buildCbwhTargetModel(const FrameImage& frame, const Window& w,
                                       const ColorQuantizer& q, const KernelProfile& kernel,
                                       const TransferFunction& v) {
    std::vector<double> raw = rawKernelHistogram(frame, w, q, kernel);
    if (v.size() != raw.size()) {
        throw DimensionMismatchError("transfer function bin count differs from quantizer");
    }
    kernels::ops().multiply(raw.data(), raw.data(), v.v.data(), raw.size());
    return WeightedHistogram::fromWeights(std::move(raw), HistogramRole::CbwhTarget);
}

std::pair<WeightedHistogram, WeightedHistogram>
applyBwhWeighting(const WeightedHistogram& target, const WeightedHistogram& candidate,
                  const TransferFunction& v) {
    if (target.size() != candidate.size() || target.size() != v.size()) {
        throw DimensionMismatchError("histogram / transfer bin counts differ");
    }
    auto weight = [&](const WeightedHistogram& h) {
        std::vector<double> w(h.size());
        kernels::ops().multiply(w.data(), h.data(), v.v.data(), w.size());
        return WeightedHistogram::fromWeights(std::move(w), h.role());
    };
    return {weight(target), weight(candidate)};
}

} // namespace dmst
