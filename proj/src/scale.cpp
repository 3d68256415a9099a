#include "dmst/scale.hpp"

#include <algorithm>
#include <cmath>

namespace dmst {

namespace {

constexpr double kLogArgFloor = 1e-6;

double entropyBitsAtStride(const FrameImage& frame, const PixelBounds& b,
                           const ColorQuantizer& q, int stride) {
    std::vector<double> counts(static_cast<std::size_t>(q.binCount()), 0.0);
    long long n = 0;
    for (int y = b.y0; y <= b.y1; y += stride) {
        for (int x = b.x0; x <= b.x1; x += stride) {
            counts[static_cast<std::size_t>(q.bin(frame.at(x, y)))] += 1.0;
            ++n;
        }
    }
    double h = 0.0;
    for (double c : counts) {
        if (c > 0.0) {
            const double p = c / static_cast<double>(n);
            h -= p * std::log2(p);
        }
    }
    return h;
}

} // namespace

double neighborDiffAtStride(const FrameImage& frame, const PixelBounds& b,
                            const ColorQuantizer& q, int stride) {
    long long pairs = 0;
    long long differing = 0;
    for (int y = b.y0; y <= b.y1; y += stride) {
        for (int x = b.x0; x <= b.x1; x += stride) {
            const int bin = q.bin(frame.at(x, y));
            if (x + stride <= b.x1) {
                ++pairs;
                differing += bin != q.bin(frame.at(x + stride, y)) ? 1 : 0;
            }
            if (y + stride <= b.y1) {
                ++pairs;
                differing += bin != q.bin(frame.at(x, y + stride)) ? 1 : 0;
            }
        }
    }
    return pairs > 0 ? static_cast<double>(differing) / static_cast<double>(pairs) : 0.0;
}

template <class PerStride>
double meanOverStrides(const FrameImage& frame, const Window& w, const MsiimConfig& cfg,
                       PerStride&& perStride) {
    const PixelBounds b = clipWindow(frame, w);
    if (b.empty()) {
        throw EmptyWindowError("window does not cover any frame pixel");
    }
    double total = 0.0;
    int used = 0;
    for (int factor : cfg.factors) {
        if (factor < 1) {
            continue;
        }
        total += perStride(b, factor);
        ++used;
    }
    return used > 0 ? total / used : 0.0;
}

double msiim(const FrameImage& frame, const Window& w, const ColorQuantizer& q,
             const MsiimConfig& cfg) {
    return meanOverStrides(frame, w, cfg, [&](const PixelBounds& b, int factor) {
        return entropyBitsAtStride(frame, b, q, factor);
    });
}

double detailDensity(const FrameImage& frame, const Window& w, const ColorQuantizer& q,
                     const MsiimConfig& cfg) {
    return meanOverStrides(frame, w, cfg, [&](const PixelBounds& b, int factor) {
        return neighborDiffAtStride(frame, b, q, factor);
    });
}

InformationMeasure informationMeasure(InformationKind kind, MsiimConfig cfg) {
    if (kind == InformationKind::ColorEntropy) {
        return [cfg = std::move(cfg)](const FrameImage& frame, const Window& w,
                                      const ColorQuantizer& q) {
            return msiim(frame, w, q, cfg);
        };
    }
    return [cfg = std::move(cfg)](const FrameImage& frame, const Window& w,
                                  const ColorQuantizer& q) {
        return detailDensity(frame, w, q, cfg);
    };
}

double ScaleConfig::evaluate(const FrameImage& frame, const Window& w,
                             const ColorQuantizer& q) const {
    if (customMeasure) {
        return customMeasure(frame, w, q);
    }
    if (measure == InformationKind::ColorEntropy) {
        return dmst::msiim(frame, w, q, msiim);
    }
    return detailDensity(frame, w, q, msiim);
}

double computeScaleFactor(ScaleState& st, const ScaleConfig& cfg) {
    st.degenerate = false;
    if (st.i1 <= 0.0 || st.i4 <= 0.0) {
        st.degenerate = true;
        st.s = 0.0;
        return 0.0;
    }
    double s = 0.0;
    if (st.i5 - st.i2 >= 0.0) {
        if (st.i5 / st.i4 > st.i2 / st.i1) {
            const double arg = std::max(cfg.beta - (st.i5 - (st.i2 - st.i1)) / st.i1,
                                        kLogArgFloor);
            s = std::log10(arg);
        }
    } else {
        if (st.i1 * 0.95 > st.i4) {
            s = cfg.beta * std::log10(st.i4 / st.i1);
        }
    }
    st.s = std::clamp(s, -cfg.clampS, cfg.clampS);
    return st.s;
}

Window applyScale(const Window& w, double s, double minExtentPx) {
    Window out = w;
    out.hx = std::max(w.hx * (1.0 + s), minExtentPx);
    out.hy = std::max(w.hy * (1.0 + s), minExtentPx);
    return out;
}

bool updateCounters(ScaleState& st, double s, int limitL) {
    if (s > 0.0) {
        const bool permitted = st.incCount < limitL;
        st.incCount = std::min(st.incCount + 1, limitL);
        st.decCount = std::max(st.decCount - 1, 0);
        return permitted;
    }
    if (s < 0.0) {
        const bool permitted = st.decCount < limitL;
        st.decCount = std::min(st.decCount + 1, limitL);
        st.incCount = std::max(st.incCount - 1, 0);
        return permitted;
    }
    return true;
}

} // namespace dmst
