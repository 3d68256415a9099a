// Test-only brute-force oracles, kept deliberately independent of the
// library's computation paths: plain per-pixel double loops, std::map
// accumulation, no shared helpers.
#pragma once

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "dmst/histogram.hpp"
#include "dmst/image.hpp"

namespace oracle {

inline bool memberOfWindow(int x, int y, const dmst::Window& w) {
    return x >= w.cx - w.hx && x <= w.cx + w.hx && y >= w.cy - w.hy && y <= w.cy + w.hy;
}

inline double kernelValue(dmst::KernelKind kind, double sqOffset) {
    if (sqOffset > 1.0) {
        return 0.0;
    }
    return kind == dmst::KernelKind::Epanechnikov ? 1.0 - sqOffset : 1.0;
}

// Kernel-weighted normalized histogram by direct summation over the whole
// frame, membership tested per pixel.
inline std::vector<double> kernelHistogram(const dmst::FrameImage& frame, const dmst::Window& w,
                                           const dmst::ColorQuantizer& q,
                                           dmst::KernelKind kind) {
    std::map<int, double> acc;
    double total = 0.0;
    for (int y = 0; y < frame.height(); ++y) {
        for (int x = 0; x < frame.width(); ++x) {
            if (!memberOfWindow(x, y, w)) {
                continue;
            }
            const double dx = (x - w.cx) / w.hx;
            const double dy = (y - w.cy) / w.hy;
            const double k = kernelValue(kind, dx * dx + dy * dy);
            if (k <= 0.0) {
                continue;
            }
            acc[q.bin(frame.at(x, y))] += k;
            total += k;
        }
    }
    std::vector<double> out(static_cast<std::size_t>(q.binCount()), 0.0);
    for (const auto& [bin, mass] : acc) {
        out[static_cast<std::size_t>(bin)] = mass / total;
    }
    return out;
}

// Unweighted ring histogram: enlarged window minus the target window.
inline std::vector<double> ringHistogram(const dmst::FrameImage& frame, const dmst::Window& w,
                                         const dmst::ColorQuantizer& q, double ringScale) {
    const dmst::Window outer{w.cx, w.cy, w.hx * ringScale, w.hy * ringScale};
    std::map<int, long long> counts;
    long long total = 0;
    for (int y = 0; y < frame.height(); ++y) {
        for (int x = 0; x < frame.width(); ++x) {
            if (!memberOfWindow(x, y, outer) || memberOfWindow(x, y, w)) {
                continue;
            }
            counts[q.bin(frame.at(x, y))] += 1;
            ++total;
        }
    }
    std::vector<double> out(static_cast<std::size_t>(q.binCount()), 0.0);
    for (const auto& [bin, n] : counts) {
        out[static_cast<std::size_t>(bin)] = static_cast<double>(n) / static_cast<double>(total);
    }
    return out;
}

inline double bhattacharyya(const std::vector<double>& p, const std::vector<double>& q) {
    double rho = 0.0;
    for (std::size_t u = 0; u < p.size(); ++u) {
        rho += std::sqrt(p[u] * q[u]);
    }
    return rho;
}

inline double squaredDistance(const std::vector<double>& a, const std::vector<double>& b) {
    double e = 0.0;
    for (std::size_t u = 0; u < a.size(); ++u) {
        e += (a[u] - b[u]) * (a[u] - b[u]);
    }
    return e;
}

// One mean-shift iterate evaluated straight from the formula: per-pixel
// weights sqrt(q_u / p_u(y0)) over the elliptical support.
inline dmst::Point2d meanShiftCentroid(const dmst::FrameImage& frame, const dmst::Window& w,
                                       const std::vector<double>& target,
                                       const std::vector<double>& candidate,
                                       const dmst::ColorQuantizer& q) {
    double sw = 0.0, sx = 0.0, sy = 0.0;
    for (int y = 0; y < frame.height(); ++y) {
        for (int x = 0; x < frame.width(); ++x) {
            if (!memberOfWindow(x, y, w)) {
                continue;
            }
            const double dx = (x - w.cx) / w.hx;
            const double dy = (y - w.cy) / w.hy;
            if (dx * dx + dy * dy > 1.0) {
                continue;
            }
            const std::size_t u = static_cast<std::size_t>(q.bin(frame.at(x, y)));
            if (candidate[u] <= 0.0) {
                continue;
            }
            const double wi = std::sqrt(target[u] / candidate[u]);
            sw += wi;
            sx += wi * x;
            sy += wi * y;
        }
    }
    return dmst::Point2d{sx / sw, sy / sw};
}

// Shannon entropy (bits) of the quantized colors of an explicit pixel list.
inline double entropyBits(const std::vector<dmst::Rgb>& pixels, const dmst::ColorQuantizer& q) {
    std::map<int, long long> counts;
    for (dmst::Rgb c : pixels) {
        counts[q.bin(c)] += 1;
    }
    double h = 0.0;
    for (const auto& [bin, n] : counts) {
        const double p = static_cast<double>(n) / static_cast<double>(pixels.size());
        h -= p * std::log2(p);
    }
    return h;
}

inline std::vector<double> randomNormalizedHistogram(std::mt19937_64& rng, std::size_t m,
                                                     double sparsity = 0.0) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> h(m, 0.0);
    double total = 0.0;
    while (total == 0.0) {
        for (std::size_t u = 0; u < m; ++u) {
            const double keep = sparsity > 0.0 ? (uni(rng) >= sparsity ? 1.0 : 0.0) : 1.0;
            h[u] = keep * uni(rng);
            total += h[u];
        }
    }
    for (double& v : h) {
        v /= total;
    }
    return h;
}

// Frame filled by fn(x, y) -> Rgb.
template <class Fn>
dmst::FrameImage paintFrame(int width, int height, Fn&& fn) {
    dmst::FrameImage f(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            f.set(x, y, fn(x, y));
        }
    }
    return f;
}

} // namespace oracle
