#pragma once

#include <cstdint>
#include <vector>

#include "dmst/errors.hpp"

namespace dmst {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

// Decoded 8-bit RGB raster, row-major.
class FrameImage {
public:
    FrameImage() = default;
    FrameImage(int width, int height, Rgb fill = Rgb{});

    // Takes ownership of a raw RGB buffer; throws DecodeError when the
    // length does not match width*height*3.
    static FrameImage fromRaw(int width, int height, std::vector<std::uint8_t> rgb);

    int width() const { return width_; }
    int height() const { return height_; }
    bool empty() const { return data_.empty(); }

    Rgb at(int x, int y) const {
        const std::uint8_t* p = data_.data() + 3 * (static_cast<std::size_t>(y) * width_ + x);
        return Rgb{p[0], p[1], p[2]};
    }
    void set(int x, int y, Rgb c) {
        std::uint8_t* p = data_.data() + 3 * (static_cast<std::size_t>(y) * width_ + x);
        p[0] = c.r;
        p[1] = c.g;
        p[2] = c.b;
    }
    bool contains(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    const std::vector<std::uint8_t>& raw() const { return data_; }
    std::vector<std::uint8_t>& raw() { return data_; }

    bool operator==(const FrameImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> data_;
};

// Axis-aligned tracking region: sub-pixel center plus positive half-extents
// (the per-axis kernel bandwidth). Full size is W = 2*hx, H = 2*hy.
struct Window {
    double cx = 0;
    double cy = 0;
    double hx = 0;
    double hy = 0;

    double width() const { return 2.0 * hx; }
    double height() const { return 2.0 * hy; }
    double area() const { return width() * height(); }

    Window withCenter(double x, double y) const { return Window{x, y, hx, hy}; }
    // Extents multiplied by `factor`, center unchanged.
    Window scaled(double factor) const { return Window{cx, cy, hx * factor, hy * factor}; }

    bool operator==(const Window&) const = default;
};

struct Point2d {
    double x = 0;
    double y = 0;
};

// Uniform quantizer mapping RGB triples onto m = B^3 flat bin indices.
class ColorQuantizer {
public:
    explicit ColorQuantizer(int binsPerChannel = 16);

    int binsPerChannel() const { return bins_; }
    int binCount() const { return bins_ * bins_ * bins_; }

    int bin(Rgb c) const {
        return (channelIndex(c.r) * bins_ + channelIndex(c.g)) * bins_ + channelIndex(c.b);
    }

private:
    int channelIndex(std::uint8_t v) const {
        int i = static_cast<int>(v / step_);
        return i < bins_ ? i : bins_ - 1;
    }

    int bins_;
    double step_;
};

struct PixelSample {
    int x = 0;
    int y = 0;
    Rgb color;
};

// Integer pixel bounds of a window clipped to a frame, both ends inclusive.
struct PixelBounds {
    int x0 = 0;
    int x1 = -1;
    int y0 = 0;
    int y1 = -1;

    bool empty() const { return x0 > x1 || y0 > y1; }
    long long count() const {
        return empty() ? 0
                       : static_cast<long long>(x1 - x0 + 1) * static_cast<long long>(y1 - y0 + 1);
    }
};

// A pixel belongs to the window when its integer center lies inside
// [cx-hx, cx+hx] x [cy-hy, cy+hy]. Never throws; may return empty bounds.
PixelBounds clipWindow(const FrameImage& frame, const Window& w);

// Every in-window pixel with its color, in row-major order.
// Throws EmptyWindowError when the clipped intersection holds zero pixels.
std::vector<PixelSample> pixelsIn(const FrameImage& frame, const Window& w);

// Squared normalized distance from the window center: 0 at the center,
// 1 on the inscribed ellipse.
inline double normalizedOffset(double px, double py, const Window& w) {
    const double dx = (px - w.cx) / w.hx;
    const double dy = (py - w.cy) / w.hy;
    return dx * dx + dy * dy;
}

// Row-major visit of the clipped window pixels; fn(x, y, color).
template <class Fn>
void forEachPixel(const FrameImage& frame, const Window& w, Fn&& fn) {
    const PixelBounds b = clipWindow(frame, w);
    for (int y = b.y0; y <= b.y1; ++y) {
        for (int x = b.x0; x <= b.x1; ++x) {
            fn(x, y, frame.at(x, y));
        }
    }
}

} // namespace dmst
