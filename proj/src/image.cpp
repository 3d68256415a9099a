#include "dmst/image.hpp"

#include <cmath>
#include <utility>

namespace dmst {

FrameImage::FrameImage(int width, int height, Rgb fill) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw DecodeError("frame dimensions must be at least 1x1");
    }
    data_.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < data_.size(); i += 3) {
        data_[i] = fill.r;
        data_[i + 1] = fill.g;
        data_[i + 2] = fill.b;
    }
}

FrameImage FrameImage::fromRaw(int width, int height, std::vector<std::uint8_t> rgb) {
    if (width < 1 || height < 1) {
        throw DecodeError("frame dimensions must be at least 1x1");
    }
    if (rgb.size() != static_cast<std::size_t>(width) * height * 3) {
        throw DecodeError("raw buffer length does not match width*height*3");
    }
    FrameImage f;
    f.width_ = width;
    f.height_ = height;
    f.data_ = std::move(rgb);
    return f;
}

ColorQuantizer::ColorQuantizer(int binsPerChannel) : bins_(binsPerChannel) {
    if (binsPerChannel < 1 || binsPerChannel > 256) {
        throw ConfigError("binsPerChannel must be in [1, 256]");
    }
    step_ = 256.0 / bins_;
}

PixelBounds clipWindow(const FrameImage& frame, const Window& w) {
    PixelBounds b;
    b.x0 = std::max(0, static_cast<int>(std::ceil(w.cx - w.hx)));
    b.x1 = std::min(frame.width() - 1, static_cast<int>(std::floor(w.cx + w.hx)));
    b.y0 = std::max(0, static_cast<int>(std::ceil(w.cy - w.hy)));
    b.y1 = std::min(frame.height() - 1, static_cast<int>(std::floor(w.cy + w.hy)));
    return b;
}

std::vector<PixelSample> pixelsIn(const FrameImage& frame, const Window& w) {
    const PixelBounds b = clipWindow(frame, w);
    if (b.empty()) {
        throw EmptyWindowError("window does not cover any frame pixel");
    }
    std::vector<PixelSample> out;
    out.reserve(static_cast<std::size_t>(b.count()));
    for (int y = b.y0; y <= b.y1; ++y) {
        for (int x = b.x0; x <= b.x1; ++x) {
            out.push_back(PixelSample{x, y, frame.at(x, y)});
        }
    }
    return out;
}

} // namespace dmst
