#pragma once

#include <filesystem>
#include <vector>

#include "dmst/image.hpp"

namespace dmst {

// Binary PPM (P6, maxval 255). Round-trips bit-exactly.
FrameImage loadPpm(const std::filesystem::path& path);
void savePpm(const FrameImage& frame, const std::filesystem::path& path);

// 8-bit RGB PNG via libpng.
FrameImage loadPng(const std::filesystem::path& path);
void savePng(const FrameImage& frame, const std::filesystem::path& path);

// Dispatch on file magic; throws DecodeError on anything else.
FrameImage loadImage(const std::filesystem::path& path);

// All .ppm/.png files in the directory in filename order (zero-padded
// indices sort correctly). Throws DecodeError when none decode and
// ResolutionMismatchError naming the first offending file.
std::vector<FrameImage> loadSequence(const std::filesystem::path& dir);

// Copy of the frame with a 1-px rectangle outline at the window bounds,
// clipped to the frame, written as PNG.
void renderOverlay(const FrameImage& frame, const Window& w,
                   const std::filesystem::path& outPath, Rgb color = Rgb{255, 255, 255});

// The outline drawing alone, for tests.
FrameImage drawWindowOutline(FrameImage frame, const Window& w, Rgb color);

} // namespace dmst
