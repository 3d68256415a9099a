#include "dmst/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <png.h>

namespace dmst {

namespace fs = std::filesystem;

namespace {

int readPpmToken(std::istream& in) {
    // Skips whitespace and '#' comments between header fields.
    while (in) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int value = -1;
    in >> value;
    return in ? value : -1;
}

} // namespace

FrameImage loadPpm(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DecodeError("cannot open " + path.string());
    }
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '6') {
        throw DecodeError(path.string() + ": not a binary PPM (P6)");
    }
    const int width = readPpmToken(in);
    const int height = readPpmToken(in);
    const int maxval = readPpmToken(in);
    if (width < 1 || height < 1 || maxval != 255) {
        throw DecodeError(path.string() + ": unsupported PPM header");
    }
    in.get(); // single whitespace after maxval
    std::vector<std::uint8_t> data(static_cast<std::size_t>(width) * height * 3);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (in.gcount() != static_cast<std::streamsize>(data.size())) {
        throw DecodeError(path.string() + ": truncated pixel data");
    }
    return FrameImage::fromRaw(width, height, std::move(data));
}

void savePpm(const FrameImage& frame, const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw WriteError("cannot open " + path.string() + " for writing");
    }
    out << "P6\n" << frame.width() << " " << frame.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(frame.raw().data()),
              static_cast<std::streamsize>(frame.raw().size()));
    if (!out) {
        throw WriteError("failed writing " + path.string());
    }
}

FrameImage loadPng(const fs::path& path) {
    std::FILE* fp = std::fopen(path.string().c_str(), "rb");
    if (fp == nullptr) {
        throw DecodeError("cannot open " + path.string());
    }
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (info == nullptr) {
        if (png != nullptr) {
            png_destroy_read_struct(&png, nullptr, nullptr);
        }
        std::fclose(fp);
        throw DecodeError("libpng initialization failed");
    }
    std::vector<std::uint8_t> data;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw DecodeError(path.string() + ": PNG decode failed");
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);

    // Normalize every variant to 8-bit RGB.
    png_set_expand(png);
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
    png_read_update_info(png, info);
    if (png_get_rowbytes(png, info) != static_cast<std::size_t>(width) * 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw DecodeError(path.string() + ": unexpected PNG layout");
    }

    data.resize(static_cast<std::size_t>(width) * height * 3);
    rows.resize(height);
    for (png_uint_32 y = 0; y < height; ++y) {
        rows[y] = data.data() + static_cast<std::size_t>(y) * width * 3;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return FrameImage::fromRaw(static_cast<int>(width), static_cast<int>(height),
                               std::move(data));
}

void savePng(const FrameImage& frame, const fs::path& path) {
    std::FILE* fp = std::fopen(path.string().c_str(), "wb");
    if (fp == nullptr) {
        throw WriteError("cannot open " + path.string() + " for writing");
    }
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (info == nullptr) {
        if (png != nullptr) {
            png_destroy_write_struct(&png, nullptr);
        }
        std::fclose(fp);
        throw WriteError("libpng initialization failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        throw WriteError(path.string() + ": PNG encode failed");
    }
    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(frame.width()),
                 static_cast<png_uint_32>(frame.height()), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < frame.height(); ++y) {
        png_write_row(png, const_cast<png_bytep>(frame.raw().data() +
                                                 static_cast<std::size_t>(y) * frame.width() * 3));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

FrameImage loadImage(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DecodeError("cannot open " + path.string());
    }
    unsigned char magic[2] = {0, 0};
    in.read(reinterpret_cast<char*>(magic), 2);
    in.close();
    if (magic[0] == 'P' && magic[1] == '6') {
        return loadPpm(path);
    }
    if (magic[0] == 0x89 && magic[1] == 'P') {
        return loadPng(path);
    }
    throw DecodeError(path.string() + ": unrecognized image format");
}

std::vector<FrameImage> loadSequence(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw DecodeError(dir.string() + " is not a directory");
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        const std::string ext = entry.path().extension().string();
        if (ext == ".ppm" || ext == ".png") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw DecodeError("no .ppm or .png frames in " + dir.string());
    }
    std::vector<FrameImage> frames;
    frames.reserve(files.size());
    for (const fs::path& f : files) {
        FrameImage img = loadImage(f);
        if (!frames.empty() &&
            (img.width() != frames.front().width() || img.height() != frames.front().height())) {
            throw ResolutionMismatchError(f.string() + ": resolution differs from first frame");
        }
        frames.push_back(std::move(img));
    }
    return frames;
}

FrameImage drawWindowOutline(FrameImage frame, const Window& w, Rgb color) {
    const int x0 = static_cast<int>(std::lround(w.cx - w.hx));
    const int x1 = static_cast<int>(std::lround(w.cx + w.hx));
    const int y0 = static_cast<int>(std::lround(w.cy - w.hy));
    const int y1 = static_cast<int>(std::lround(w.cy + w.hy));
    for (int x = x0; x <= x1; ++x) {
        if (frame.contains(x, y0)) {
            frame.set(x, y0, color);
        }
        if (frame.contains(x, y1)) {
            frame.set(x, y1, color);
        }
    }
    for (int y = y0; y <= y1; ++y) {
        if (frame.contains(x0, y)) {
            frame.set(x0, y, color);
        }
        if (frame.contains(x1, y)) {
            frame.set(x1, y, color);
        }
    }
    return frame;
}

void renderOverlay(const FrameImage& frame, const Window& w, const fs::path& outPath,
                   Rgb color) {
    savePng(drawWindowOutline(frame, w, color), outPath);
}

} // namespace dmst
