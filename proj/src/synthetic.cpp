#include "dmst/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

namespace dmst {

namespace {

using json = nlohmann::json;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint8_t clampChannel(int v) {
    return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
}

struct Hsv {
    double h; // degrees [0, 360)
    double s;
    double v;
};

Hsv toHsv(Rgb c) {
    const double r = c.r / 255.0;
    const double g = c.g / 255.0;
    const double b = c.b / 255.0;
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    const double d = mx - mn;
    double h = 0.0;
    if (d > 0.0) {
        if (mx == r) {
            h = 60.0 * std::fmod((g - b) / d, 6.0);
        } else if (mx == g) {
            h = 60.0 * ((b - r) / d + 2.0);
        } else {
            h = 60.0 * ((r - g) / d + 4.0);
        }
        if (h < 0.0) {
            h += 360.0;
        }
    }
    return Hsv{h, mx > 0.0 ? d / mx : 0.0, mx};
}

Rgb toRgb(const Hsv& in) {
    const double c = in.v * in.s;
    const double hp = in.h / 60.0;
    const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1) {
        r = c, g = x;
    } else if (hp < 2) {
        r = x, g = c;
    } else if (hp < 3) {
        g = c, b = x;
    } else if (hp < 4) {
        g = x, b = c;
    } else if (hp < 5) {
        r = x, b = c;
    } else {
        r = c, b = x;
    }
    const double m = in.v - c;
    return Rgb{clampChannel(static_cast<int>(std::lround((r + m) * 255.0))),
               clampChannel(static_cast<int>(std::lround((g + m) * 255.0))),
               clampChannel(static_cast<int>(std::lround((b + m) * 255.0)))};
}

Rgb parseColor(const json& j, const char* key, Rgb fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != 3) {
        throw SpecError(std::string("color '") + key + "' must be an [r,g,b] array");
    }
    return Rgb{clampChannel(arr[0].get<int>()), clampChannel(arr[1].get<int>()),
               clampChannel(arr[2].get<int>())};
}

json colorJson(Rgb c) {
    return json::array({c.r, c.g, c.b});
}

} // namespace

Rgb rotateHue(Rgb c, double degrees) {
    if (degrees == 0.0) {
        return c;
    }
    Hsv hsv = toHsv(c);
    hsv.h = std::fmod(hsv.h + degrees, 360.0);
    if (hsv.h < 0.0) {
        hsv.h += 360.0;
    }
    return toRgb(hsv);
}

SyntheticSpec SyntheticSpec::fromJsonText(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SpecError(std::string("invalid spec JSON: ") + e.what());
    }
    SyntheticSpec s;
    try {
        s.width = j.value("width", s.width);
        s.height = j.value("height", s.height);
        s.frames = j.value("frames", s.frames);

        const std::string bg = j.value("background", std::string("solid"));
        if (bg == "solid") {
            s.background = Background::Solid;
        } else if (bg == "two_tone") {
            s.background = Background::TwoTone;
        } else if (bg == "noise") {
            s.background = Background::Noise;
        } else {
            throw SpecError("background must be solid|two_tone|noise");
        }
        s.backgroundColor = parseColor(j, "background_color", s.backgroundColor);
        s.backgroundColor2 = parseColor(j, "background_color2", s.backgroundColor2);
        s.noiseAmplitude = j.value("noise_amplitude", s.noiseAmplitude);

        const std::string shape = j.value("shape", std::string("rectangle"));
        if (shape == "disk") {
            s.shape = Shape::Disk;
        } else if (shape == "rectangle") {
            s.shape = Shape::Rectangle;
        } else {
            throw SpecError("shape must be disk|rectangle");
        }
        s.cx0 = j.value("cx", s.cx0);
        s.cy0 = j.value("cy", s.cy0);
        s.hx0 = j.value("hx", s.hx0);
        s.hy0 = j.value("hy", s.hy0);
        s.fill = parseColor(j, "fill", s.fill);

        const std::string tex = j.value("texture", std::string("none"));
        if (tex == "none") {
            s.texture = Texture::None;
        } else if (tex == "checker") {
            s.texture = Texture::Checker;
        } else if (tex == "speckle") {
            s.texture = Texture::Speckle;
        } else {
            throw SpecError("texture must be none|checker|speckle");
        }
        s.fill2 = parseColor(j, "fill2", s.fill2);
        s.checkerCell = j.value("checker_cell", s.checkerCell);
        s.speckleLevels = j.value("speckle_levels", s.speckleLevels);
        if (s.speckleLevels < 1 || s.speckleLevels > 4) {
            throw SpecError("speckle_levels must be in [1, 4]");
        }
        s.speckleHueJitterDeg = j.value("speckle_hue_jitter_deg", s.speckleHueJitterDeg);

        s.vx = j.value("vx", s.vx);
        s.vy = j.value("vy", s.vy);
        s.scaleRamp = j.value("scale_ramp", s.scaleRamp);
        s.hueDriftPerFrame = j.value("hue_drift_per_frame", s.hueDriftPerFrame);
        s.seed = j.value("seed", s.seed);
    } catch (const json::exception& e) {
        throw SpecError(std::string("invalid spec field: ") + e.what());
    }
    return s;
}

std::string SyntheticSpec::toJsonText() const {
    json j;
    j["width"] = width;
    j["height"] = height;
    j["frames"] = frames;
    j["background"] = background == Background::Solid
                          ? "solid"
                          : (background == Background::TwoTone ? "two_tone" : "noise");
    j["background_color"] = colorJson(backgroundColor);
    j["background_color2"] = colorJson(backgroundColor2);
    j["noise_amplitude"] = noiseAmplitude;
    j["shape"] = shape == Shape::Disk ? "disk" : "rectangle";
    j["cx"] = cx0;
    j["cy"] = cy0;
    j["hx"] = hx0;
    j["hy"] = hy0;
    j["fill"] = colorJson(fill);
    j["texture"] = texture == Texture::None ? "none"
                                            : (texture == Texture::Checker ? "checker" : "speckle");
    j["fill2"] = colorJson(fill2);
    j["checker_cell"] = checkerCell;
    j["speckle_levels"] = speckleLevels;
    j["speckle_hue_jitter_deg"] = speckleHueJitterDeg;
    j["vx"] = vx;
    j["vy"] = vy;
    j["scale_ramp"] = scaleRamp;
    j["hue_drift_per_frame"] = hueDriftPerFrame;
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

SyntheticSequence generateSynthetic(const SyntheticSpec& spec) {
    if (spec.width < 1 || spec.height < 1 || spec.frames < 1) {
        throw SpecError("width, height and frames must be positive");
    }
    if (spec.hx0 <= 0.0 || spec.hy0 <= 0.0) {
        throw SpecError("target half-extents must be positive");
    }
    if (spec.scaleRamp <= 0.0) {
        throw SpecError("scale_ramp must be positive");
    }

    SyntheticSequence out;
    out.frames.reserve(spec.frames);
    out.groundTruth.reserve(spec.frames);

    for (int t = 0; t < spec.frames; ++t) {
        const double growth = std::pow(spec.scaleRamp, t);
        const Window target{spec.cx0 + spec.vx * t, spec.cy0 + spec.vy * t, spec.hx0 * growth,
                            spec.hy0 * growth};

        // The target must keep at least half of its area inside the frame.
        const double ixw = std::max(0.0, std::min(target.cx + target.hx,
                                                  static_cast<double>(spec.width)) -
                                             std::max(target.cx - target.hx, 0.0));
        const double ixh = std::max(0.0, std::min(target.cy + target.hy,
                                                  static_cast<double>(spec.height)) -
                                             std::max(target.cy - target.hy, 0.0));
        if (ixw * ixh < 0.5 * target.area()) {
            throw SpecError("target leaves the frame on frame " + std::to_string(t + 1));
        }

        const Rgb fillNow = rotateHue(spec.fill, spec.hueDriftPerFrame * t);
        const Rgb fill2Now = rotateHue(spec.fill2, spec.hueDriftPerFrame * t);

        FrameImage frame(spec.width, spec.height, spec.backgroundColor);
        if (spec.background == SyntheticSpec::Background::TwoTone) {
            for (int y = 0; y < spec.height; ++y) {
                for (int x = spec.width / 2; x < spec.width; ++x) {
                    frame.set(x, y, spec.backgroundColor2);
                }
            }
        } else if (spec.background == SyntheticSpec::Background::Noise &&
                   spec.noiseAmplitude > 0) {
            std::mt19937_64 rng(splitmix64(spec.seed ^ (0x5eedULL + t)));
            std::uniform_int_distribution<int> jitter(-spec.noiseAmplitude, spec.noiseAmplitude);
            for (int y = 0; y < spec.height; ++y) {
                for (int x = 0; x < spec.width; ++x) {
                    frame.set(x, y,
                              Rgb{clampChannel(spec.backgroundColor.r + jitter(rng)),
                                  clampChannel(spec.backgroundColor.g + jitter(rng)),
                                  clampChannel(spec.backgroundColor.b + jitter(rng))});
                }
            }
        }

        const PixelBounds b = clipWindow(frame, target);
        for (int y = b.y0; y <= b.y1; ++y) {
            for (int x = b.x0; x <= b.x1; ++x) {
                if (spec.shape == SyntheticSpec::Shape::Disk &&
                    normalizedOffset(x, y, target) > 1.0) {
                    continue;
                }
                Rgb c = fillNow;
                double hueOffset = 0.0;
                if (spec.texture != SyntheticSpec::Texture::None) {
                    // Texture lives in target-local coordinates: it translates
                    // with the target and keeps its statistics as the target
                    // rescales (growth reveals more of the pattern).
                    const long long lx = static_cast<long long>(std::floor(x - target.cx));
                    const long long ly = static_cast<long long>(std::floor(y - target.cy));
                    bool second = false;
                    if (spec.texture == SyntheticSpec::Texture::Checker) {
                        const int cell = std::max(1, spec.checkerCell);
                        const long long q =
                            (lx >= 0 ? lx / cell : (lx - cell + 1) / cell) +
                            (ly >= 0 ? ly / cell : (ly - cell + 1) / cell);
                        second = (q & 1LL) != 0;
                    }
                    int brightness = 0;
                    if (spec.texture == SyntheticSpec::Texture::Speckle) {
                        const std::uint64_t h =
                            splitmix64(static_cast<std::uint64_t>(lx) * 0x9e3779b1ULL ^
                                       static_cast<std::uint64_t>(ly) * 0x85ebca77ULL ^ spec.seed);
                        second = (h & 1ULL) != 0;
                        if (spec.speckleHueJitterDeg > 0.0) {
                            const double frac =
                                static_cast<double>((h >> 8) % 10000ULL) / 9999.0;
                            hueOffset = (2.0 * frac - 1.0) * spec.speckleHueJitterDeg;
                        }
                        if (spec.speckleLevels > 1) {
                            // One quantizer bin (16 levels) apart, so each
                            // variant occupies its own bin and drifts across
                            // edges at a staggered time.
                            const int k = static_cast<int>((h >> 1) %
                                                           static_cast<std::uint64_t>(spec.speckleLevels));
                            brightness = 16 * (k - spec.speckleLevels / 2);
                        }
                    }
                    if (second) {
                        c = fill2Now;
                    }
                    if (hueOffset != 0.0) {
                        c = rotateHue(second ? spec.fill2 : spec.fill,
                                      spec.hueDriftPerFrame * t + hueOffset);
                    }
                    if (brightness != 0) {
                        c = Rgb{clampChannel(c.r + brightness), clampChannel(c.g + brightness),
                                clampChannel(c.b + brightness)};
                    }
                }
                frame.set(x, y, c);
            }
        }

        out.frames.push_back(std::move(frame));
        out.groundTruth.push_back(target);
    }
    return out;
}

} // namespace dmst
