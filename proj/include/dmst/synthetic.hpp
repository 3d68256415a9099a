#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmst/image.hpp"

namespace dmst {

// Deterministic synthetic scene: a single moving/scaling target on a
// controlled background, with per-frame ground-truth windows. Stands in for
// recorded footage when none is available.
struct SyntheticSpec {
    int width = 352;
    int height = 240;
    int frames = 100;

    enum class Background { Solid, TwoTone, Noise };
    Background background = Background::Solid;
    Rgb backgroundColor{40, 40, 45};
    Rgb backgroundColor2{70, 70, 80}; // TwoTone: right half
    int noiseAmplitude = 0;           // Noise: +- per channel around backgroundColor

    enum class Shape { Disk, Rectangle };
    Shape shape = Shape::Rectangle;
    double cx0 = 0;
    double cy0 = 0;
    double hx0 = 15;
    double hy0 = 15;
    Rgb fill{200, 60, 50};

    enum class Texture { None, Checker, Speckle };
    Texture texture = Texture::None;
    Rgb fill2{60, 180, 70}; // second texture color
    int checkerCell = 3;    // checker cell size in target-local pixels
    // Brightness variants per speckle color (1..4). More levels spread the
    // target over more bins, so gradual color drift moves its histogram
    // mass in small steps.
    int speckleLevels = 1;
    // Per-pixel hue jitter half-range in degrees. A jittered palette smears
    // across a hue interval, so a global hue drift migrates histogram mass
    // continuously instead of in synchronized bin jumps.
    double speckleHueJitterDeg = 0.0;

    double vx = 0.0; // per-frame center velocity
    double vy = 0.0;
    double scaleRamp = 1.0;        // per-frame multiplicative size change
    double hueDriftPerFrame = 0.0; // degrees of hue rotation of the target colors
    std::uint64_t seed = 0;

    // Parse / serialize the flat JSON object used by the `synth` subcommand.
    static SyntheticSpec fromJsonText(const std::string& text);
    std::string toJsonText() const;
};

struct SyntheticSequence {
    std::vector<FrameImage> frames;
    std::vector<Window> groundTruth; // drawn target center + half-extents per frame
};

// Renders the spec. Throws SpecError when the spec is malformed or the
// target's overlap with the frame drops below half its area on any frame.
SyntheticSequence generateSynthetic(const SyntheticSpec& spec);

// Hue rotation helper (degrees); exposed for tests.
Rgb rotateHue(Rgb c, double degrees);

} // namespace dmst
