// Shared synthetic scenarios for the tracker tests and the acceptance suite.
#pragma once

#include "dmst/config.hpp"
#include "dmst/synthetic.hpp"
#include "dmst/tracker.hpp"

namespace scenarios {

// Solid disk on a clean background, constant size, constant velocity.
inline dmst::SyntheticSpec translatingDisk(int frames = 100, double vx = 3.0, double vy = 0.0) {
    dmst::SyntheticSpec s;
    s.width = 352;
    s.height = 240;
    s.frames = frames;
    s.backgroundColor = dmst::Rgb{40, 40, 45};
    s.shape = dmst::SyntheticSpec::Shape::Disk;
    s.cx0 = 30;
    s.cy0 = 120;
    s.hx0 = 20;
    s.hy0 = 20;
    s.fill = dmst::Rgb{210, 60, 50};
    s.vx = vx;
    s.vy = vy;
    return s;
}

// Speckle-textured square that grows from 30 to 60 px over `frames` frames.
// The texture keeps the window's information measure responsive; a flat
// target would leave every MSIIM at zero.
inline dmst::SyntheticSpec growingSquare(int frames = 200) {
    dmst::SyntheticSpec s;
    s.width = 352;
    s.height = 240;
    s.frames = frames;
    s.backgroundColor = dmst::Rgb{25, 25, 30};
    s.shape = dmst::SyntheticSpec::Shape::Rectangle;
    s.cx0 = 176;
    s.cy0 = 120;
    s.hx0 = 15;
    s.hy0 = 15;
    s.fill = dmst::Rgb{210, 60, 50};
    s.fill2 = dmst::Rgb{240, 170, 60};
    s.texture = dmst::SyntheticSpec::Texture::Speckle;
    s.seed = 7;
    s.scaleRamp = 1.0034887989595442; // 2^(1/199): doubles over 200 frames
    return s;
}

inline dmst::SyntheticSpec shrinkingSquare(int frames = 200) {
    dmst::SyntheticSpec s = growingSquare(frames);
    s.hx0 = 30;
    s.hy0 = 30;
    s.scaleRamp = 1.0 / 1.0034887989595442;
    return s;
}

// Speckled square whose colors rotate 60 degrees of hue over the run, with
// a mild size ramp so scale-change events occur. Base colors sit mid-bin
// and the speckle spreads over four brightness bins, so the histogram mass
// migrates gradually instead of jumping all at once.
inline dmst::SyntheticSpec hueDriftSquare(int frames = 300) {
    dmst::SyntheticSpec s;
    s.width = 352;
    s.height = 240;
    s.frames = frames;
    s.backgroundColor = dmst::Rgb{25, 25, 30};
    s.shape = dmst::SyntheticSpec::Shape::Rectangle;
    s.cx0 = 176;
    s.cy0 = 120;
    s.hx0 = 15;
    s.hy0 = 15;
    s.fill = dmst::Rgb{168, 104, 88};
    s.fill2 = dmst::Rgb{104, 168, 88};
    s.texture = dmst::SyntheticSpec::Texture::Speckle;
    // +-30 degrees of per-pixel hue jitter: the 60-degree global sweep then
    // slides the palette's hue interval past the original one, giving a
    // near-linear similarity decay instead of synchronized bin jumps.
    s.speckleHueJitterDeg = 30.0;
    s.seed = 11;
    s.scaleRamp = 1.001573; // 30 -> 48 px across 300 frames
    s.hueDriftPerFrame = 60.0 / (frames - 1);
    return s;
}

// Scale-pipeline settings that make Eq.-11/12 behave as a mild controller
// on the synthetic scenes. beta stays scene-dependent by design; beta > 2
// is what lets the first branch produce growth. The direction-count limit
// is raised because a monotone size ramp legitimately changes in one
// direction for the whole run.
inline dmst::AppConfig scaleTunedConfig() {
    dmst::AppConfig cfg;
    cfg.beta = 2.2;
    cfg.alpha = 0.15;
    cfg.scalePeriodN = 5;
    cfg.scaleLimitL = 50;
    return cfg;
}

// Check cadence for the drift scene: scale events must accumulate faster
// than the model decays, so checks run every other frame.
inline dmst::AppConfig driftTunedConfig() {
    dmst::AppConfig cfg = scaleTunedConfig();
    cfg.scalePeriodN = 2;
    return cfg;
}

inline dmst::TrackerConfig trackerConfigFor(const dmst::AppConfig& app,
                                            dmst::TrackerVariant variant,
                                            const dmst::SyntheticSpec& spec) {
    return app.trackerConfig(variant,
                             dmst::Window{spec.cx0, spec.cy0, spec.hx0, spec.hy0});
}

} // namespace scenarios
