#pragma once

#include <functional>
#include <vector>

#include "dmst/image.hpp"

namespace dmst {

// The multi-scale information measure driving bandwidth adaptation. Two
// built-in choices, both over decimation factors {1, 2, 4} by default and
// both 0 for a single-color window at every scale:
//  - DetailDensity (pipeline default): fraction of stride-d neighbor sample
//    pairs whose quantized bins differ. Falls as featureless background
//    dilutes the window, which is the monotonicity the scale formulas need.
//  - ColorEntropy: mean Shannon entropy (bits) of the quantized color
//    histogram of the decimated window content.
// The measure is pluggable through ScaleConfig so another definition can be
// dropped in.
struct MsiimConfig {
    std::vector<int> factors{1, 2, 4};
};

enum class InformationKind {
    DetailDensity,
    ColorEntropy,
};

using InformationMeasure =
    std::function<double(const FrameImage&, const Window&, const ColorQuantizer&)>;

// Mean multi-scale color entropy of the window content; >= 0, and 0 for a
// single-color window. Throws EmptyWindowError.
double msiim(const FrameImage& frame, const Window& w, const ColorQuantizer& q,
             const MsiimConfig& cfg = MsiimConfig{});

// Mean multi-scale neighbor-difference density of the window content, in
// [0, 1]. Throws EmptyWindowError.
double detailDensity(const FrameImage& frame, const Window& w, const ColorQuantizer& q,
                     const MsiimConfig& cfg = MsiimConfig{});

InformationMeasure informationMeasure(InformationKind kind, MsiimConfig cfg = MsiimConfig{});

struct ScaleConfig {
    double alpha = 0.1;     // enlargement factor for the second measurement
    double beta = 1.0;      // background-elimination parameter, video dependent
    int periodN = 10;       // frames between scale checks; 0 disables checks
    int limitL = 5;         // direction-count limit
    double clampS = 0.2;    // |S| bound
    double minExtentPx = 4; // floor on each half-extent after resizing
    MsiimConfig msiim{};
    InformationKind measure = InformationKind::DetailDensity;
    // Overrides `measure` when set.
    InformationMeasure customMeasure;

    double evaluate(const FrameImage& frame, const Window& w, const ColorQuantizer& q) const;
};

// MSIIM snapshots and the direction counters. I1/I2 are the baselines taken
// at the previous check (current window; window enlarged by 1+alpha), I4/I5
// the same pair on the current frame.
struct ScaleState {
    double i1 = 0;
    double i2 = 0;
    double i4 = 0;
    double i5 = 0;
    double s = 0;
    int incCount = 0;
    int decCount = 0;
    bool degenerate = false; // set when a baseline measure was unusable
};

// Scale factor from the two MSIIM pairs. Branch picked by the sign of
// I5 - I2; lg is base-10; the log argument is floored at 1e-6 and the result
// clamped to +-cfg.clampS. A zero baseline flags `degenerate` and yields 0.
double computeScaleFactor(ScaleState& st, const ScaleConfig& cfg);

// Both extents multiplied by (1 + s), floored at minExtentPx per axis;
// center unchanged.
Window applyScale(const Window& w, double s, double minExtentPx = 4.0);

// Direction-count limiting: a change in one direction bumps that counter and
// decays the opposite one. Returns false (resize suppressed) when the active
// direction was already saturated at `limitL` before this update.
bool updateCounters(ScaleState& st, double s, int limitL);

} // namespace dmst
