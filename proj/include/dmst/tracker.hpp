#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmst/histogram.hpp"
#include "dmst/image.hpp"
#include "dmst/localization.hpp"
#include "dmst/scale.hpp"
#include "dmst/template_update.hpp"

namespace dmst {

enum class TrackerVariant {
    ClassicMS, // Eq.-2 model, fixed bandwidth
    Cbwh,      // Eq.-9 model, fixed bandwidth
    SelfAdapt, // Eq.-2 model + MSIIM scale pipeline
    Dmst,      // Eq.-9 model + scale pipeline + dynamic template update
};

const char* variantName(TrackerVariant v);
std::optional<TrackerVariant> parseVariant(const std::string& name);

struct TrackerConfig {
    TrackerVariant variant = TrackerVariant::Dmst;
    Window initialWindow;
    int binsPerChannel = 16;
    KernelProfile kernel{};
    LocalizationConfig localization{};
    ScaleConfig scale{};
    TemplateConfig templateUpdate{};
    double backgroundRingScale = 2.0;
};

// One entry of the per-frame log feeding the comparison metrics.
struct FrameRecord {
    int frameIndex = 0;
    Window window;
    int iterations = 0;
    std::vector<double> displacements;
    double rho = 0.0;
    double scaleFactor = 0.0;
    bool templateReplaced = false;
    bool lost = false;
};

class Tracker {
public:
    // Initializes the model(s) on the first frame; the initial window must
    // cover at least one pixel.
    Tracker(const FrameImage& firstFrame, TrackerConfig cfg);

    FrameRecord processFrame(const FrameImage& frame);

    // The record for the initialization frame (iterations = 0).
    const FrameRecord& initialRecord() const { return initialRecord_; }

    const TrackerConfig& config() const { return cfg_; }
    const Window& window() const { return window_; }
    const WeightedHistogram& activeModel() const { return model_; }
    const WeightedHistogram& initialModel() const { return initialModel_; }
    const ScaleState& scaleState() const { return scaleState_; }
    // Meaningful for Dmst only.
    const TemplateStore& templateStore() const { return store_; }
    bool lost() const { return lost_; }
    int frameIndex() const { return frameIndex_; }

private:
    bool usesScale() const;
    bool usesCbwh() const;
    bool usesTemplate() const;
    WeightedHistogram buildModelAt(const FrameImage& frame, const Window& w) const;

    TrackerConfig cfg_;
    ColorQuantizer quantizer_;
    Window window_;
    WeightedHistogram model_;        // what localization tracks against
    WeightedHistogram initialModel_; // frozen frame-1 model
    ScaleState scaleState_;
    TemplateStore store_;
    FrameRecord initialRecord_;
    int frameIndex_ = 1; // 1-based, frame 1 is the initialization frame
    bool lost_ = false;
};

// initTracker on the first frame, processFrame on the rest; one record per
// frame in order. After a lost target the tracker coasts at the last window
// with the lost flag latched, keeping the metrics computable.
std::vector<FrameRecord> trackSequence(const std::vector<FrameImage>& frames,
                                       const TrackerConfig& cfg);

} // namespace dmst
