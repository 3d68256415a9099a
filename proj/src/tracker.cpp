#include "dmst/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace dmst {

const char* variantName(TrackerVariant v) {
    switch (v) {
    case TrackerVariant::ClassicMS:
        return "classic";
    case TrackerVariant::Cbwh:
        return "cbwh";
    case TrackerVariant::SelfAdapt:
        return "selfadapt";
    case TrackerVariant::Dmst:
        return "dmst";
    }
    return "unknown";
}

std::optional<TrackerVariant> parseVariant(const std::string& name) {
    if (name == "classic" || name == "ms" || name == "meanshift") {
        return TrackerVariant::ClassicMS;
    }
    if (name == "cbwh") {
        return TrackerVariant::Cbwh;
    }
    if (name == "selfadapt" || name == "self-adapt") {
        return TrackerVariant::SelfAdapt;
    }
    if (name == "dmst") {
        return TrackerVariant::Dmst;
    }
    return std::nullopt;
}

bool Tracker::usesScale() const {
    return cfg_.variant == TrackerVariant::SelfAdapt || cfg_.variant == TrackerVariant::Dmst;
}

bool Tracker::usesCbwh() const {
    return cfg_.variant == TrackerVariant::Cbwh || cfg_.variant == TrackerVariant::Dmst;
}

bool Tracker::usesTemplate() const {
    return cfg_.variant == TrackerVariant::Dmst;
}

WeightedHistogram Tracker::buildModelAt(const FrameImage& frame, const Window& w) const {
    if (usesCbwh()) {
        const WeightedHistogram bg =
            buildBackgroundHistogram(frame, w, quantizer_, cfg_.backgroundRingScale);
        return buildCbwhTargetModel(frame, w, quantizer_, cfg_.kernel, computeTransfer(bg));
    }
    return buildTargetModel(frame, w, quantizer_, cfg_.kernel);
}

Tracker::Tracker(const FrameImage& firstFrame, TrackerConfig cfg)
    : cfg_(std::move(cfg)), quantizer_(cfg_.binsPerChannel), window_(cfg_.initialWindow) {
    model_ = buildModelAt(firstFrame, window_);
    initialModel_ = model_;

    if (usesScale()) {
        scaleState_.i1 = cfg_.scale.evaluate(firstFrame, window_, quantizer_);
        scaleState_.i2 =
            cfg_.scale.evaluate(firstFrame, window_.scaled(1.0 + cfg_.scale.alpha), quantizer_);
    }
    if (usesTemplate()) {
        store_ = TemplateStore(initialModel_, cfg_.templateUpdate);
    }

    initialRecord_.frameIndex = 1;
    initialRecord_.window = window_;
    initialRecord_.rho =
        bhattacharyya(buildCandidateModel(firstFrame, window_, quantizer_, cfg_.kernel), model_);
}

FrameRecord Tracker::processFrame(const FrameImage& frame) {
    ++frameIndex_;
    FrameRecord rec;
    rec.frameIndex = frameIndex_;

    if (!lost_) {
        try {
            const LocalizationResult res =
                localize(frame, window_, model_, quantizer_, cfg_.kernel, cfg_.localization);
            window_ = res.finalWindow;
            rec.iterations = res.iterations;
            rec.displacements = res.displacements;
            rec.rho = res.finalRho;
        } catch (const TargetLostError&) {
            lost_ = true;
        }
    }
    rec.lost = lost_;

    const int n = cfg_.scale.periodN;
    if (usesScale() && !lost_ && n > 0 && frameIndex_ % n == 0) {
        scaleState_.i4 = cfg_.scale.evaluate(frame, window_, quantizer_);
        scaleState_.i5 =
            cfg_.scale.evaluate(frame, window_.scaled(1.0 + cfg_.scale.alpha), quantizer_);
        const double s = computeScaleFactor(scaleState_, cfg_.scale);
        scaleState_.i1 = scaleState_.i4;
        scaleState_.i2 = scaleState_.i5;
        rec.scaleFactor = s;

        if (usesTemplate() && s != 0.0) {
            // Models are captured CBWH-style at the pre-resize window.
            store_.recordCandidate(buildModelAt(frame, window_), frameIndex_);
            if (store_.changeCount() >= store_.config().dLimit) {
                rec.templateReplaced = store_.maybeReplace();
                if (rec.templateReplaced) {
                    model_ = store_.keyModel();
                }
            }
        }

        const bool permitted = updateCounters(scaleState_, s, cfg_.scale.limitL);
        if (s != 0.0 && permitted) {
            window_ = applyScale(window_, s, cfg_.scale.minExtentPx);
        }
    }

    rec.window = window_;
    return rec;
}

std::vector<FrameRecord> trackSequence(const std::vector<FrameImage>& frames,
                                       const TrackerConfig& cfg) {
    if (frames.empty()) {
        throw EmptySequenceError("sequence holds no frames");
    }
    Tracker tracker(frames.front(), cfg);
    std::vector<FrameRecord> records;
    records.reserve(frames.size());
    records.push_back(tracker.initialRecord());
    for (std::size_t i = 1; i < frames.size(); ++i) {
        records.push_back(tracker.processFrame(frames[i]));
    }
    return records;
}

} // namespace dmst
