#pragma once

#include <deque>

#include "dmst/histogram.hpp"

namespace dmst {

struct TemplateConfig {
    double theta0 = 0.8;   // initial similarity threshold
    double thetaMin = 0.5; // clamp bounds for the adaptive threshold
    double thetaMax = 0.95;
    int dLimit = 3; // scale-change events between evaluations
};

// Sum of squared elementwise differences. The replaced matching criterion,
// kept to validate the substitution by the Bhattacharyya coefficient.
double matchingErrorL2(const WeightedHistogram& a, const WeightedHistogram& b);

// Holds the active key model, the frozen first-frame model, and the models
// captured at scale-change events. When the change counter D reaches its
// limit, the best-matching stored model may replace the key model and the
// threshold adapts by the similarity drop.
class TemplateStore {
public:
    TemplateStore() = default;
    TemplateStore(WeightedHistogram initialModel, TemplateConfig cfg);

    // Appends a captured model (evicting the oldest beyond dLimit) and
    // increments D.
    void recordCandidate(WeightedHistogram model, int frameIndex);

    // Evaluates the stored set against the initial model: the stored model
    // closest to the current key model becomes the new key when its
    // similarity to the initial model has dropped to the threshold or below.
    // Resets D and clears the store either way. Returns whether the key
    // model was replaced. Throws EmptyStoreError when nothing was recorded.
    bool maybeReplace();

    const WeightedHistogram& keyModel() const { return keyModel_; }
    const WeightedHistogram& initialModel() const { return initialModel_; }
    double theta() const { return theta_; }
    int changeCount() const { return d_; }
    int storedCount() const { return static_cast<int>(stored_.size()); }
    const TemplateConfig& config() const { return cfg_; }

private:
    struct Stored {
        WeightedHistogram model;
        int frameIndex = 0;
    };

    WeightedHistogram keyModel_;
    WeightedHistogram initialModel_;
    std::deque<Stored> stored_;
    int d_ = 0;
    double theta_ = 0.8;
    TemplateConfig cfg_{};
};

} // namespace dmst
