#include "dmst/template_update.hpp"

#include <algorithm>
#include <utility>

#include "dmst/kernels.hpp"

namespace dmst {

double matchingErrorL2(const WeightedHistogram& a, const WeightedHistogram& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError("histogram bin counts differ");
    }
    return kernels::ops().squaredDistance(a.data(), b.data(), a.size());
}

TemplateStore::TemplateStore(WeightedHistogram initialModel, TemplateConfig cfg)
    : keyModel_(initialModel), initialModel_(std::move(initialModel)), theta_(cfg.theta0),
      cfg_(cfg) {}

void TemplateStore::recordCandidate(WeightedHistogram model, int frameIndex) {
    stored_.push_back(Stored{std::move(model), frameIndex});
    while (static_cast<int>(stored_.size()) > cfg_.dLimit) {
        stored_.pop_front();
    }
    ++d_;
}

bool TemplateStore::maybeReplace() {
    if (stored_.empty()) {
        throw EmptyStoreError("no candidate models recorded");
    }
    // Best representative of the set: highest similarity to the current key
    // model (the lowest-error pick, with error = 1 - rho).
    const Stored* best = &stored_.front();
    double bestRho = bhattacharyya(best->model, keyModel_);
    for (const Stored& s : stored_) {
        const double rho = bhattacharyya(s.model, keyModel_);
        if (rho > bestRho) {
            bestRho = rho;
            best = &s;
        }
    }

    const double rhoOld = bhattacharyya(keyModel_, initialModel_);
    const double rhoNew = bhattacharyya(best->model, initialModel_);
    bool replaced = false;
    if (rhoNew <= theta_) {
        keyModel_ = best->model;
        theta_ = std::clamp(theta_ - (rhoOld - rhoNew), cfg_.thetaMin, cfg_.thetaMax);
        replaced = true;
    }
    d_ = 0;
    stored_.clear();
    return replaced;
}

} // namespace dmst
