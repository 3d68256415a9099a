#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmst/tracker.hpp"

namespace dmst {

// Every paper-unspecified constant lives here, resolvable from (highest
// precedence first) a CLI override, a JSON config file, or the built-in
// default. The config file is a flat JSON object keyed by the names below.
struct AppConfig {
    int bins = 16;                // quantizer bins per channel
    double minDist = 0.5;         // localization exit threshold (px)
    int maxIterations = 20;       // localization iteration cap
    double alpha = 0.1;           // scale: enlargement factor
    double beta = 1.0;            // scale: background-elimination parameter
    int scalePeriodN = 10;        // scale: frames between checks; 0 disables
    int scaleLimitL = 5;          // scale: direction-count limit
    double scaleClamp = 0.2;      // scale: |S| bound
    double minExtentPx = 4.0;     // scale: floor on each half-extent
    std::vector<int> msiimScales{1, 2, 4};
    std::string msiimMeasure = "detail"; // detail | entropy
    double theta0 = 0.8;          // template: initial threshold
    double thetaMin = 0.5;        // template: threshold clamp bounds
    double thetaMax = 0.95;
    int dLimit = 3;               // template: change-count limit
    double backgroundRatio = 2.0; // background ring enlargement per axis

    // Resolution order: overrides > file (explicit path, else $DMST_CONFIG)
    // > defaults. Throws ConfigError on unknown keys or bad values.
    static AppConfig resolve(const std::optional<std::filesystem::path>& file,
                             const std::map<std::string, std::string>& overrides);

    void applyJsonText(const std::string& text);
    void applyOverride(const std::string& key, const std::string& value);

    std::string toJsonText() const;

    TrackerConfig trackerConfig(TrackerVariant variant, const Window& initialWindow) const;
};

} // namespace dmst
