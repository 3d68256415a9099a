#include "dmst/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dmst {

namespace {

using json = nlohmann::json;

std::vector<int> parseScaleList(const std::string& value) {
    std::vector<int> out;
    std::stringstream ss(value);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) {
            out.push_back(std::stoi(tok));
        }
    }
    if (out.empty()) {
        throw ConfigError("msiim_scales needs at least one factor");
    }
    return out;
}

} // namespace

void AppConfig::applyJsonText(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid config JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "bins") {
                bins = value.get<int>();
            } else if (key == "min_dist") {
                minDist = value.get<double>();
            } else if (key == "max_iterations") {
                maxIterations = value.get<int>();
            } else if (key == "alpha") {
                alpha = value.get<double>();
            } else if (key == "beta") {
                beta = value.get<double>();
            } else if (key == "scale_period_n") {
                scalePeriodN = value.get<int>();
            } else if (key == "scale_limit_l") {
                scaleLimitL = value.get<int>();
            } else if (key == "scale_clamp") {
                scaleClamp = value.get<double>();
            } else if (key == "min_extent_px") {
                minExtentPx = value.get<double>();
            } else if (key == "msiim_scales") {
                msiimScales = value.get<std::vector<int>>();
            } else if (key == "msiim_measure") {
                msiimMeasure = value.get<std::string>();
            } else if (key == "theta0") {
                theta0 = value.get<double>();
            } else if (key == "theta_min") {
                thetaMin = value.get<double>();
            } else if (key == "theta_max") {
                thetaMax = value.get<double>();
            } else if (key == "d_limit") {
                dLimit = value.get<int>();
            } else if (key == "background_ratio") {
                backgroundRatio = value.get<double>();
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        } catch (const json::exception& e) {
            throw ConfigError("bad value for '" + key + "': " + e.what());
        }
    }
}

void AppConfig::applyOverride(const std::string& key, const std::string& value) {
    try {
        if (key == "bins") {
            bins = std::stoi(value);
        } else if (key == "min_dist") {
            minDist = std::stod(value);
        } else if (key == "max_iterations") {
            maxIterations = std::stoi(value);
        } else if (key == "alpha") {
            alpha = std::stod(value);
        } else if (key == "beta") {
            beta = std::stod(value);
        } else if (key == "scale_period_n") {
            scalePeriodN = std::stoi(value);
        } else if (key == "scale_limit_l") {
            scaleLimitL = std::stoi(value);
        } else if (key == "scale_clamp") {
            scaleClamp = std::stod(value);
        } else if (key == "min_extent_px") {
            minExtentPx = std::stod(value);
        } else if (key == "msiim_scales") {
            msiimScales = parseScaleList(value);
        } else if (key == "msiim_measure") {
            msiimMeasure = value;
        } else if (key == "theta0") {
            theta0 = std::stod(value);
        } else if (key == "theta_min") {
            thetaMin = std::stod(value);
        } else if (key == "theta_max") {
            thetaMax = std::stod(value);
        } else if (key == "d_limit") {
            dLimit = std::stoi(value);
        } else if (key == "background_ratio") {
            backgroundRatio = std::stod(value);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad value for '" + key + "': " + value);
    } catch (const std::out_of_range&) {
        throw ConfigError("value out of range for '" + key + "': " + value);
    }
}

AppConfig AppConfig::resolve(const std::optional<std::filesystem::path>& file,
                             const std::map<std::string, std::string>& overrides) {
    AppConfig cfg;
    std::optional<std::filesystem::path> chosen = file;
    if (!chosen) {
        if (const char* env = std::getenv("DMST_CONFIG")) {
            chosen = std::filesystem::path(env);
        }
    }
    if (chosen) {
        std::ifstream in(*chosen);
        if (!in) {
            throw ConfigError("cannot open config file " + chosen->string());
        }
        std::stringstream ss;
        ss << in.rdbuf();
        cfg.applyJsonText(ss.str());
    }
    for (const auto& [key, value] : overrides) {
        cfg.applyOverride(key, value);
    }
    if (cfg.bins < 1 || cfg.bins > 256) {
        throw ConfigError("bins must be in [1, 256]");
    }
    if (cfg.minDist <= 0.0 || cfg.maxIterations < 1) {
        throw ConfigError("min_dist must be > 0 and max_iterations >= 1");
    }
    if (cfg.alpha <= 0.0 || cfg.beta <= 0.0 || cfg.scaleLimitL < 1 || cfg.scalePeriodN < 0) {
        throw ConfigError("scale parameters out of range");
    }
    if (cfg.msiimMeasure != "detail" && cfg.msiimMeasure != "entropy") {
        throw ConfigError("msiim_measure must be detail|entropy");
    }
    return cfg;
}

std::string AppConfig::toJsonText() const {
    json j;
    j["bins"] = bins;
    j["min_dist"] = minDist;
    j["max_iterations"] = maxIterations;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["scale_period_n"] = scalePeriodN;
    j["scale_limit_l"] = scaleLimitL;
    j["scale_clamp"] = scaleClamp;
    j["min_extent_px"] = minExtentPx;
    j["msiim_scales"] = msiimScales;
    j["msiim_measure"] = msiimMeasure;
    j["theta0"] = theta0;
    j["theta_min"] = thetaMin;
    j["theta_max"] = thetaMax;
    j["d_limit"] = dLimit;
    j["background_ratio"] = backgroundRatio;
    return j.dump(2) + "\n";
}

TrackerConfig AppConfig::trackerConfig(TrackerVariant variant, const Window& initialWindow) const {
    TrackerConfig cfg;
    cfg.variant = variant;
    cfg.initialWindow = initialWindow;
    cfg.binsPerChannel = bins;
    cfg.localization.minDist = minDist;
    cfg.localization.maxIterations = maxIterations;
    cfg.scale.alpha = alpha;
    cfg.scale.beta = beta;
    cfg.scale.periodN = scalePeriodN;
    cfg.scale.limitL = scaleLimitL;
    cfg.scale.clampS = scaleClamp;
    cfg.scale.minExtentPx = minExtentPx;
    cfg.scale.msiim.factors = msiimScales;
    cfg.scale.measure = msiimMeasure == "entropy" ? InformationKind::ColorEntropy
                                                  : InformationKind::DetailDensity;
    cfg.templateUpdate.theta0 = theta0;
    cfg.templateUpdate.thetaMin = thetaMin;
    cfg.templateUpdate.thetaMax = thetaMax;
    cfg.templateUpdate.dLimit = dLimit;
    cfg.backgroundRingScale = backgroundRatio;
    return cfg;
}

} // namespace dmst
