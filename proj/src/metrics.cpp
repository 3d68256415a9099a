#include "dmst/metrics.hpp"

#include <algorithm>
#include <cstdio>

namespace dmst {

double confidenceCoefficient(const FrameRecord& record, double minDist) {
    if (record.displacements.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (double ms : record.displacements) {
        sum += ms - minDist;
    }
    return sum / static_cast<double>(record.displacements.size());
}

namespace {

SequenceMetrics aggregate(std::vector<double> cc, double iterationSum, double lostCount) {
    SequenceMetrics m;
    m.frames = static_cast<int>(cc.size());
    double sum = 0.0;
    for (double c : cc) {
        sum += c;
    }
    m.mcc = sum / m.frames;
    double var = 0.0;
    for (double c : cc) {
        const double d = c - m.mcc;
        var += d * d;
    }
    m.nv = var / m.frames;
    m.meanIterations = iterationSum / m.frames;
    m.lossRate = lostCount / m.frames;
    m.perFrameCC = std::move(cc);
    return m;
}

} // namespace

SequenceMetrics sequenceMetrics(const std::vector<FrameRecord>& records, double minDist) {
    if (records.empty()) {
        throw EmptySequenceError("no frame records");
    }
    std::vector<double> cc;
    cc.reserve(records.size());
    double iterationSum = 0.0;
    double lostCount = 0.0;
    for (const FrameRecord& r : records) {
        cc.push_back(confidenceCoefficient(r, minDist));
        iterationSum += r.iterations;
        lostCount += r.lost ? 1.0 : 0.0;
    }
    return aggregate(std::move(cc), iterationSum, lostCount);
}

SequenceMetrics sequenceMetricsFromCC(const std::vector<double>& perFrameCC,
                                      const std::vector<int>& iterations,
                                      const std::vector<bool>& lost) {
    if (perFrameCC.empty()) {
        throw EmptySequenceError("no frame records");
    }
    double iterationSum = 0.0;
    for (int it : iterations) {
        iterationSum += it;
    }
    double lostCount = 0.0;
    for (bool l : lost) {
        lostCount += l ? 1.0 : 0.0;
    }
    return aggregate(perFrameCC, iterationSum, lostCount);
}

std::vector<ComparisonRow>
comparisonTable(const std::vector<std::pair<TrackerVariant, SequenceMetrics>>& entries) {
    static constexpr TrackerVariant kOrder[] = {
        TrackerVariant::ClassicMS,
        TrackerVariant::Cbwh,
        TrackerVariant::SelfAdapt,
        TrackerVariant::Dmst,
    };
    std::vector<ComparisonRow> rows;
    for (TrackerVariant v : kOrder) {
        for (const auto& [variant, metrics] : entries) {
            if (variant != v) {
                continue;
            }
            rows.push_back(ComparisonRow{variantName(variant), metrics.mcc, metrics.nv,
                                         metrics.meanIterations, metrics.lossRate});
        }
    }
    return rows;
}

std::string formatComparisonText(const std::vector<ComparisonRow>& rows) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-12s %-12s %-12s %-10s %-8s\n", "ALGORITHMS", "MCC",
                  "NV", "ITERATION", "LOST");
    out += line;
    for (const ComparisonRow& r : rows) {
        std::snprintf(line, sizeof(line), "%-12s %-12.6g %-12.6g %-10.5g %-8.4g\n",
                      r.algorithm.c_str(), r.mcc, r.nv, r.meanIterations, r.lossRate);
        out += line;
    }
    return out;
}

} // namespace dmst
