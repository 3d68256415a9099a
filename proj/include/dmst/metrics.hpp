#pragma once

#include <string>
#include <vector>

#include "dmst/tracker.hpp"

namespace dmst {

struct SequenceMetrics {
    double mcc = 0.0;
    double nv = 0.0;
    double meanIterations = 0.0;
    int frames = 0;
    std::vector<double> perFrameCC;
    double lossRate = 0.0; // fraction of frames with the lost flag set
};

// Confidence coefficient of one frame: the mean excess step length over
// MinDist across the frame's iterations. Frames that converged with no
// recorded step contribute 0.
double confidenceCoefficient(const FrameRecord& record, double minDist);

// MCC = mean(CC), NV = population variance of CC about MCC.
// Throws EmptySequenceError on an empty log.
SequenceMetrics sequenceMetrics(const std::vector<FrameRecord>& records, double minDist);

// Same aggregation from a bare CC/iteration log (the CSV re-evaluation path).
SequenceMetrics sequenceMetricsFromCC(const std::vector<double>& perFrameCC,
                                      const std::vector<int>& iterations,
                                      const std::vector<bool>& lost);

struct ComparisonRow {
    std::string algorithm;
    double mcc = 0.0;
    double nv = 0.0;
    double meanIterations = 0.0;
    double lossRate = 0.0;
};

// Rows in the declared algorithm order: classic, cbwh, selfadapt, dmst.
std::vector<ComparisonRow>
comparisonTable(const std::vector<std::pair<TrackerVariant, SequenceMetrics>>& entries);

// Aligned text table, columns ALGORITHMS / MCC / NV / ITERATION / LOST.
std::string formatComparisonText(const std::vector<ComparisonRow>& rows);

} // namespace dmst
