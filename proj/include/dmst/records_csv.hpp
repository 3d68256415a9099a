#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dmst/metrics.hpp"
#include "dmst/tracker.hpp"

namespace dmst {

// Versioned per-frame log schema. Doubles are printed with 17 significant
// digits so re-reading reproduces the values exactly.
inline constexpr const char* kRecordsCsvHeader =
    "frame,cx,cy,w,h,iterations,cc,rho,s,replaced,lost";

std::string recordsCsvText(const std::vector<FrameRecord>& records, double minDist);
void writeRecordsCsv(const std::vector<FrameRecord>& records, double minDist,
                     const std::filesystem::path& path);

struct ParsedRecords {
    std::vector<double> cc;
    std::vector<int> iterations;
    std::vector<bool> lost;
    std::vector<Window> windows;
    std::vector<int> frameIndices;
};

ParsedRecords parseRecordsCsv(const std::filesystem::path& path);

std::string comparisonCsvText(const std::vector<ComparisonRow>& rows);
void writeComparisonCsv(const std::vector<ComparisonRow>& rows,
                        const std::filesystem::path& path);

void writeGroundTruthCsv(const std::vector<Window>& windows,
                         const std::filesystem::path& path);
std::vector<Window> parseGroundTruthCsv(const std::filesystem::path& path);

} // namespace dmst
