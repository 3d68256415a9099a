#include "dmst/records_csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dmst {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> splitCsvLine(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(tok);
    }
    return out;
}

void writeText(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw WriteError("cannot open " + path.string() + " for writing");
    }
    out << text;
    if (!out) {
        throw WriteError("failed writing " + path.string());
    }
}

} // namespace

std::string recordsCsvText(const std::vector<FrameRecord>& records, double minDist) {
    std::string text = std::string(kRecordsCsvHeader) + "\n";
    for (const FrameRecord& r : records) {
        text += std::to_string(r.frameIndex);
        text += ',' + fmt(r.window.cx) + ',' + fmt(r.window.cy);
        text += ',' + fmt(r.window.width()) + ',' + fmt(r.window.height());
        text += ',' + std::to_string(r.iterations);
        text += ',' + fmt(confidenceCoefficient(r, minDist));
        text += ',' + fmt(r.rho);
        text += ',' + fmt(r.scaleFactor);
        text += r.templateReplaced ? ",1" : ",0";
        text += r.lost ? ",1\n" : ",0\n";
    }
    return text;
}

void writeRecordsCsv(const std::vector<FrameRecord>& records, double minDist,
                     const std::filesystem::path& path) {
    writeText(recordsCsvText(records, minDist), path);
}

ParsedRecords parseRecordsCsv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DecodeError("cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line != kRecordsCsvHeader) {
        throw DecodeError(path.string() + ": unexpected records CSV header");
    }
    ParsedRecords out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cols = splitCsvLine(line);
        if (cols.size() != 11) {
            throw DecodeError(path.string() + ": malformed row '" + line + "'");
        }
        out.frameIndices.push_back(std::stoi(cols[0]));
        const double cx = std::stod(cols[1]);
        const double cy = std::stod(cols[2]);
        const double w = std::stod(cols[3]);
        const double h = std::stod(cols[4]);
        out.windows.push_back(Window{cx, cy, w / 2.0, h / 2.0});
        out.iterations.push_back(std::stoi(cols[5]));
        out.cc.push_back(std::stod(cols[6]));
        out.lost.push_back(cols[10] == "1");
    }
    if (out.cc.empty()) {
        throw EmptySequenceError(path.string() + ": no data rows");
    }
    return out;
}

std::string comparisonCsvText(const std::vector<ComparisonRow>& rows) {
    std::string text = "algorithm,mcc,nv,iteration,loss_rate\n";
    for (const ComparisonRow& r : rows) {
        text += r.algorithm;
        text += ',' + fmt(r.mcc) + ',' + fmt(r.nv) + ',' + fmt(r.meanIterations) + ',' +
                fmt(r.lossRate) + '\n';
    }
    return text;
}

void writeComparisonCsv(const std::vector<ComparisonRow>& rows,
                        const std::filesystem::path& path) {
    writeText(comparisonCsvText(rows), path);
}

void writeGroundTruthCsv(const std::vector<Window>& windows,
                         const std::filesystem::path& path) {
    std::string text = "frame,cx,cy,w,h\n";
    int index = 1;
    for (const Window& w : windows) {
        text += std::to_string(index++);
        text += ',' + fmt(w.cx) + ',' + fmt(w.cy) + ',' + fmt(w.width()) + ',' +
                fmt(w.height()) + '\n';
    }
    writeText(text, path);
}

std::vector<Window> parseGroundTruthCsv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DecodeError("cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line != "frame,cx,cy,w,h") {
        throw DecodeError(path.string() + ": unexpected ground-truth CSV header");
    }
    std::vector<Window> out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cols = splitCsvLine(line);
        if (cols.size() != 5) {
            throw DecodeError(path.string() + ": malformed row '" + line + "'");
        }
        out.push_back(Window{std::stod(cols[1]), std::stod(cols[2]), std::stod(cols[3]) / 2.0,
                             std::stod(cols[4]) / 2.0});
    }
    return out;
}

} // namespace dmst
