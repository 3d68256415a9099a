#include "dmst/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dmst/config.hpp"
#include "dmst/image_io.hpp"
#include "dmst/metrics.hpp"
#include "dmst/records_csv.hpp"
#include "dmst/synthetic.hpp"
#include "dmst/tracker.hpp"

namespace dmst {

namespace fs = std::filesystem;

namespace {

Window parseInitWindow(const std::string& text) {
    // x,y,w,h: top-left corner plus full size, as drawn on the first frame.
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        parts.push_back(std::stod(tok));
    }
    if (parts.size() != 4 || parts[2] <= 0 || parts[3] <= 0) {
        throw ConfigError("--init expects x,y,w,h with positive size");
    }
    return Window{parts[0] + parts[2] / 2.0, parts[1] + parts[3] / 2.0, parts[2] / 2.0,
                  parts[3] / 2.0};
}

std::map<std::string, std::string> parseOverrides(const std::vector<std::string>& sets) {
    std::map<std::string, std::string> out;
    for (const std::string& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ConfigError("--set expects key=value, got '" + s + "'");
        }
        out[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return out;
}

std::string frameName(int index, const char* ext) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%06d.%s", index, ext);
    return buf;
}

void printMetrics(const SequenceMetrics& m) {
    std::printf("frames=%d\n", m.frames);
    std::printf("mcc=%.17g\n", m.mcc);
    std::printf("nv=%.17g\n", m.nv);
    std::printf("mean_iterations=%.17g\n", m.meanIterations);
    std::printf("loss_rate=%.17g\n", m.lossRate);
}

int cmdSynth(const std::string& specPath, const std::string& outDir, const std::string& format) {
    std::ifstream in(specPath);
    if (!in) {
        throw SpecError("cannot open spec file " + specPath);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    const SyntheticSpec spec = SyntheticSpec::fromJsonText(ss.str());
    const SyntheticSequence seq = generateSynthetic(spec);

    fs::create_directories(outDir);
    const bool png = format == "png";
    for (std::size_t i = 0; i < seq.frames.size(); ++i) {
        const fs::path path =
            fs::path(outDir) / frameName(static_cast<int>(i) + 1, png ? "png" : "ppm");
        if (png) {
            savePng(seq.frames[i], path);
        } else {
            savePpm(seq.frames[i], path);
        }
    }
    writeGroundTruthCsv(seq.groundTruth, fs::path(outDir) / "ground_truth.csv");
    std::ofstream echo(fs::path(outDir) / "spec.json");
    echo << spec.toJsonText();
    std::printf("wrote %zu frames to %s\n", seq.frames.size(), outDir.c_str());
    return 0;
}

int cmdTrack(const std::string& seqDir, const std::string& outDir, const std::string& variantName,
             const std::string& initText, const std::optional<fs::path>& configFile,
             const std::vector<std::string>& sets, bool overlay) {
    const auto variant = parseVariant(variantName);
    if (!variant) {
        throw ConfigError("unknown variant '" + variantName + "'");
    }
    const AppConfig app = AppConfig::resolve(configFile, parseOverrides(sets));
    const Window init = parseInitWindow(initText);

    const std::vector<FrameImage> frames = loadSequence(seqDir);
    const std::vector<FrameRecord> records =
        trackSequence(frames, app.trackerConfig(*variant, init));

    fs::create_directories(outDir);
    writeRecordsCsv(records, app.minDist, fs::path(outDir) / "records.csv");
    if (overlay) {
        const fs::path dir = fs::path(outDir) / "overlays";
        fs::create_directories(dir);
        for (std::size_t i = 0; i < records.size(); ++i) {
            renderOverlay(frames[i], records[i].window,
                          dir / frameName(static_cast<int>(i) + 1, "png"));
        }
    }
    printMetrics(sequenceMetrics(records, app.minDist));
    return 0;
}

int cmdCompare(const std::string& seqDir, const std::string& outDir,
               const std::string& variantsCsv, const std::string& initText,
               const std::optional<fs::path>& configFile, const std::vector<std::string>& sets) {
    std::vector<TrackerVariant> variants;
    std::stringstream ss(variantsCsv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const auto v = parseVariant(name);
        if (!v) {
            throw ConfigError("unknown variant '" + name + "'");
        }
        variants.push_back(*v);
    }
    if (variants.empty()) {
        throw ConfigError("--variants selects no tracker");
    }

    const AppConfig app = AppConfig::resolve(configFile, parseOverrides(sets));
    const Window init = parseInitWindow(initText);
    const std::vector<FrameImage> frames = loadSequence(seqDir);

    fs::create_directories(outDir);
    std::vector<std::pair<TrackerVariant, SequenceMetrics>> entries;
    for (TrackerVariant v : variants) {
        const std::vector<FrameRecord> records =
            trackSequence(frames, app.trackerConfig(v, init));
        writeRecordsCsv(records, app.minDist,
                        fs::path(outDir) / (std::string("records_") + dmst::variantName(v) +
                                            ".csv"));
        entries.emplace_back(v, sequenceMetrics(records, app.minDist));
    }
    const std::vector<ComparisonRow> rows = comparisonTable(entries);
    writeComparisonCsv(rows, fs::path(outDir) / "comparison.csv");
    const std::string table = formatComparisonText(rows);
    std::ofstream txt(fs::path(outDir) / "comparison.txt");
    txt << table;
    std::fputs(table.c_str(), stdout);
    return 0;
}

int cmdEval(const std::string& csvPath) {
    const ParsedRecords parsed = parseRecordsCsv(csvPath);
    printMetrics(sequenceMetricsFromCC(parsed.cc, parsed.iterations, parsed.lost));
    return 0;
}

} // namespace

int runCli(const std::vector<std::string>& args) {
    CLI::App app{"Mean-shift object tracking toolkit (classic / CBWH / self-adapt / DMST)"};
    app.require_subcommand(1);

    std::string specPath, seqDir, outDir, csvPath;
    std::string variant = "dmst";
    std::string variants = "classic,cbwh,selfadapt,dmst";
    std::string init;
    std::string format = "ppm";
    std::string configPath;
    std::vector<std::string> sets;
    bool overlay = false;

    CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic frame sequence");
    synth->add_option("spec", specPath, "Synthetic spec JSON file")->required();
    synth->add_option("outdir", outDir, "Output directory")->required();
    synth->add_option("--format", format, "Frame format: ppm|png")
        ->check(CLI::IsMember({"ppm", "png"}));

    CLI::App* track = app.add_subcommand("track", "Track one sequence with one variant");
    track->add_option("seqdir", seqDir, "Directory of numbered .ppm/.png frames")->required();
    track->add_option("outdir", outDir, "Output directory")->required();
    track->add_option("--variant", variant, "classic|cbwh|selfadapt|dmst");
    track->add_option("--init", init, "Initial window as x,y,w,h")->required();
    track->add_option("--config", configPath, "Config JSON file (else $DMST_CONFIG)");
    track->add_option("--set", sets, "Config override key=value (repeatable)");
    track->add_flag("--overlay", overlay, "Write per-frame overlay PNGs");

    CLI::App* compare = app.add_subcommand("compare", "Run several variants and tabulate");
    compare->add_option("seqdir", seqDir, "Directory of numbered .ppm/.png frames")->required();
    compare->add_option("outdir", outDir, "Output directory")->required();
    compare->add_option("--variants", variants, "Comma-separated variant list");
    compare->add_option("--init", init, "Initial window as x,y,w,h")->required();
    compare->add_option("--config", configPath, "Config JSON file (else $DMST_CONFIG)");
    compare->add_option("--set", sets, "Config override key=value (repeatable)");

    CLI::App* eval = app.add_subcommand("eval", "Recompute MCC/NV from a records CSV");
    eval->add_option("records", csvPath, "records.csv produced by `track`")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        std::optional<fs::path> configFile;
        if (!configPath.empty()) {
            configFile = fs::path(configPath);
        }
        if (synth->parsed()) {
            return cmdSynth(specPath, outDir, format);
        }
        if (track->parsed()) {
            return cmdTrack(seqDir, outDir, variant, init, configFile, sets, overlay);
        }
        if (compare->parsed()) {
            return cmdCompare(seqDir, outDir, variants, init, configFile, sets);
        }
        if (eval->parsed()) {
            return cmdEval(csvPath);
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

} // namespace dmst
