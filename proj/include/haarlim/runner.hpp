// Batch front door used by the command-line tool: parse a representation
// description, run one command, write canonical JSON and CSV artifacts.
#pragma once

#include <filesystem>
#include <iostream>

#include "haarlim/json_io.hpp"
#include "haarlim/repparse.hpp"
#include "haarlim/verify.hpp"

namespace haarlim {

enum class Command { analyze, expandSinh, haarVolume, countLattice, orbitDist, verify };

struct RunConfig {
    Command command = Command::analyze;
    std::string repExpr;
    std::string outDir = "out";
    double tMin = 100;
    double tMax = 10000;
    int steps = 12;
    int resolution = 900;
    std::string norm = "frobenius";  // frobenius | supEntry | adjointSup | product
    int bins = 24;
    bool optimizeFrame = false;
    std::ostream* log = &std::cout;
};

inline Command command_from_name(const std::string& name) {
    if (name == "analyze") return Command::analyze;
    if (name == "expand-sinh") return Command::expandSinh;
    if (name == "haar-volume") return Command::haarVolume;
    if (name == "count-lattice") return Command::countLattice;
    if (name == "orbit-dist") return Command::orbitDist;
    if (name == "verify") return Command::verify;
    throw std::invalid_argument("unknown command: " + name);
}

namespace detail {

inline Representation parsed_and_valid(const std::string& expr) {
    Representation rep = parse_rep_expr(expr);
    Diagnostics diag = validate(rep);
    if (!diag.ok()) throw std::invalid_argument("invalid representation '" + expr + "': " + diag.failure());
    return rep;
}

}  // namespace detail

/// Execute one command; artifacts land in config.outDir. Returns the process
/// exit status: nonzero when any check fails or an input is invalid.
inline int run(const RunConfig& cfg) {
    namespace fs = std::filesystem;
    std::ostream& log = *cfg.log;
    try {
        fs::create_directories(cfg.outDir);
        auto out = [&](const std::string& name) { return (fs::path(cfg.outDir) / name).string(); };

        switch (cfg.command) {
            case Command::analyze: {
                Representation rep = detail::parsed_and_valid(cfg.repExpr);
                AnalyzeOptions opts;
                opts.optimizeFrame = cfg.optimizeFrame;
                GrowthReport rpt = analyze(rep, opts);
                write_json(out("report.json"), report_to_json(rpt, cfg.repExpr));
                log << "report.json written: d = " << rpt.d << ", e = " << rpt.e << "\n";
                return 0;
            }
            case Command::expandSinh: {
                Representation rep = detail::parsed_and_valid(cfg.repExpr);
                write_json(out("expsum.json"), to_json(expand(*rep.rs)));
                log << "expsum.json written\n";
                return 0;
            }
            case Command::haarVolume: {
                Representation rep = detail::parsed_and_valid(cfg.repExpr);
                auto series = haar_volume_series(rep, cfg.tMin, cfg.tMax, cfg.steps, cfg.resolution,
                                                 "haar-volume " + cfg.repExpr);
                write_series_csv(out("haar_volume.csv"), series);
                auto fit = fit_growth(series, rep.rs->rank());
                write_json(out("haar_volume_fit.json"), fit_to_json(fit));
                log << "haar_volume.csv and fit written: dHat = " << fit.dHat << ", eHat = " << fit.eHat << "\n";
                return 0;
            }
            case Command::countLattice: {
                CountSeries series;
                if (cfg.norm == "product") {
                    series = product_count_series(cfg.tMin, cfg.tMax, cfg.steps);
                } else {
                    MatrixNorm norm = cfg.norm == "supEntry"     ? MatrixNorm::supEntry
                                      : cfg.norm == "adjointSup" ? MatrixNorm::adjointSup
                                                                 : MatrixNorm::frobenius;
                    series = lattice_count_series(cfg.tMin, cfg.tMax, cfg.steps, norm, "lattice-count " + cfg.norm);
                }
                write_series_csv(out("lattice_count.csv"), series);
                auto fit = fit_growth(series, 1);
                write_json(out("lattice_count_fit.json"), fit_to_json(fit));
                log << "lattice_count.csv and fit written: dHat = " << fit.dHat << "\n";
                return 0;
            }
            case Command::orbitDist: {
                auto h = orbit_distribution({1.0, 0.0}, cfg.tMax, cfg.bins);
                write_histogram_csv(out("orbit_hist.csv"), h, "orbit-distribution T=" + std::to_string(cfg.tMax));
                json j;
                j["tvDistance"] = h.tvDistance;
                j["count"] = h.count;
                j["maxRadiusRatio"] = h.maxRadiusRatio;
                j["bins"] = h.bins;
                write_json(out("orbit_summary.json"), j);
                log << "orbit_hist.csv written: TV distance " << h.tvDistance << "\n";
                return 0;
            }
            case Command::verify: {
                auto results = run_acceptance();
                bool allPass = true;
                for (const auto& r : results) {
                    log << "criterion " << r.id << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL") << " ("
                        << r.seconds << "s)";
                    if (!r.detail.empty()) log << " - " << r.detail;
                    log << "\n";
                    allPass = allPass && r.pass;
                }
                log << (allPass ? "all criteria passed" : "some criteria failed") << "\n";
                return allPass ? 0 : 1;
            }
        }
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace haarlim
