// Command-line front end: growth analysis of a representation given in the
// micro-format (e.g. "A3: std + dual(std)"), density expansion, numeric
// growth experiments, and the acceptance checklist.
#include <CLI11.hpp>

#include "haarlim/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"growth analysis of semisimple matrix balls via weight polytopes"};

    haarlim::RunConfig cfg;
    std::string cmd = "analyze";
    app.add_option("--cmd", cmd, "analyze | expand-sinh | haar-volume | count-lattice | orbit-dist | verify")
        ->required();
    app.add_option("--rep", cfg.repExpr, "representation description, e.g. \"A3: std + dual(std)\"");
    app.add_option("--out", cfg.outDir, "output directory (default: out)");
    auto* optTmin = app.add_option("--tmin", cfg.tMin, "smallest T of a series");
    auto* optTmax = app.add_option("--tmax", cfg.tMax, "largest T of a series (also the orbit radius)");
    auto* optSteps = app.add_option("--steps", cfg.steps, "number of series samples");
    app.add_option("--resolution", cfg.resolution, "grid resolution per axis for quadrature");
    app.add_option("--norm", cfg.norm, "frobenius | supEntry | adjointSup | product");
    app.add_option("--bins", cfg.bins, "polar histogram bins per axis");
    app.add_flag("--optimize-frame", cfg.optimizeFrame, "search all frame choices for the best constants");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.command = haarlim::command_from_name(cmd);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    // per-command T defaults chosen to keep the default run desk sized
    if (cfg.command == haarlim::Command::countLattice) {
        if (!optTmin->count()) cfg.tMin = 50;
        if (!optTmax->count()) cfg.tMax = 800;
        if (!optSteps->count()) cfg.steps = 10;
    } else if (cfg.command == haarlim::Command::orbitDist) {
        if (!optTmax->count()) cfg.tMax = 500;
    }
    bool needsRep = cfg.command == haarlim::Command::analyze || cfg.command == haarlim::Command::expandSinh ||
                    cfg.command == haarlim::Command::haarVolume;
    if (needsRep && cfg.repExpr.empty()) {
        std::cerr << "error: --rep is required for this command\n";
        return 2;
    }
    return haarlim::run(cfg);
}
