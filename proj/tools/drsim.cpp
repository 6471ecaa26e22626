// drsim: run, compare, partition and analytic front end.

#include "drsim/analytic.hpp"
#include "drsim/config.hpp"
#include "drsim/csv.hpp"
#include "drsim/geometry.hpp"
#include "drsim/sim.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace drsim;

namespace {

struct Invocation {
    std::string subcommand;
    fs::path config_path;
    fs::path output_dir;
    std::vector<std::string> overrides;
};

// Fails before any computation if the directory cannot hold our outputs.
void prepare_output_dir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory " + dir.string());
    }
    const fs::path probe = dir / ".drsim-write-probe";
    {
        std::ofstream out(probe);
        if (!out) throw std::runtime_error("output directory " + dir.string() + " is not writable");
    }
    fs::remove(probe, ec);
}

int dispatch(const Invocation& inv)
{
    const SimConfig config = parse_config(inv.config_path, inv.overrides);
    prepare_output_dir(inv.output_dir);

    if (inv.subcommand == "run") {
        const RunResult result = run(config);
        write_file_atomically(inv.output_dir / "run.csv", [&](std::ostream& o) { write_run_csv(o, result.series); });
        write_file_atomically(inv.output_dir / "summary.txt",
                              [&](std::ostream& o) { write_run_summary(o, config, result.summary); });
        write_run_summary(std::cout, config, result.summary);
    } else if (inv.subcommand == "compare") {
        const ExperimentResult result = experiment(config);
        write_file_atomically(inv.output_dir / "experiment.csv",
                              [&](std::ostream& o) { write_experiment_csv(o, result.runs); });
        write_file_atomically(inv.output_dir / "summary.txt",
                              [&](std::ostream& o) { write_experiment_summary(o, config, result); });
        write_experiment_summary(std::cout, config, result);
    } else if (inv.subcommand == "partition") {
        const FieldPartition fp = build_partition(config.field_length, config.n_rings);
        write_file_atomically(inv.output_dir / "partition.csv",
                              [&](std::ostream& o) { write_partition_csv(o, fp); });
        std::cout << fp.size() << " regions written to " << (inv.output_dir / "partition.csv").string() << "\n";
    } else if (inv.subcommand == "analytic") {
        SweepSpec spec;
        spec.field_length = config.field_length;
        spec.rings = config.n_rings;
        spec.bits = config.packet_bits;
        spec.radio = config.radio;
        spec.distance = config.analytic_distance;
        const double rho = config.node_count / (config.field_length * config.field_length);
        spec.rho_values = {0.5 * rho, rho, 2.0 * rho};
        for (int i = 0; i <= 10; ++i) spec.p_values.push_back(i / 10.0);
        const auto rows = analytic_sweep(spec);
        write_file_atomically(inv.output_dir / "analytic.csv", [&](std::ostream& o) { write_analytic_csv(o, rows); });
        std::cout << rows.size() << " sweep rows written to " << (inv.output_dir / "analytic.csv").string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Divide-and-Rule WSN routing simulator with LEACH / LEACH-C baselines"};
    app.require_subcommand(1);

    Invocation inv;
    for (const char* name : {"run", "compare", "partition", "analytic"}) {
        const char* help = std::string(name) == "run"         ? "single seeded run: run.csv + summary.txt"
                           : std::string(name) == "compare"   ? "DR, LEACH-C and LEACH over `runs` seeds"
                           : std::string(name) == "partition" ? "region geometry: partition.csv"
                                                              : "closed-form energy sweep: analytic.csv";
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", inv.config_path, "key = value config file")->required();
        sub->add_option("--out", inv.output_dir, "output directory")->required();
        sub->add_option("--set", inv.overrides, "override, key=value (repeatable)");
        sub->callback([&inv, name] { inv.subcommand = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return dispatch(inv);
    } catch (const std::exception& e) {
        std::cerr << "drsim: error: " << e.what() << "\n";
        return 1;
    }
}
