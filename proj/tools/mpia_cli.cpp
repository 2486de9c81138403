// Command line front end: generate-map, run, report, plot.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mpia/harness/experiment.hpp"
#include "mpia/harness/svg.hpp"
#include "mpia/problems/uav/cases.hpp"
#include "mpia/problems/uav/scenario.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<mpia::Variant> parse_variant_list(const std::string& csv) {
    std::vector<mpia::Variant> variants;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) variants.push_back(mpia::parse_variant(token));
    }
    if (variants.empty()) throw std::runtime_error("empty variant list");
    return variants;
}

struct CommonFlags {
    std::string spec_file;
    std::string out_dir;
    std::string variant_csv;
    int case_id = 0;
    std::uint64_t runs = 0;
    std::uint64_t seed = 0;
    std::uint64_t jobs = 0;
    bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--spec", flags.spec_file, "experiment spec file (JSON)");
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--case", flags.case_id, "benchmark case 1..12")->check(CLI::Range(1, 12));
    cmd->add_option("--variant", flags.variant_csv, "comma separated variant names");
    cmd->add_option("--runs", flags.runs, "independent runs per variant");
    cmd->add_option("--jobs", flags.jobs, "worker threads");
    cmd->add_option("--seed", flags.seed, "base seed")->each([&](const std::string&) {
        flags.seed_set = true;
    });
}

mpia::ExperimentSpec resolve_spec(const CommonFlags& flags) {
    mpia::ExperimentSpec spec;
    if (!flags.spec_file.empty()) spec = mpia::load_spec(flags.spec_file);
    if (flags.case_id) {
        spec.problem = "uav-case";
        spec.case_id = flags.case_id;
    }
    if (!flags.variant_csv.empty()) spec.variants = parse_variant_list(flags.variant_csv);
    if (!flags.out_dir.empty()) spec.out_dir = flags.out_dir;
    if (flags.runs) spec.runs = flags.runs;
    if (flags.jobs) spec.jobs = flags.jobs;
    if (flags.seed_set) spec.base_seed = flags.seed;
    spec.validate();
    return spec;
}

int cmd_generate_map(std::uint64_t seed, const std::string& out_dir, const std::string& name,
                     std::size_t width, std::size_t height) {
    mpia::uav::MapGenParams params;
    params.width = width;
    params.height = height;
    mpia::uav::UavScenario scenario = mpia::uav::generate_map(seed, params);
    scenario.name = name.empty() ? "map-" + std::to_string(seed) : name;
    std::filesystem::create_directories(out_dir);
    std::string path = (std::filesystem::path(out_dir) / "scenario.map").string();
    mpia::uav::save_scenario(scenario, path);
    std::cout << "wrote " << path << " (" << scenario.width << "x" << scenario.height << ", seed "
              << seed << ")\n";
    return 0;
}

int cmd_run(const CommonFlags& flags) {
    mpia::ExperimentSpec spec = resolve_spec(flags);
    mpia::ExperimentReport report = mpia::run_experiment(spec);
    std::size_t completed = 0;
    for (const auto& record : report.records) {
        if (record.ok()) ++completed;
    }
    std::cout << "problem " << report.problem_name << ": " << completed << "/"
              << report.records.size() << " runs completed, artifacts in " << spec.out_dir
              << "\n";
    for (const auto& record : report.records) {
        if (!record.ok()) {
            std::cerr << "failed: " << mpia::variant_name(record.variant) << " run "
                      << record.run_index << ": " << record.status << "\n";
        }
    }
    return completed == report.records.size() ? 0 : 1;
}

void print_metric(const char* label, const json& metric) {
    if (!metric.is_object() || metric.at("mean").is_null()) return;
    std::printf("    %-7s mean %.6g  std %.6g  median %.6g\n", label,
                metric.at("mean").get<double>(), metric.at("std").get<double>(),
                metric.at("median").get<double>());
}

int cmd_report(const std::string& out_dir) {
    json summary = json::parse(read_file((std::filesystem::path(out_dir) / "summary.json").string()));
    std::cout << "problem: " << summary.at("problem").get<std::string>() << "\n";
    std::cout << "baseline: " << summary.at("baseline").get<std::string>() << "\n";
    for (const auto& variant : summary.at("variants")) {
        std::cout << "  " << variant.at("name").get<std::string>() << " ("
                  << variant.at("completed").get<std::size_t>() << "/"
                  << variant.at("runs").get<std::size_t>() << " runs)\n";
        print_metric("sumHV", variant.at("sum_hv"));
        print_metric("MPIGD", variant.at("mpigd"));
        auto verdict = [&](const char* key, const char* label) {
            const auto& v = variant.at(key);
            if (!v.is_null()) std::cout << "    " << label << " vs baseline: "
                                        << v.get<std::string>() << "\n";
        };
        verdict("sum_hv_vs_baseline", "sumHV");
        verdict("mpigd_vs_baseline", "MPIGD");
    }
    return 0;
}

int cmd_plot(const std::string& out_dir) {
    namespace fs = std::filesystem;
    json summary = json::parse(read_file((fs::path(out_dir) / "summary.json").string()));
    mpia::ExperimentSpec spec =
        mpia::spec_from_json(summary.at("spec").dump());
    std::unique_ptr<mpia::Problem> problem;
    const mpia::uav::UavProblem* uav_problem = nullptr;
    if (spec.problem == "uav-case") {
        // The archived map, not the stock one: desk-scale runs ship their own.
        spec.scenario_file = (fs::path(out_dir) / "scenario.map").string();
    }
    problem = mpia::make_problem(spec);
    uav_problem = dynamic_cast<const mpia::uav::UavProblem*>(problem.get());

    std::vector<std::string> names = summary.at("objective_names").get<std::vector<std::string>>();
    int plots = 0;
    for (const auto& entry : summary.at("plot_data")) {
        std::string variant = entry.at("variant").get<std::string>();
        auto objectives = entry.at("objectives").get<std::vector<std::vector<double>>>();
        mpia::emit_front_plot(objectives, problem->scheme(), names,
                              summary.at("problem").get<std::string>() + " " + variant,
                              (fs::path(out_dir) / ("front-" + variant + ".svg")).string());
        ++plots;
        if (uav_problem && entry.contains("x")) {
            auto xs = entry.at("x").get<std::vector<std::vector<double>>>();
            std::vector<mpia::uav::UavPath> paths;
            std::size_t step = xs.size() > 12 ? (xs.size() + 11) / 12 : 1;
            for (std::size_t i = 0; i < xs.size(); i += step) {
                paths.push_back(mpia::uav::decode_path(xs[i], uav_problem->scenario()));
            }
            mpia::emit_path_plot(paths, uav_problem->scenario(),
                                 summary.at("problem").get<std::string>() + " " + variant,
                                 (fs::path(out_dir) / ("paths-" + variant + ".svg")).string());
            ++plots;
        }
    }
    std::cout << "wrote " << plots << " plots to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiparty immune optimization toolkit"};
    app.require_subcommand(1);

    std::uint64_t map_seed = mpia::uav::kMapASeed;
    std::string map_out = "out";
    std::string map_name;
    std::size_t map_width = 50;
    std::size_t map_height = 50;
    CLI::App* generate = app.add_subcommand("generate-map", "synthesize a scenario map");
    generate->add_option("--seed", map_seed, "map seed");
    generate->add_option("--out", map_out, "output directory");
    generate->add_option("--name", map_name, "scenario name (default map-<seed>)");
    generate->add_option("--width", map_width, "grid width in cells");
    generate->add_option("--height", map_height, "grid height in cells");

    CommonFlags run_flags;
    CLI::App* run = app.add_subcommand("run", "execute a batch experiment");
    add_common(run, run_flags);

    std::string report_dir = "out";
    CLI::App* report = app.add_subcommand("report", "print the aggregate table of a finished run");
    report->add_option("--out", report_dir, "experiment output directory");

    std::string plot_dir = "out";
    CLI::App* plot = app.add_subcommand("plot", "re-render the SVG plots of a finished run");
    plot->add_option("--out", plot_dir, "experiment output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            return cmd_generate_map(map_seed, map_out, map_name, map_width, map_height);
        }
        if (run->parsed()) return cmd_run(run_flags);
        if (report->parsed()) return cmd_report(report_dir);
        if (plot->parsed()) return cmd_plot(plot_dir);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
