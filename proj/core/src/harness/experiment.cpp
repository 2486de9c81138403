#include "mpia/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "mpia/harness/svg.hpp"
#include "mpia/metrics/mpigd.hpp"
#include "mpia/metrics/ranksum.hpp"
#include "mpia/problems/grouped_mop.hpp"
#include "mpia/problems/uav/cases.hpp"

namespace mpia {

namespace {

using nlohmann::json;

constexpr const char* kSpecSchema = "mpia-experiment";
constexpr int kSpecVersion = 1;
constexpr const char* kSummarySchema = "mpia-summary";
constexpr int kSummaryVersion = 1;
constexpr const char* kRunsHeader = "# mpia-runs v1";

std::string g17(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

}  // namespace

void ExperimentSpec::validate() const {
    if (problem != "shared-sphere" && problem != "uav-case") {
        throw std::invalid_argument("ExperimentSpec: unknown problem '" + problem + "'");
    }
    if (problem == "uav-case" && (case_id < 1 || case_id > 12)) {
        throw std::invalid_argument("ExperimentSpec: case must be in 1..12");
    }
    if (variants.empty()) throw std::invalid_argument("ExperimentSpec: no variants");
    if (runs == 0) throw std::invalid_argument("ExperimentSpec: runs must be at least 1");
    if (out_dir.empty()) throw std::invalid_argument("ExperimentSpec: empty output directory");
    if (population_size == 0) throw std::invalid_argument("ExperimentSpec: empty population");
    if (reference_front_size == 0) {
        throw std::invalid_argument("ExperimentSpec: reference front needs at least one point");
    }
    operators.validate();
}

std::string spec_to_json(const ExperimentSpec& spec) {
    json j;
    j["schema"] = kSpecSchema;
    j["version"] = kSpecVersion;
    j["problem"] = spec.problem;
    j["case"] = spec.case_id;
    j["sphere"] = {{"dimension", spec.sphere.dimension}, {"party_sizes", spec.sphere.party_sizes}};
    j["scenario_file"] = spec.scenario_file;
    j["interior_waypoints"] = spec.interior_waypoints;
    json names = json::array();
    for (Variant v : spec.variants) names.push_back(variant_name(v));
    j["variants"] = names;
    j["runs"] = spec.runs;
    j["base_seed"] = spec.base_seed;
    j["out_dir"] = spec.out_dir;
    j["jobs"] = spec.jobs;
    j["population_size"] = spec.population_size;
    j["fe_budget"] = spec.fe_budget;
    j["fixed_activation_size"] = spec.fixed_activation_size;
    j["reference_front_size"] = spec.reference_front_size;
    j["operators"] = {{"cr1", spec.operators.cr1},
                      {"f1", spec.operators.f1},
                      {"cr2", spec.operators.cr2},
                      {"f2", spec.operators.f2},
                      {"p2", spec.operators.p2},
                      {"sbx_index", spec.operators.sbx_index},
                      {"pm_index", spec.operators.pm_index},
                      {"mcm_threshold", spec.operators.mcm_threshold},
                      {"activate_num_list", spec.operators.activate_num_list}};
    return j.dump(2) + "\n";
}

ExperimentSpec spec_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("schema", "") != kSpecSchema) {
        throw std::invalid_argument("experiment spec: missing schema marker");
    }
    if (j.value("version", 0) != kSpecVersion) {
        throw std::invalid_argument("experiment spec: unsupported version");
    }
    ExperimentSpec spec;
    spec.problem = j.value("problem", spec.problem);
    spec.case_id = j.value("case", spec.case_id);
    if (j.contains("sphere")) {
        const auto& s = j.at("sphere");
        spec.sphere.dimension = s.value("dimension", spec.sphere.dimension);
        spec.sphere.party_sizes = s.value("party_sizes", spec.sphere.party_sizes);
    }
    spec.scenario_file = j.value("scenario_file", spec.scenario_file);
    spec.interior_waypoints = j.value("interior_waypoints", spec.interior_waypoints);
    if (j.contains("variants")) {
        spec.variants.clear();
        for (const auto& name : j.at("variants")) {
            spec.variants.push_back(parse_variant(name.get<std::string>()));
        }
    }
    spec.runs = j.value("runs", spec.runs);
    spec.base_seed = j.value("base_seed", spec.base_seed);
    spec.out_dir = j.value("out_dir", spec.out_dir);
    spec.jobs = j.value("jobs", spec.jobs);
    spec.population_size = j.value("population_size", spec.population_size);
    spec.fe_budget = j.value("fe_budget", spec.fe_budget);
    spec.fixed_activation_size = j.value("fixed_activation_size", spec.fixed_activation_size);
    spec.reference_front_size = j.value("reference_front_size", spec.reference_front_size);
    if (j.contains("operators")) {
        const auto& o = j.at("operators");
        auto& ops = spec.operators;
        ops.cr1 = o.value("cr1", ops.cr1);
        ops.f1 = o.value("f1", ops.f1);
        ops.cr2 = o.value("cr2", ops.cr2);
        ops.f2 = o.value("f2", ops.f2);
        ops.p2 = o.value("p2", ops.p2);
        ops.sbx_index = o.value("sbx_index", ops.sbx_index);
        ops.pm_index = o.value("pm_index", ops.pm_index);
        ops.mcm_threshold = o.value("mcm_threshold", ops.mcm_threshold);
        ops.activate_num_list = o.value("activate_num_list", ops.activate_num_list);
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open spec file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return spec_from_json(buffer.str());
}

std::uint64_t stable_hash(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t run_seed(const ExperimentSpec& spec, Variant variant, std::size_t run_index) {
    return spec.base_seed + stable_hash(variant_name(variant)) +
           static_cast<std::uint64_t>(run_index);
}

namespace {

std::shared_ptr<const uav::UavScenario> load_case_scenario(const ExperimentSpec& spec) {
    if (!spec.scenario_file.empty()) {
        return std::make_shared<const uav::UavScenario>(uav::load_scenario(spec.scenario_file));
    }
    if (std::string(uav::case_map_name(spec.case_id)) == "MAP-A") {
        return std::make_shared<const uav::UavScenario>(uav::make_map_a());
    }
    return std::make_shared<const uav::UavScenario>(uav::make_map_b());
}

}  // namespace

std::unique_ptr<Problem> make_problem(const ExperimentSpec& spec) {
    spec.validate();
    if (spec.problem == "shared-sphere") {
        return std::make_unique<GroupedMop>(
            make_shared_sphere(spec.sphere.dimension, spec.sphere.party_sizes));
    }
    return std::make_unique<uav::UavProblem>(
        uav::build_case(spec.case_id, load_case_scenario(spec), spec.interior_waypoints));
}

std::uint64_t default_budget(const ExperimentSpec& spec, const Problem& problem) {
    if (spec.problem == "uav-case") return 140000;
    return 1000ull * problem.dimension() * problem.scheme().party_count();
}

std::vector<std::string> objective_labels(const Problem& problem) {
    std::vector<std::string> labels;
    if (const auto* uav_problem = dynamic_cast<const uav::UavProblem*>(&problem)) {
        for (uav::UavObjective objective : uav_problem->objectives()) {
            labels.emplace_back(uav::objective_name(objective));
        }
        return labels;
    }
    for (std::size_t j = 0; j < problem.objective_count(); ++j) {
        labels.push_back("f" + std::to_string(j + 1));
    }
    return labels;
}

namespace {

MetricSummary summarize(std::vector<double> values) {
    MetricSummary summary;
    if (values.empty()) return summary;
    double sum = 0.0;
    for (double v : values) sum += v;
    summary.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - summary.mean) * (v - summary.mean);
    summary.stddev =
        values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
    std::sort(values.begin(), values.end());
    std::size_t mid = values.size() / 2;
    summary.median =
        values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
    return summary;
}

std::vector<double> metric_of(const std::vector<const RunRecord*>& records,
                              double RunRecord::* field) {
    std::vector<double> values;
    values.reserve(records.size());
    for (const RunRecord* r : records) values.push_back(r->*field);
    return values;
}

/// A handful of representative paths; plotting all hundred obscures the map.
std::vector<uav::UavPath> select_paths(const RunRecord& record, const uav::UavProblem& problem) {
    constexpr std::size_t kMaxPaths = 12;
    std::vector<uav::UavPath> paths;
    std::size_t n = record.mps_x.size();
    std::size_t step = n > kMaxPaths ? (n + kMaxPaths - 1) / kMaxPaths : 1;
    for (std::size_t i = 0; i < n; i += step) {
        paths.push_back(uav::decode_path(record.mps_x[i], problem.scenario()));
    }
    return paths;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    std::unique_ptr<Problem> problem = make_problem(spec);
    const PartyScheme& scheme = problem->scheme();
    const std::uint64_t budget = spec.fe_budget ? spec.fe_budget : default_budget(spec, *problem);

    ExperimentReport report;
    report.spec = spec;
    report.problem_name = problem->name();
    report.objective_names = objective_labels(*problem);
    for (std::size_t k = 0; k < scheme.party_count(); ++k) {
        report.party_objectives.push_back(scheme.objectives_of(k));
    }

    const std::size_t total = spec.variants.size() * spec.runs;
    report.records.resize(total);
    for (std::size_t v = 0; v < spec.variants.size(); ++v) {
        for (std::size_t i = 0; i < spec.runs; ++i) {
            RunRecord& record = report.records[v * spec.runs + i];
            record.variant = spec.variants[v];
            record.run_index = i;
            record.seed = run_seed(spec, spec.variants[v], i);
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t task = next.fetch_add(1);
            if (task >= total) return;
            RunRecord& record = report.records[task];
            try {
                RunConfig config;
                config.population_size = spec.population_size;
                config.fe_budget = budget;
                config.seed = record.seed;
                config.variant = record.variant;
                config.operators = spec.operators;
                config.fixed_activation_size = spec.fixed_activation_size;
                config.validate(*problem);
                RunResult result = run_variant(*problem, config);
                record.wall_seconds = result.wall_seconds;
                record.mps_objectives.reserve(result.mps.size());
                record.mps_x.reserve(result.mps.size());
                for (const Individual& ind : result.mps) {
                    record.mps_objectives.push_back(ind.objectives);
                    record.mps_x.push_back(ind.x);
                }
            } catch (const std::exception& error) {
                record.status = error.what();
            }
        }
    };
    std::size_t workers = std::max<std::size_t>(1, std::min(spec.jobs, total));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }

    // Merged normalization bounds over every completed run of every variant.
    std::vector<std::vector<double>> merged;
    for (const RunRecord& record : report.records) {
        if (!record.ok()) continue;
        merged.insert(merged.end(), record.mps_objectives.begin(), record.mps_objectives.end());
    }
    ReferenceFront reference;
    if (problem->has_reference_front()) {
        Rng rng(spec.base_seed);
        reference.points = problem->sample_reference_front(spec.reference_front_size, rng);
    }
    if (!merged.empty()) report.bounds = compute_bounds(merged);
    for (RunRecord& record : report.records) {
        if (!record.ok()) continue;
        if (record.mps_objectives.empty()) {
            // An empty MPS is a valid outcome under conflicting parties; it
            // dominates nothing (sumHV 0) and covers nothing (MPIGD inf), so
            // it scores as worst instead of poisoning aggregates with NaN.
            record.party_hv.assign(scheme.party_count(), 0.0);
            record.sum_hv = 0.0;
            if (!reference.points.empty()) {
                record.mpigd = std::numeric_limits<double>::infinity();
            }
            continue;
        }
        record.party_hv = party_hypervolumes(record.mps_objectives, scheme, report.bounds);
        record.sum_hv = 0.0;
        for (double v : record.party_hv) record.sum_hv += v;
        if (!reference.points.empty()) {
            record.mpigd = mpigd(reference, record.mps_objectives, scheme);
        }
    }

    const bool have_mpigd = !reference.points.empty();
    std::vector<const RunRecord*> baseline_records;
    for (std::size_t v = 0; v < spec.variants.size(); ++v) {
        std::vector<const RunRecord*> ok_records;
        for (std::size_t i = 0; i < spec.runs; ++i) {
            const RunRecord& record = report.records[v * spec.runs + i];
            if (record.ok()) ok_records.push_back(&record);
        }
        if (v == 0) baseline_records = ok_records;
        VariantSummary summary;
        summary.variant = spec.variants[v];
        summary.completed = ok_records.size();
        summary.sum_hv = summarize(metric_of(ok_records, &RunRecord::sum_hv));
        if (have_mpigd) summary.mpigd = summarize(metric_of(ok_records, &RunRecord::mpigd));
        if (v > 0 && ok_records.size() >= 5 && baseline_records.size() >= 5) {
            auto verdict = [&](double RunRecord::* field, bool smaller_is_better) {
                std::vector<double> mine = metric_of(ok_records, field);
                std::vector<double> base = metric_of(baseline_records, field);
                // The label describes the first sample, i.e. this variant.
                RankSumResult result = rank_sum_test(mine, base, 0.05, smaller_is_better);
                return std::string(rank_sum_label_name(result.label));
            };
            summary.sum_hv_vs_baseline = verdict(&RunRecord::sum_hv, false);
            if (have_mpigd) summary.mpigd_vs_baseline = verdict(&RunRecord::mpigd, true);
        }
        report.summaries.push_back(std::move(summary));
    }

    namespace fs = std::filesystem;
    fs::create_directories(spec.out_dir);
    auto write_file = [](const fs::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + path.string());
        out << content;
        if (!out) throw std::runtime_error("write failed for " + path.string());
    };
    write_file(fs::path(spec.out_dir) / "runs.csv", runs_csv_text(report));
    write_file(fs::path(spec.out_dir) / "summary.json", summary_json_text(report));

    const auto* uav_problem = dynamic_cast<const uav::UavProblem*>(problem.get());
    if (uav_problem) {
        write_file(fs::path(spec.out_dir) / "scenario.map",
                   uav::scenario_to_json(uav_problem->scenario()));
    }
    for (std::size_t v = 0; v < spec.variants.size(); ++v) {
        const RunRecord* first_ok = nullptr;
        for (std::size_t i = 0; i < spec.runs && !first_ok; ++i) {
            const RunRecord& record = report.records[v * spec.runs + i];
            if (record.ok()) first_ok = &record;
        }
        if (!first_ok) continue;
        const std::string name = variant_name(spec.variants[v]);
        emit_front_plot(first_ok->mps_objectives, scheme, report.objective_names,
                        report.problem_name + " " + name,
                        (fs::path(spec.out_dir) / ("front-" + name + ".svg")).string());
        if (uav_problem) {
            emit_path_plot(select_paths(*first_ok, *uav_problem), uav_problem->scenario(),
                           report.problem_name + " " + name,
                           (fs::path(spec.out_dir) / ("paths-" + name + ".svg")).string());
        }
    }
    return report;
}

std::string runs_csv_text(const ExperimentReport& report) {
    const std::size_t parties = report.party_objectives.size();
    std::ostringstream out;
    out << kRunsHeader << "\n";
    out << "variant,run,seed,mpigd,sum_hv";
    for (std::size_t k = 0; k < parties; ++k) out << ",hv_party_" << k + 1;
    out << ",status,wall_seconds\n";
    for (const RunRecord& record : report.records) {
        out << variant_name(record.variant) << "," << record.run_index << "," << record.seed
            << "," << g17(record.mpigd) << "," << g17(record.sum_hv);
        for (std::size_t k = 0; k < parties; ++k) {
            out << ","
                << (k < record.party_hv.size()
                        ? g17(record.party_hv[k])
                        : g17(std::numeric_limits<double>::quiet_NaN()));
        }
        std::string status = record.status;
        std::replace(status.begin(), status.end(), ',', ';');
        std::replace(status.begin(), status.end(), '\n', ' ');
        out << "," << status << "," << g17(record.wall_seconds) << "\n";
    }
    return out.str();
}

std::string summary_json_text(const ExperimentReport& report) {
    json j;
    j["schema"] = kSummarySchema;
    j["version"] = kSummaryVersion;
    j["problem"] = report.problem_name;
    j["objective_names"] = report.objective_names;
    j["party_objectives"] = report.party_objectives;
    j["spec"] = json::parse(spec_to_json(report.spec));
    if (report.bounds.min.empty()) {
        j["bounds"] = nullptr;
    } else {
        j["bounds"] = {{"min", report.bounds.min}, {"max", report.bounds.max}};
    }
    j["baseline"] = variant_name(report.spec.variants.front());
    json variants = json::array();
    for (const VariantSummary& summary : report.summaries) {
        json v;
        v["name"] = variant_name(summary.variant);
        v["runs"] = report.spec.runs;
        v["completed"] = summary.completed;
        v["sum_hv"] = {{"mean", summary.sum_hv.mean},
                       {"std", summary.sum_hv.stddev},
                       {"median", summary.sum_hv.median}};
        v["mpigd"] = {{"mean", summary.mpigd.mean},
                      {"std", summary.mpigd.stddev},
                      {"median", summary.mpigd.median}};
        v["sum_hv_vs_baseline"] =
            summary.sum_hv_vs_baseline.empty() ? json() : json(summary.sum_hv_vs_baseline);
        v["mpigd_vs_baseline"] =
            summary.mpigd_vs_baseline.empty() ? json() : json(summary.mpigd_vs_baseline);
        variants.push_back(std::move(v));
    }
    j["variants"] = std::move(variants);
    json fronts = json::array();
    for (const VariantSummary& summary : report.summaries) {
        const RunRecord* first_ok = nullptr;
        for (const RunRecord& record : report.records) {
            if (record.variant == summary.variant && record.ok()) {
                first_ok = &record;
                break;
            }
        }
        if (!first_ok) continue;
        json f;
        f["variant"] = variant_name(summary.variant);
        f["run"] = first_ok->run_index;
        f["objectives"] = first_ok->mps_objectives;
        if (report.spec.problem == "uav-case") f["x"] = first_ok->mps_x;
        fronts.push_back(std::move(f));
    }
    j["plot_data"] = std::move(fronts);
    return j.dump(2) + "\n";
}

}  // namespace mpia
