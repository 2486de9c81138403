#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mpia/algorithms/runner.hpp"
#include "mpia/metrics/normalize.hpp"
#include "mpia/problems/problem.hpp"

namespace mpia {

/// Shared-sphere instance selector.
struct SphereSpec {
    std::size_t dimension = 20;
    std::vector<std::size_t> party_sizes{2, 2};
};

/// One batch experiment: a problem, a variant list, and a run count. Loaded
/// from a versioned JSON file; every field has a CLI override.
struct ExperimentSpec {
    std::string problem = "shared-sphere";  ///< "shared-sphere" or "uav-case"
    int case_id = 1;                        ///< uav-case only
    SphereSpec sphere;                      ///< shared-sphere only
    std::string scenario_file;              ///< optional map override for uav-case
    std::size_t interior_waypoints = 28;

    std::vector<Variant> variants{Variant::Mpia};
    std::size_t runs = 30;
    std::uint64_t base_seed = 1;
    std::string out_dir = "out";
    std::size_t jobs = 1;

    std::size_t population_size = 105;
    std::uint64_t fe_budget = 0;  ///< 0 picks the problem default
    std::size_t fixed_activation_size = 20;
    std::size_t reference_front_size = 500;
    OperatorConfig operators;

    void validate() const;
};

ExperimentSpec spec_from_json(const std::string& text);
std::string spec_to_json(const ExperimentSpec& spec);
ExperimentSpec load_spec(const std::string& path);

/// FNV-1a, the stable variant-name hash behind per-run seeds.
std::uint64_t stable_hash(std::string_view text);

/// Seed of run `run_index` of `variant`: base_seed + stable_hash(name) + index,
/// wrapping mod 2^64.
std::uint64_t run_seed(const ExperimentSpec& spec, Variant variant, std::size_t run_index);

/// Instantiates the problem the spec describes. For uav-case a scenario_file
/// wins over the stock map.
std::unique_ptr<Problem> make_problem(const ExperimentSpec& spec);

/// The budget a zero fe_budget resolves to: 1.4e5 for the uav cases, 1000
/// evaluations per decision variable per party otherwise.
std::uint64_t default_budget(const ExperimentSpec& spec, const Problem& problem);

/// Human-readable objective names in scheme order.
std::vector<std::string> objective_labels(const Problem& problem);

struct RunRecord {
    Variant variant = Variant::Mpia;
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    std::string status = "ok";  ///< "ok" or the failure message
    double mpigd = std::numeric_limits<double>::quiet_NaN();
    double sum_hv = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> party_hv;
    double wall_seconds = 0.0;
    std::vector<std::vector<double>> mps_objectives;
    std::vector<std::vector<double>> mps_x;

    [[nodiscard]] bool ok() const { return status == "ok"; }
};

struct MetricSummary {
    double mean = std::numeric_limits<double>::quiet_NaN();
    double stddev = std::numeric_limits<double>::quiet_NaN();
    double median = std::numeric_limits<double>::quiet_NaN();
};

struct VariantSummary {
    Variant variant = Variant::Mpia;
    std::size_t completed = 0;
    MetricSummary sum_hv;
    MetricSummary mpigd;
    /// Rank-sum verdicts against the first listed variant; empty for the
    /// baseline itself and when either side has fewer than five runs.
    std::string sum_hv_vs_baseline;
    std::string mpigd_vs_baseline;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::string problem_name;
    std::vector<std::string> objective_names;
    std::vector<std::vector<std::size_t>> party_objectives;
    /// Componentwise extremes of the union of every completed run's MPS.
    NormalizationBounds bounds;
    std::vector<RunRecord> records;  ///< variant-major, run-minor
    std::vector<VariantSummary> summaries;
};

/// Executes runs(spec.variants x spec.runs) on a worker pool of spec.jobs
/// threads, normalizes hypervolumes against the merged bounds, and writes
/// runs.csv, summary.json, per-variant SVG plots, and (for uav cases)
/// scenario.map into spec.out_dir. A failed run is recorded with its error
/// message and excluded from aggregates. Deterministic apart from the wall
/// time column.
ExperimentReport run_experiment(const ExperimentSpec& spec);

/// The artifact bodies, exposed for regression tests. Wall-clock seconds are
/// the only non-reproducible bytes, and runs.csv keeps them in the final
/// column.
std::string runs_csv_text(const ExperimentReport& report);
std::string summary_json_text(const ExperimentReport& report);

}  // namespace mpia
