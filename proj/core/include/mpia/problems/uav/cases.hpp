#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mpia/problems/problem.hpp"
#include "mpia/problems/uav/path.hpp"
#include "mpia/problems/uav/scenario.hpp"

namespace mpia::uav {

enum class UavObjective {
    Length,
    Fuel,
    Height,
    Distance,
    Fatal,
    Eco,
    Noise,
    LengthPlusHeight,  ///< one scalar, the sum
};

const char* objective_name(UavObjective objective);

/// Initial-population shaping knobs. Zero sigma/spread/jitter produce the
/// straight mid-altitude line.
struct UavInitParams {
    double xy_sigma = 1.5;          ///< cells, Gaussian waypoint scatter
    double z_spread = 0.3;          ///< fraction of the half altitude band
    double z_jitter = 5.0;          ///< m, per-waypoint altitude scatter
    std::size_t smoothing_passes = 20;
    double building_margin = 5.0;   ///< m of clearance forced above roofs
};

/// Feasibility-biased initial paths: waypoints interpolated along the
/// mission line, scattered, Laplacian-smoothed, and floored above buildings.
/// Deterministic per rng state; individuals are returned unevaluated.
Population init_uav_population(const UavScenario& scenario, std::size_t count,
                               std::size_t interior_waypoints, Rng& rng,
                               const UavInitParams& params = {});

/// A biparty path-planning instance: efficiency party first, safety party
/// second, constraint violations folded into constrained dominance.
class UavProblem : public Problem {
public:
    UavProblem(std::string name, std::shared_ptr<const UavScenario> scenario,
               std::vector<UavObjective> efficiency, std::vector<UavObjective> safety,
               std::size_t interior_waypoints = kDefaultInteriorWaypoints);

    std::string name() const override { return name_; }
    std::size_t dimension() const override { return lower_.size(); }
    const PartyScheme& scheme() const override { return scheme_; }
    const std::vector<double>& lower_bounds() const override { return lower_; }
    const std::vector<double>& upper_bounds() const override { return upper_; }
    void evaluate(Individual& individual) const override;
    Population initialize(std::size_t count, Rng& rng) const override;

    const UavScenario& scenario() const { return *scenario_; }
    std::size_t interior_waypoints() const { return interior_; }
    const std::vector<UavObjective>& objectives() const { return objectives_; }

private:
    std::string name_;
    std::shared_ptr<const UavScenario> scenario_;
    std::vector<UavObjective> objectives_;
    PartyScheme scheme_;
    std::vector<double> lower_;
    std::vector<double> upper_;
    std::size_t interior_;
};

/// The twelve benchmark cases: six objective pairings, cases 1-6 on MAP-A
/// and 7-12 on MAP-B. Passing a stock map whose name disagrees with the
/// case's map is an error; custom scenarios are accepted as-is.
UavProblem build_case(int case_id, std::shared_ptr<const UavScenario> scenario,
                      std::size_t interior_waypoints = kDefaultInteriorWaypoints);

/// Map name ("MAP-A" or "MAP-B") the given case runs on.
const char* case_map_name(int case_id);

}  // namespace mpia::uav
