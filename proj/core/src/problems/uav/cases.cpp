#include "mpia/problems/uav/cases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mpia::uav {

const char* objective_name(UavObjective objective) {
    switch (objective) {
        case UavObjective::Length: return "length";
        case UavObjective::Fuel: return "fuel";
        case UavObjective::Height: return "height";
        case UavObjective::Distance: return "distance";
        case UavObjective::Fatal: return "fatal";
        case UavObjective::Eco: return "eco";
        case UavObjective::Noise: return "noise";
        case UavObjective::LengthPlusHeight: return "length+height";
    }
    throw std::invalid_argument("objective_name: unknown objective");
}

Population init_uav_population(const UavScenario& scenario, std::size_t count,
                               std::size_t interior_waypoints, Rng& rng,
                               const UavInitParams& params) {
    if (count == 0) throw std::invalid_argument("init_uav_population: count must be positive");
    if (interior_waypoints == 0) {
        throw std::invalid_argument("init_uav_population: need at least one interior waypoint");
    }
    const double sx = scenario.mission_start[0];
    const double sy = scenario.mission_start[1];
    const double ex = scenario.mission_end[0];
    const double ey = scenario.mission_end[1];
    const double mid_z = 0.5 * (scenario.h_min + scenario.h_max);
    const double half_band = 0.5 * (scenario.h_max - scenario.h_min);

    Population population;
    population.members.resize(count);
    for (auto& ind : population.members) {
        std::vector<double> px(interior_waypoints);
        std::vector<double> py(interior_waypoints);
        for (std::size_t i = 0; i < interior_waypoints; ++i) {
            double t = static_cast<double>(i + 1) / static_cast<double>(interior_waypoints + 1);
            px[i] = sx + t * (ex - sx) + params.xy_sigma * rng.normal();
            py[i] = sy + t * (ey - sy) + params.xy_sigma * rng.normal();
        }
        // Laplacian smoothing against the fixed endpoints straightens the
        // scatter enough to respect the turning-angle limit.
        for (std::size_t pass = 0; pass < params.smoothing_passes; ++pass) {
            double prev_x = sx;
            double prev_y = sy;
            for (std::size_t i = 0; i < interior_waypoints; ++i) {
                double next_x = i + 1 < interior_waypoints ? px[i + 1] : ex;
                double next_y = i + 1 < interior_waypoints ? py[i + 1] : ey;
                double smoothed_x = 0.25 * (prev_x + 2.0 * px[i] + next_x);
                double smoothed_y = 0.25 * (prev_y + 2.0 * py[i] + next_y);
                prev_x = px[i];
                prev_y = py[i];
                px[i] = smoothed_x;
                py[i] = smoothed_y;
            }
        }
        double base_z = mid_z + params.z_spread * half_band * rng.uniform(-1.0, 1.0);
        ind.x.resize(3 * interior_waypoints);
        for (std::size_t i = 0; i < interior_waypoints; ++i) {
            double x = std::clamp(px[i], 0.0, static_cast<double>(scenario.width));
            double y = std::clamp(py[i], 0.0, static_cast<double>(scenario.height));
            double z = base_z + params.z_jitter * rng.uniform(-1.0, 1.0);
            double roof = scenario.building_at(x, y);
            if (roof > 0.0) z = std::max(z, roof + params.building_margin);
            z = std::clamp(z, scenario.h_min, scenario.h_max);
            ind.x[3 * i] = x;
            ind.x[3 * i + 1] = y;
            ind.x[3 * i + 2] = z;
        }
    }
    return population;
}

namespace {

PartyScheme biparty_scheme(std::size_t efficiency_count, std::size_t safety_count) {
    if (efficiency_count == 0 || safety_count == 0) {
        throw std::invalid_argument("UavProblem: both parties need objectives");
    }
    std::vector<std::size_t> eff_idx(efficiency_count);
    std::vector<std::size_t> safe_idx(safety_count);
    for (std::size_t i = 0; i < efficiency_count; ++i) eff_idx[i] = i;
    for (std::size_t i = 0; i < safety_count; ++i) safe_idx[i] = efficiency_count + i;
    return PartyScheme({std::move(eff_idx), std::move(safe_idx)},
                       efficiency_count + safety_count);
}

}  // namespace

UavProblem::UavProblem(std::string name, std::shared_ptr<const UavScenario> scenario,
                       std::vector<UavObjective> efficiency, std::vector<UavObjective> safety,
                       std::size_t interior_waypoints)
    : name_(std::move(name)),
      scenario_(std::move(scenario)),
      scheme_(biparty_scheme(efficiency.size(), safety.size())),
      interior_(interior_waypoints) {
    if (!scenario_) throw std::invalid_argument("UavProblem: null scenario");
    scenario_->validate();
    if (interior_ == 0) throw std::invalid_argument("UavProblem: no interior waypoints");

    objectives_ = efficiency;
    objectives_.insert(objectives_.end(), safety.begin(), safety.end());

    lower_.resize(path_dimension(interior_));
    upper_.resize(path_dimension(interior_));
    for (std::size_t i = 0; i < interior_; ++i) {
        lower_[3 * i] = 0.0;
        lower_[3 * i + 1] = 0.0;
        lower_[3 * i + 2] = scenario_->h_min;
        upper_[3 * i] = static_cast<double>(scenario_->width);
        upper_[3 * i + 1] = static_cast<double>(scenario_->height);
        upper_[3 * i + 2] = scenario_->h_max;
    }
}

void UavProblem::evaluate(Individual& individual) const {
    UavPath path = decode_path(individual.x, *scenario_);
    individual.objectives.resize(objectives_.size());
    for (std::size_t i = 0; i < objectives_.size(); ++i) {
        double value;
        switch (objectives_[i]) {
            case UavObjective::Length: value = f_length(path, *scenario_); break;
            case UavObjective::Fuel: value = f_fuel(path, *scenario_); break;
            case UavObjective::Height: value = f_height(path); break;
            case UavObjective::Distance: value = f_distance(path, *scenario_); break;
            case UavObjective::Fatal: value = f_fatal(path, *scenario_); break;
            case UavObjective::Eco: value = f_eco(path, *scenario_); break;
            case UavObjective::Noise: value = f_noise(path, *scenario_); break;
            case UavObjective::LengthPlusHeight:
                value = f_length(path, *scenario_) + f_height(path);
                break;
            default: throw std::logic_error("UavProblem: unknown objective");
        }
        individual.objectives[i] = value;
    }
    individual.violation = constraint_eval(path, *scenario_).total();
}

Population UavProblem::initialize(std::size_t count, Rng& rng) const {
    return init_uav_population(*scenario_, count, interior_, rng);
}

const char* case_map_name(int case_id) {
    if (case_id < 1 || case_id > 12) throw std::invalid_argument("case_map_name: case 1..12");
    return case_id <= 6 ? "MAP-A" : "MAP-B";
}

UavProblem build_case(int case_id, std::shared_ptr<const UavScenario> scenario,
                      std::size_t interior_waypoints) {
    if (case_id < 1 || case_id > 12) {
        throw std::invalid_argument("build_case: case id must be 1..12");
    }
    if (!scenario) throw std::invalid_argument("build_case: null scenario");
    const char* expected = case_map_name(case_id);
    bool stock = scenario->name == "MAP-A" || scenario->name == "MAP-B";
    if (stock && scenario->name != expected) {
        throw std::invalid_argument("build_case: case " + std::to_string(case_id) + " runs on " +
                                    expected + ", got " + scenario->name);
    }

    int pairing = (case_id - 1) % 6;  // 0..5, identical on both maps
    std::vector<UavObjective> efficiency;
    switch (pairing % 3) {
        case 0: efficiency = {UavObjective::Length, UavObjective::Distance}; break;
        case 1: efficiency = {UavObjective::LengthPlusHeight, UavObjective::Distance}; break;
        default: efficiency = {UavObjective::Fuel, UavObjective::Distance}; break;
    }
    std::vector<UavObjective> safety =
        pairing < 3 ? std::vector<UavObjective>{UavObjective::Fatal, UavObjective::Eco}
                    : std::vector<UavObjective>{UavObjective::Fatal, UavObjective::Noise};

    return UavProblem("case-" + std::to_string(case_id), std::move(scenario),
                      std::move(efficiency), std::move(safety), interior_waypoints);
}

}  // namespace mpia::uav
