#include "mpia/problems/uav/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mpia/rng.hpp"

namespace mpia::uav {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr const char* kSchemaName = "mpia-scenario";

std::size_t clamp_cell(double v, std::size_t extent) {
    if (v < 0.0) return 0;
    auto c = static_cast<std::size_t>(v);
    return c >= extent ? extent - 1 : c;
}

}  // namespace

std::size_t UavScenario::cell_index(double x, double y) const {
    return clamp_cell(y, height) * width + clamp_cell(x, width);
}

double UavScenario::building_at(double x, double y) const {
    if (!inside_grid(x, y)) return 0.0;
    return building_height[cell_index(x, y)];
}

double UavScenario::population_at(double x, double y) const {
    if (!inside_grid(x, y)) return 0.0;
    return population_density[cell_index(x, y)];
}

double UavScenario::vehicle_at(double x, double y) const {
    if (!inside_grid(x, y)) return 0.0;
    return vehicle_density[cell_index(x, y)];
}

bool UavScenario::inside_grid(double x, double y) const {
    return x >= 0.0 && y >= 0.0 && x <= static_cast<double>(width) &&
           y <= static_cast<double>(height);
}

void UavScenario::validate() const {
    std::size_t cells = width * height;
    if (cells == 0) throw std::invalid_argument("UavScenario: empty grid");
    if (building_height.size() != cells || population_density.size() != cells ||
        vehicle_density.size() != cells) {
        throw std::invalid_argument("UavScenario: grid size mismatch");
    }
    for (double h : building_height) {
        if (h < 0.0) throw std::invalid_argument("UavScenario: negative building height");
    }
    for (double d : population_density) {
        if (d < 0.0) throw std::invalid_argument("UavScenario: negative population density");
    }
    for (double d : vehicle_density) {
        if (d < 0.0) throw std::invalid_argument("UavScenario: negative vehicle density");
    }
    for (const auto& hp : hover_points) {
        if (!inside_grid(hp[0], hp[1])) {
            throw std::invalid_argument("UavScenario: hover point outside grid");
        }
    }
    if (!inside_grid(mission_start[0], mission_start[1]) ||
        !inside_grid(mission_end[0], mission_end[1])) {
        throw std::invalid_argument("UavScenario: mission endpoint outside grid");
    }
    if (!(h_min < h_max)) throw std::invalid_argument("UavScenario: empty altitude band");
    if (cell_size <= 0.0) throw std::invalid_argument("UavScenario: cell size must be positive");
}

UavScenario generate_map(std::uint64_t seed, const MapGenParams& params) {
    if (params.width == 0 || params.height == 0) {
        throw std::invalid_argument("generate_map: empty grid");
    }
    UavScenario scenario;
    scenario.width = params.width;
    scenario.height = params.height;
    // Mission and hover points sit at fixed grid fractions; on the stock
    // 50 x 50 grid these land on (1,1), (45,45), (25,30), (34,20), (40,35).
    const double w = static_cast<double>(params.width);
    const double h = static_cast<double>(params.height);
    scenario.mission_start = {0.02 * w, 0.02 * h};
    scenario.mission_end = {0.9 * w, 0.9 * h};
    scenario.hover_points = {{0.5 * w, 0.6 * h}, {0.68 * w, 0.4 * h}, {0.8 * w, 0.7 * h}};
    std::size_t cells = params.width * params.height;
    scenario.building_height.assign(cells, 0.0);
    scenario.population_density.assign(cells, 0.0);
    scenario.vehicle_density.assign(cells, 0.0);

    Rng rng(seed);
    for (std::size_t i = 0; i < cells; ++i) {
        if (rng.uniform01() < params.building_fraction) {
            scenario.building_height[i] = rng.lognormal(scenario.eco_mu, scenario.eco_sigma);
        }
    }

    struct Bump {
        double x, y, sigma, peak;
    };
    auto draw_bumps = [&](double peak_scale) {
        std::vector<Bump> bumps(params.density_bumps);
        for (auto& b : bumps) {
            b.x = rng.uniform(0.0, static_cast<double>(params.width));
            b.y = rng.uniform(0.0, static_cast<double>(params.height));
            b.sigma = rng.uniform(params.bump_sigma_min, params.bump_sigma_max);
            b.peak = peak_scale * rng.uniform(params.bump_peak_min, params.bump_peak_max);
        }
        return bumps;
    };
    auto splat = [&](const std::vector<Bump>& bumps, std::vector<double>& grid) {
        for (std::size_t cy = 0; cy < params.height; ++cy) {
            for (std::size_t cx = 0; cx < params.width; ++cx) {
                double px = static_cast<double>(cx) + 0.5;
                double py = static_cast<double>(cy) + 0.5;
                double value = 0.0;
                for (const auto& b : bumps) {
                    double dx = px - b.x;
                    double dy = py - b.y;
                    value += b.peak * std::exp(-(dx * dx + dy * dy) / (2.0 * b.sigma * b.sigma));
                }
                grid[cy * params.width + cx] = value;
            }
        }
    };
    splat(draw_bumps(1.0), scenario.population_density);
    splat(draw_bumps(params.vehicle_scale), scenario.vehicle_density);

    scenario.validate();
    return scenario;
}

UavScenario make_map_a() {
    UavScenario scenario = generate_map(kMapASeed, MapGenParams{});
    scenario.name = "MAP-A";
    return scenario;
}

UavScenario make_map_b() {
    UavScenario scenario = generate_map(kMapBSeed, MapGenParams{});
    scenario.name = "MAP-B";
    return scenario;
}

std::string scenario_to_json(const UavScenario& s) {
    json j;
    j["schema"] = kSchemaName;
    j["version"] = kSchemaVersion;
    j["name"] = s.name;
    j["grid"] = {{"width", s.width}, {"height", s.height}, {"cell_size_m", s.cell_size}};
    j["building_height_m"] = s.building_height;
    j["population_density"] = s.population_density;
    j["vehicle_density"] = s.vehicle_density;
    j["mission"] = {{"start", s.mission_start}, {"end", s.mission_end}};
    j["hover_points"] = s.hover_points;
    j["physics"] = {{"uav_mass_kg", s.uav_mass},
                    {"flight_speed_ms", s.flight_speed},
                    {"air_density", s.air_density},
                    {"rotor_count", s.rotor_count},
                    {"rotor_disk_area_m2", s.rotor_disk_area},
                    {"gravity", s.gravity}};
    j["risk"] = {{"p_crash", s.p_crash},
                 {"impact_area_m2", s.impact_area},
                 {"shelter_factor", s.shelter_factor},
                 {"energy_alpha_j", s.energy_alpha},
                 {"energy_beta_j", s.energy_beta},
                 {"drag_coefficient", s.drag_coefficient},
                 {"noise_conversion", s.noise_conversion},
                 {"noise_source", s.noise_source},
                 {"noise_distance_m", s.noise_distance},
                 {"noise_cutoff_m", s.noise_cutoff}};
    j["eco"] = {{"mu", s.eco_mu}, {"sigma", s.eco_sigma}};
    j["limits"] = {{"h_min_m", s.h_min},
                   {"h_max_m", s.h_max},
                   {"alpha_max_rad", s.alpha_max},
                   {"beta_max_rad", s.beta_max}};
    return j.dump(2) + "\n";
}

UavScenario scenario_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("schema", "") != kSchemaName) {
        throw std::runtime_error("scenario: unrecognized schema marker");
    }
    int version = j.value("version", -1);
    if (version != kSchemaVersion) {
        throw std::runtime_error("scenario: unsupported schema version " +
                                 std::to_string(version));
    }
    UavScenario s;
    s.name = j.at("name").get<std::string>();
    const auto& grid = j.at("grid");
    s.width = grid.at("width").get<std::size_t>();
    s.height = grid.at("height").get<std::size_t>();
    s.cell_size = grid.at("cell_size_m").get<double>();
    s.building_height = j.at("building_height_m").get<std::vector<double>>();
    s.population_density = j.at("population_density").get<std::vector<double>>();
    s.vehicle_density = j.at("vehicle_density").get<std::vector<double>>();
    s.mission_start = j.at("mission").at("start").get<std::array<double, 2>>();
    s.mission_end = j.at("mission").at("end").get<std::array<double, 2>>();
    s.hover_points = j.at("hover_points").get<std::vector<std::array<double, 2>>>();
    const auto& physics = j.at("physics");
    s.uav_mass = physics.at("uav_mass_kg").get<double>();
    s.flight_speed = physics.at("flight_speed_ms").get<double>();
    s.air_density = physics.at("air_density").get<double>();
    s.rotor_count = physics.at("rotor_count").get<double>();
    s.rotor_disk_area = physics.at("rotor_disk_area_m2").get<double>();
    s.gravity = physics.at("gravity").get<double>();
    const auto& risk = j.at("risk");
    s.p_crash = risk.at("p_crash").get<double>();
    s.impact_area = risk.at("impact_area_m2").get<double>();
    s.shelter_factor = risk.at("shelter_factor").get<double>();
    s.energy_alpha = risk.at("energy_alpha_j").get<double>();
    s.energy_beta = risk.at("energy_beta_j").get<double>();
    s.drag_coefficient = risk.at("drag_coefficient").get<double>();
    s.noise_conversion = risk.at("noise_conversion").get<double>();
    s.noise_source = risk.at("noise_source").get<double>();
    s.noise_distance = risk.at("noise_distance_m").get<double>();
    s.noise_cutoff = risk.at("noise_cutoff_m").get<double>();
    const auto& eco = j.at("eco");
    s.eco_mu = eco.at("mu").get<double>();
    s.eco_sigma = eco.at("sigma").get<double>();
    const auto& limits = j.at("limits");
    s.h_min = limits.at("h_min_m").get<double>();
    s.h_max = limits.at("h_max_m").get<double>();
    s.alpha_max = limits.at("alpha_max_rad").get<double>();
    s.beta_max = limits.at("beta_max_rad").get<double>();
    s.validate();
    return s;
}

void save_scenario(const UavScenario& scenario, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_scenario: cannot open " + path);
    out << scenario_to_json(scenario);
    if (!out) throw std::runtime_error("save_scenario: write failed for " + path);
}

UavScenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_scenario: cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return scenario_from_json(buffer.str());
}

}  // namespace mpia::uav
