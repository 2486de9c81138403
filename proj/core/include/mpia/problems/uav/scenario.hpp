#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mpia::uav {

/// Map synthesis parameters. Densities are sums of Gaussian radial bumps;
/// building heights are lognormal on a Bernoulli subset of cells.
struct MapGenParams {
    std::size_t width = 50;
    std::size_t height = 50;
    double building_fraction = 0.25;
    std::size_t density_bumps = 6;
    double bump_sigma_min = 3.0;   ///< cells
    double bump_sigma_max = 8.0;   ///< cells
    double bump_peak_min = 0.005;  ///< people per square meter
    double bump_peak_max = 0.03;
    double vehicle_scale = 0.2;    ///< vehicle bumps are this fraction of people bumps
};

/// One urban map plus every physical and risk constant the objectives need.
/// Horizontal coordinates are in grid units (one cell = cell_size meters);
/// altitudes are in meters.
struct UavScenario {
    std::string name = "unnamed";
    std::size_t width = 50;
    std::size_t height = 50;
    double cell_size = 100.0;  ///< meters per cell edge

    // Row-major width x height grids, cell (cx, cy) at index cy * width + cx.
    std::vector<double> building_height;    ///< meters
    std::vector<double> population_density; ///< people per square meter
    std::vector<double> vehicle_density;    ///< vehicles per square meter

    std::array<double, 2> mission_start{1.0, 1.0};
    std::array<double, 2> mission_end{45.0, 45.0};
    std::vector<std::array<double, 2>> hover_points{{25.0, 30.0}, {34.0, 20.0}, {40.0, 35.0}};

    // Physics.
    double uav_mass = 1.38;       ///< kg; also the fuel formula's weight W
    double flight_speed = 10.0;   ///< m/s
    double air_density = 1.225;   ///< kg/m^3 at ground level
    double rotor_count = 4.0;
    double rotor_disk_area = 0.1; ///< m^2
    double gravity = 9.8;

    // Third-party risk model constants; standard small-quadrotor figures.
    double p_crash = 1e-4;
    double impact_area = 0.5;       ///< S_h, m^2
    double shelter_factor = 0.5;    ///< S_c
    double energy_alpha = 1e2;      ///< J, fatal with probability S_c
    double energy_beta = 1e6;       ///< J, fatal with certainty
    double drag_coefficient = 0.3;  ///< R_I
    double noise_conversion = 1.0;  ///< k
    double noise_source = 80.0;     ///< L_h
    double noise_distance = 50.0;   ///< d, m
    double noise_cutoff = 100.0;    ///< altitude above which noise is ignored, m

    // Building-height lognormal, shared by map generation and f_eco.
    double eco_mu = 3.04670;
    double eco_sigma = 0.76023;

    // Flight envelope.
    double h_min = 10.0;   ///< m
    double h_max = 120.0;  ///< m
    double alpha_max = 1.0471975511965977;  ///< pi/3
    double beta_max = 0.7853981633974483;   ///< pi/4

    [[nodiscard]] std::size_t cell_index(double x, double y) const;
    [[nodiscard]] double building_at(double x, double y) const;
    [[nodiscard]] double population_at(double x, double y) const;
    [[nodiscard]] double vehicle_at(double x, double y) const;
    [[nodiscard]] bool inside_grid(double x, double y) const;

    /// Throws std::invalid_argument on negative grids, hover points outside
    /// the grid, or an empty flight envelope.
    void validate() const;
};

/// Seeds used for the two stock maps.
inline constexpr std::uint64_t kMapASeed = 1001;
inline constexpr std::uint64_t kMapBSeed = 2002;

/// Deterministic map synthesis: same seed, same scenario, bit for bit.
UavScenario generate_map(std::uint64_t seed, const MapGenParams& params);

/// The two stock maps used by the twelve cases.
UavScenario make_map_a();
UavScenario make_map_b();

/// Versioned JSON persistence. save_scenario writes deterministic bytes so
/// the stock maps can be checksummed.
void save_scenario(const UavScenario& scenario, const std::string& path);
UavScenario load_scenario(const std::string& path);

/// Serializes without touching the filesystem (the exact bytes save_scenario
/// writes).
std::string scenario_to_json(const UavScenario& scenario);
UavScenario scenario_from_json(const std::string& text);

}  // namespace mpia::uav
