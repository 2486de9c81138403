#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "mpia/problems/uav/scenario.hpp"

namespace mpia::uav {

/// A decoded trajectory: waypoints (x, y, z) with x, y in grid units and z in
/// meters. The first and last waypoints sit on the mission endpoints; their
/// altitudes mirror the adjacent interior waypoint.
struct UavPath {
    std::vector<std::array<double, 3>> waypoints;

    [[nodiscard]] std::size_t size() const { return waypoints.size(); }
};

/// Number of decision variables for a path with `interior` free waypoints:
/// three per interior waypoint, endpoints contribute none.
constexpr std::size_t path_dimension(std::size_t interior) { return 3 * interior; }

inline constexpr std::size_t kDefaultInteriorWaypoints = 28;

/// Decision vector layout: (x_1, y_1, z_1, ..., x_m, y_m, z_m) for the m
/// interior waypoints. Endpoint altitudes copy the neighbouring interior
/// waypoint, so decode(encode(p)) = p for any path obeying that convention.
UavPath decode_path(std::span<const double> x, const UavScenario& scenario);
std::vector<double> encode_path(const UavPath& path);

double f_length(const UavPath& path, const UavScenario& scenario);
double f_fuel(const UavPath& path, const UavScenario& scenario);
double f_height(const UavPath& path);
double f_distance(const UavPath& path, const UavScenario& scenario);
double f_fatal(const UavPath& path, const UavScenario& scenario);
double f_eco(const UavPath& path, const UavScenario& scenario);
double f_noise(const UavPath& path, const UavScenario& scenario);

/// Ground-impact speed of a falling airframe at drop height z, the quantity
/// the fatal-risk kinetic energy is built on. Increasing in z, bounded by
/// the terminal velocity.
double crash_velocity(double z, const UavScenario& scenario);

/// Non-negative violation totals per constraint family; all zero iff the
/// path is feasible.
struct ConstraintEval {
    double altitude = 0.0;
    double turning = 0.0;
    double slope = 0.0;
    double building = 0.0;
    double out_of_grid = 0.0;

    [[nodiscard]] double total() const {
        return altitude + turning + slope + building + out_of_grid;
    }
};

ConstraintEval constraint_eval(const UavPath& path, const UavScenario& scenario);

}  // namespace mpia::uav
