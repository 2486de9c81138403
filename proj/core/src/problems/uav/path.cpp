#include "mpia/problems/uav/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mpia::uav {

namespace {

// Altitude scale (m) of the fuel formula's air-density falloff.
constexpr double kFuelAltitudeScale = 10.7;

struct Meters {
    double x, y, z;
};

Meters to_meters(const std::array<double, 3>& wp, const UavScenario& s) {
    return {wp[0] * s.cell_size, wp[1] * s.cell_size, wp[2]};
}

double norm3(double dx, double dy, double dz) { return std::sqrt(dx * dx + dy * dy + dz * dz); }

void check_path(const UavPath& path) {
    if (path.size() < 2) throw std::invalid_argument("UavPath: need at least two waypoints");
}

}  // namespace

UavPath decode_path(std::span<const double> x, const UavScenario& scenario) {
    if (x.size() < 3 || x.size() % 3 != 0) {
        throw std::invalid_argument("decode_path: decision vector must hold (x,y,z) triples");
    }
    std::size_t interior = x.size() / 3;
    UavPath path;
    path.waypoints.reserve(interior + 2);
    path.waypoints.push_back({scenario.mission_start[0], scenario.mission_start[1], x[2]});
    for (std::size_t i = 0; i < interior; ++i) {
        path.waypoints.push_back({x[3 * i], x[3 * i + 1], x[3 * i + 2]});
    }
    path.waypoints.push_back(
        {scenario.mission_end[0], scenario.mission_end[1], x[x.size() - 1]});
    return path;
}

std::vector<double> encode_path(const UavPath& path) {
    if (path.size() < 3) throw std::invalid_argument("encode_path: no interior waypoints");
    std::vector<double> x;
    x.reserve(3 * (path.size() - 2));
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        x.push_back(path.waypoints[i][0]);
        x.push_back(path.waypoints[i][1]);
        x.push_back(path.waypoints[i][2]);
    }
    return x;
}

double f_length(const UavPath& path, const UavScenario& scenario) {
    check_path(path);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Meters a = to_meters(path.waypoints[i], scenario);
        Meters b = to_meters(path.waypoints[i + 1], scenario);
        total += norm3(b.x - a.x, b.y - a.y, b.z - a.z);
    }
    return total;
}

double f_fuel(const UavPath& path, const UavScenario& s) {
    check_path(path);
    double w = s.uav_mass;
    double cruise_base = std::pow(w, 1.5);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Meters a = to_meters(path.waypoints[i], s);
        Meters b = to_meters(path.waypoints[i + 1], s);
        double length = norm3(b.x - a.x, b.y - a.y, b.z - a.z);
        double rho = s.air_density * std::exp(-(a.z + b.z) / (2.0 * kFuelAltitudeScale));
        double hover_power = cruise_base * std::sqrt(std::pow(s.gravity, 3.0) /
                                                     (2.0 * rho * s.rotor_disk_area *
                                                      s.rotor_count));
        double climb = w * s.gravity * std::max(b.z - a.z, 0.0);
        total += hover_power * length / s.flight_speed + climb;
    }
    return total;
}

double f_height(const UavPath& path) {
    check_path(path);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        total += std::abs(path.waypoints[i + 1][2] - path.waypoints[i][2]);
    }
    return total;
}

double f_distance(const UavPath& path, const UavScenario& s) {
    check_path(path);
    double total = 0.0;
    for (const auto& hp : s.hover_points) {
        double hx = hp[0] * s.cell_size;
        double hy = hp[1] * s.cell_size;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& wp : path.waypoints) {
            Meters p = to_meters(wp, s);
            best = std::min(best, norm3(p.x - hx, p.y - hy, p.z));
        }
        total += best;
    }
    return total;
}

double crash_velocity(double z, const UavScenario& s) {
    if (z <= 0.0) return 0.0;
    double k = s.drag_coefficient * s.impact_area * s.air_density / s.uav_mass;
    double terminal_sq = 2.0 * s.uav_mass * s.gravity /
                         (s.drag_coefficient * s.impact_area * s.air_density);
    return std::sqrt(terminal_sq * (1.0 - std::exp(-z * k)));
}

double f_fatal(const UavPath& path, const UavScenario& s) {
    check_path(path);
    double total = 0.0;
    double energy_ratio = std::sqrt(s.energy_alpha / s.energy_beta);
    double exponent = 1.0 / (4.0 * s.shelter_factor);
    for (const auto& wp : path.waypoints) {
        double v = crash_velocity(wp[2], s);
        double kinetic = 0.5 * s.uav_mass * v * v;
        if (kinetic <= 0.0) continue;  // resting airframe carries no impact risk
        double denom = 1.0 + energy_ratio * std::pow(s.energy_beta / kinetic, exponent);
        double people = s.population_at(wp[0], wp[1]);
        double vehicles = s.vehicle_at(wp[0], wp[1]);
        total += s.p_crash * s.impact_area * (people + vehicles) / denom;
    }
    return total;
}

double f_eco(const UavPath& path, const UavScenario& s) {
    check_path(path);
    double mode = std::exp(s.eco_mu);
    auto psi = [&](double z) {
        double t = std::log(z) - s.eco_mu;
        return std::exp(-t * t / (2.0 * s.eco_sigma * s.eco_sigma)) /
               (z * s.eco_sigma * std::sqrt(2.0 * 3.14159265358979323846));
    };
    double plateau = psi(mode);
    double total = 0.0;
    for (const auto& wp : path.waypoints) {
        double z = wp[2];
        if (z <= 0.0) throw std::invalid_argument("f_eco: altitude must be positive");
        total += z <= mode ? plateau : psi(z);
    }
    return total;
}

double f_noise(const UavPath& path, const UavScenario& s) {
    check_path(path);
    double total = 0.0;
    for (const auto& wp : path.waypoints) {
        double z = wp[2];
        if (z > s.noise_cutoff) continue;
        double people = s.population_at(wp[0], wp[1]);
        total += s.noise_conversion * people * s.noise_source /
                 (z * z + s.noise_distance * s.noise_distance);
    }
    return total;
}

ConstraintEval constraint_eval(const UavPath& path, const UavScenario& s) {
    check_path(path);
    ConstraintEval eval;
    const std::size_t points = path.size();

    for (const auto& wp : path.waypoints) {
        eval.altitude += std::max(s.h_min - wp[2], 0.0) + std::max(wp[2] - s.h_max, 0.0);
        double b = s.building_at(wp[0], wp[1]);
        if (wp[2] < b) eval.building += b - wp[2];
        double dx = std::max({0.0 - wp[0], wp[0] - static_cast<double>(s.width), 0.0});
        double dy = std::max({0.0 - wp[1], wp[1] - static_cast<double>(s.height), 0.0});
        eval.out_of_grid += dx + dy;
    }

    // Horizontal projections in meters; angles are scale-invariant but the
    // slope needs the metric length.
    std::vector<std::array<double, 3>> seg(points - 1);
    for (std::size_t i = 0; i + 1 < points; ++i) {
        Meters a = to_meters(path.waypoints[i], s);
        Meters b = to_meters(path.waypoints[i + 1], s);
        seg[i] = {b.x - a.x, b.y - a.y, b.z - a.z};
    }
    auto horizontal_norm = [](const std::array<double, 3>& v) {
        return std::sqrt(v[0] * v[0] + v[1] * v[1]);
    };
    for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
        double na = horizontal_norm(seg[i]);
        double nb = horizontal_norm(seg[i + 1]);
        if (na <= 0.0 || nb <= 0.0) continue;  // vertical segment: no turning angle
        double cosine = (seg[i][0] * seg[i + 1][0] + seg[i][1] * seg[i + 1][1]) / (na * nb);
        double alpha = std::acos(std::clamp(cosine, -1.0, 1.0));
        eval.turning += std::max(alpha - s.alpha_max, 0.0);
    }
    for (const auto& v : seg) {
        double horizontal = horizontal_norm(v);
        double beta;
        if (horizontal <= 0.0) {
            beta = v[2] == 0.0 ? 0.0 : 3.14159265358979323846 / 2.0;
        } else {
            beta = std::atan(std::abs(v[2]) / horizontal);
        }
        eval.slope += std::max(beta - s.beta_max, 0.0);
    }
    return eval;
}

}  // namespace mpia::uav
