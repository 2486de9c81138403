#pragma once

#include <string>
#include <vector>

#include "mpia/core/types.hpp"
#include "mpia/problems/uav/path.hpp"
#include "mpia/problems/uav/scenario.hpp"

namespace mpia {

/// One scatter panel per party over the set's objective slices; parties with
/// three or more objectives get a grid of pairwise projections. Output bytes
/// are a pure function of the inputs.
std::string render_front_svg(const std::vector<std::vector<double>>& objectives,
                             const PartyScheme& scheme,
                             const std::vector<std::string>& objective_names,
                             const std::string& title);

void emit_front_plot(const std::vector<std::vector<double>>& objectives,
                     const PartyScheme& scheme, const std::vector<std::string>& objective_names,
                     const std::string& title, const std::string& path);

/// Top-down map view: population-density shading, building cells, hover
/// points, mission endpoints, and the given path polylines.
std::string render_path_svg(const std::vector<uav::UavPath>& paths,
                            const uav::UavScenario& scenario, const std::string& title);

void emit_path_plot(const std::vector<uav::UavPath>& paths, const uav::UavScenario& scenario,
                    const std::string& title, const std::string& path);

}  // namespace mpia
