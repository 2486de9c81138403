#include "mpia/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mpia {

namespace {

std::string fmt(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", v);
    return buffer;
}

std::string fmt_tick(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3g", v);
    return buffer;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range padded_range(const std::vector<double>& values) {
    if (values.empty()) return {0.0, 1.0};
    double lo = values.front();
    double hi = values.front();
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double pad = hi > lo ? 0.05 * (hi - lo) : 0.5;
    return {lo - pad, hi + pad};
}

constexpr double kPanelW = 340.0;
constexpr double kPanelH = 320.0;
constexpr double kMarginL = 62.0;
constexpr double kMarginR = 18.0;
constexpr double kMarginT = 34.0;
constexpr double kMarginB = 52.0;
constexpr std::size_t kPanelsPerRow = 4;

void draw_panel(std::ostringstream& out, double ox, double oy, const std::string& caption,
                const std::string& x_label, const std::string& y_label,
                const std::vector<double>& xs, const std::vector<double>& ys) {
    const double plot_w = kPanelW - kMarginL - kMarginR;
    const double plot_h = kPanelH - kMarginT - kMarginB;
    const double px = ox + kMarginL;
    const double py = oy + kMarginT;
    Range rx = padded_range(xs);
    Range ry = padded_range(ys);
    auto map_x = [&](double v) { return px + (v - rx.lo) / (rx.hi - rx.lo) * plot_w; };
    auto map_y = [&](double v) { return py + plot_h - (v - ry.lo) / (ry.hi - ry.lo) * plot_h; };

    out << "<rect x=\"" << fmt(px) << "\" y=\"" << fmt(py) << "\" width=\"" << fmt(plot_w)
        << "\" height=\"" << fmt(plot_h)
        << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt(ox + kPanelW / 2.0) << "\" y=\"" << fmt(oy + 20.0)
        << "\" text-anchor=\"middle\" font-size=\"13\" fill=\"#222\">" << caption << "</text>\n";

    for (int t = 0; t < 5; ++t) {
        double f = static_cast<double>(t) / 4.0;
        double vx = rx.lo + f * (rx.hi - rx.lo);
        double vy = ry.lo + f * (ry.hi - ry.lo);
        double gx = map_x(vx);
        double gy = map_y(vy);
        out << "<line x1=\"" << fmt(gx) << "\" y1=\"" << fmt(py + plot_h) << "\" x2=\"" << fmt(gx)
            << "\" y2=\"" << fmt(py + plot_h + 4.0) << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << fmt(gx) << "\" y=\"" << fmt(py + plot_h + 16.0)
            << "\" text-anchor=\"middle\" font-size=\"9\" fill=\"#333\">" << fmt_tick(vx)
            << "</text>\n";
        out << "<line x1=\"" << fmt(px - 4.0) << "\" y1=\"" << fmt(gy) << "\" x2=\"" << fmt(px)
            << "\" y2=\"" << fmt(gy) << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << fmt(px - 6.0) << "\" y=\"" << fmt(gy + 3.0)
            << "\" text-anchor=\"end\" font-size=\"9\" fill=\"#333\">" << fmt_tick(vy)
            << "</text>\n";
    }
    out << "<text x=\"" << fmt(px + plot_w / 2.0) << "\" y=\"" << fmt(py + plot_h + 32.0)
        << "\" text-anchor=\"middle\" font-size=\"11\" fill=\"#222\">" << x_label << "</text>\n";
    out << "<text x=\"" << fmt(ox + 14.0) << "\" y=\"" << fmt(py + plot_h / 2.0)
        << "\" text-anchor=\"middle\" font-size=\"11\" fill=\"#222\" transform=\"rotate(-90 "
        << fmt(ox + 14.0) << " " << fmt(py + plot_h / 2.0) << ")\">" << y_label << "</text>\n";

    for (std::size_t i = 0; i < xs.size(); ++i) {
        out << "<circle cx=\"" << fmt(map_x(xs[i])) << "\" cy=\"" << fmt(map_y(ys[i]))
            << "\" r=\"3\" fill=\"#2457a8\" fill-opacity=\"0.75\"/>\n";
    }
}

}  // namespace

std::string render_front_svg(const std::vector<std::vector<double>>& objectives,
                             const PartyScheme& scheme,
                             const std::vector<std::string>& objective_names,
                             const std::string& title) {
    if (objective_names.size() != scheme.total_objectives()) {
        throw std::invalid_argument("render_front_svg: one name per objective required");
    }
    struct Panel {
        std::string caption, x_label, y_label;
        std::vector<double> xs, ys;
    };
    std::vector<Panel> panels;
    for (std::size_t k = 0; k < scheme.party_count(); ++k) {
        const auto& owned = scheme.objectives_of(k);
        std::string party = "party " + std::to_string(k + 1);
        auto collect = [&](std::size_t obj) {
            std::vector<double> values;
            values.reserve(objectives.size());
            for (const auto& p : objectives) values.push_back(p.at(obj));
            return values;
        };
        if (owned.size() == 1) {
            Panel panel;
            panel.caption = party;
            panel.x_label = objective_names[owned[0]];
            panel.y_label = "member";
            panel.xs = collect(owned[0]);
            panel.ys.resize(panel.xs.size());
            for (std::size_t i = 0; i < panel.ys.size(); ++i) {
                panel.ys[i] = static_cast<double>(i);
            }
            panels.push_back(std::move(panel));
            continue;
        }
        for (std::size_t a = 0; a < owned.size(); ++a) {
            for (std::size_t b = a + 1; b < owned.size(); ++b) {
                Panel panel;
                panel.caption = owned.size() == 2
                                    ? party
                                    : party + ": " + objective_names[owned[a]] + " vs " +
                                          objective_names[owned[b]];
                panel.x_label = objective_names[owned[a]];
                panel.y_label = objective_names[owned[b]];
                panel.xs = collect(owned[a]);
                panel.ys = collect(owned[b]);
                panels.push_back(std::move(panel));
            }
        }
    }

    std::size_t columns = std::min(panels.size(), kPanelsPerRow);
    columns = std::max<std::size_t>(columns, 1);
    std::size_t rows = (panels.size() + columns - 1) / columns;
    rows = std::max<std::size_t>(rows, 1);
    double width = static_cast<double>(columns) * kPanelW;
    double height = static_cast<double>(rows) * kPanelH + 28.0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
        << "\" font-family=\"Helvetica,Arial,sans-serif\">\n";
    out << "<rect width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << fmt(width / 2.0)
        << "\" y=\"18\" text-anchor=\"middle\" font-size=\"15\" fill=\"#111\">" << title
        << "</text>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        double ox = static_cast<double>(i % columns) * kPanelW;
        double oy = 28.0 + static_cast<double>(i / columns) * kPanelH;
        draw_panel(out, ox, oy, panels[i].caption, panels[i].x_label, panels[i].y_label,
                   panels[i].xs, panels[i].ys);
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_path_svg(const std::vector<uav::UavPath>& paths,
                            const uav::UavScenario& scenario, const std::string& title) {
    const double scale = 14.0;
    const double margin = 40.0;
    const double gw = static_cast<double>(scenario.width);
    const double gh = static_cast<double>(scenario.height);
    const double width = gw * scale + 2.0 * margin;
    const double height = gh * scale + 2.0 * margin + 20.0;
    auto map_x = [&](double x) { return margin + x * scale; };
    auto map_y = [&](double y) { return margin + 20.0 + (gh - y) * scale; };

    double max_density = 0.0;
    for (double d : scenario.population_density) max_density = std::max(max_density, d);
    double max_building = 0.0;
    for (double h : scenario.building_height) max_building = std::max(max_building, h);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
        << "\" font-family=\"Helvetica,Arial,sans-serif\">\n";
    out << "<rect width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << fmt(width / 2.0)
        << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\" fill=\"#111\">" << title
        << "</text>\n";

    for (std::size_t cy = 0; cy < scenario.height; ++cy) {
        for (std::size_t cx = 0; cx < scenario.width; ++cx) {
            std::size_t idx = cy * scenario.width + cx;
            double x0 = map_x(static_cast<double>(cx));
            double y0 = map_y(static_cast<double>(cy + 1));
            double density = scenario.population_density[idx];
            if (max_density > 0.0 && density > 0.0) {
                out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\""
                    << fmt(scale) << "\" height=\"" << fmt(scale)
                    << "\" fill=\"#e25822\" fill-opacity=\""
                    << fmt(0.75 * density / max_density) << "\"/>\n";
            }
            double building = scenario.building_height[idx];
            if (building > 0.0) {
                double opacity = 0.25 + (max_building > 0.0 ? 0.5 * building / max_building : 0.0);
                out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\""
                    << fmt(scale) << "\" height=\"" << fmt(scale)
                    << "\" fill=\"#4a4a4a\" fill-opacity=\"" << fmt(opacity) << "\"/>\n";
            }
        }
    }
    out << "<rect x=\"" << fmt(map_x(0.0)) << "\" y=\"" << fmt(map_y(gh)) << "\" width=\""
        << fmt(gw * scale) << "\" height=\"" << fmt(gh * scale)
        << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";

    static const char* kPalette[] = {"#2457a8", "#7a3ba8", "#1c7c54",
                                     "#a85c24", "#a82424", "#247ca8"};
    for (std::size_t p = 0; p < paths.size(); ++p) {
        const auto& path = paths[p];
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[p % 6]
            << "\" stroke-width=\"1.5\" stroke-opacity=\"0.85\" points=\"";
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i) out << " ";
            out << fmt(map_x(path.waypoints[i][0])) << "," << fmt(map_y(path.waypoints[i][1]));
        }
        out << "\"/>\n";
    }

    for (std::size_t h = 0; h < scenario.hover_points.size(); ++h) {
        double hx = map_x(scenario.hover_points[h][0]);
        double hy = map_y(scenario.hover_points[h][1]);
        out << "<circle cx=\"" << fmt(hx) << "\" cy=\"" << fmt(hy)
            << "\" r=\"6\" fill=\"#1c7c54\" stroke=\"#0c3c28\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(hx + 9.0) << "\" y=\"" << fmt(hy + 4.0)
            << "\" font-size=\"11\" fill=\"#0c3c28\">UHP" << h + 1 << "</text>\n";
    }
    auto endpoint = [&](double x, double y, const char* color, const char* label) {
        out << "<circle cx=\"" << fmt(map_x(x)) << "\" cy=\"" << fmt(map_y(y))
            << "\" r=\"6\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << fmt(map_x(x) + 9.0) << "\" y=\"" << fmt(map_y(y) + 4.0)
            << "\" font-size=\"11\" fill=\"#111\">" << label << "</text>\n";
    };
    endpoint(scenario.mission_start[0], scenario.mission_start[1], "#2457a8", "start");
    endpoint(scenario.mission_end[0], scenario.mission_end[1], "#a82424", "end");
    out << "</svg>\n";
    return out.str();
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

void emit_front_plot(const std::vector<std::vector<double>>& objectives,
                     const PartyScheme& scheme, const std::vector<std::string>& objective_names,
                     const std::string& title, const std::string& path) {
    write_file(path, render_front_svg(objectives, scheme, objective_names, title));
}

void emit_path_plot(const std::vector<uav::UavPath>& paths, const uav::UavScenario& scenario,
                    const std::string& title, const std::string& path) {
    write_file(path, render_path_svg(paths, scenario, title));
}

}  // namespace mpia
