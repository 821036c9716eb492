// svg.hpp — static SVG line plots and heatmaps for sweep outputs

#pragma once

#include <string>
#include <vector>

namespace plexsim {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Standalone SVG with axes, ticks and one polyline per series. Y axis
// switches to log scale when requested and all values are positive.
void write_line_svg(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series, bool log_y = false);

// Row-major heatmap (rows = y values, columns = x values) with a simple
// diverging color ramp centered at `center` (use 1.0 for correlation maps).
void write_heatmap_svg(const std::string& path, const std::string& title,
                       const std::string& x_label, const std::string& y_label,
                       const std::vector<double>& x, const std::vector<double>& y,
                       const std::vector<double>& values, double center = 1.0);

} // namespace plexsim
