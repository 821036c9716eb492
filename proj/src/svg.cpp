#include "plexsim/svg.hpp"

#include "plexsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace plexsim {

namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!(hi > lo)) {
            lo -= 0.5;
            hi += 0.5;
        } else {
            const double m = 0.05 * (hi - lo);
            lo -= m;
            hi += m;
        }
    }
};

std::vector<double> ticks(double lo, double hi, int target = 6) {
    const double span = hi - lo;
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= raw) {
            step = mag * m;
            break;
        }
    }
    std::vector<double> out;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12 * span; t += step) {
        out.push_back(t);
    }
    return out;
}

void open_svg(std::ostringstream& out, const std::string& title,
              const std::string& x_label, const std::string& y_label) {
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth
        << "' height='" << kHeight << "' viewBox='0 0 " << kWidth << ' ' << kHeight
        << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << kWidth / 2 << "' y='24' text-anchor='middle' "
           "font-family='sans-serif' font-size='16'>" << title << "</text>\n";
    out << "<text x='" << kWidth / 2 << "' y='" << kHeight - 10
        << "' text-anchor='middle' font-family='sans-serif' font-size='13'>" << x_label
        << "</text>\n";
    out << "<text x='16' y='" << kHeight / 2
        << "' text-anchor='middle' font-family='sans-serif' font-size='13' "
           "transform='rotate(-90 16 " << kHeight / 2 << ")'>" << y_label
        << "</text>\n";
}

void save(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error("cannot open '" + path + "' for writing");
    }
    f << text;
}

} // namespace

void write_line_svg(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series, bool log_y) {
    Range xr, yr;
    bool all_positive = true;
    for (const auto& s : series) {
        for (double v : s.x) xr.include(v);
        for (double v : s.y) {
            yr.include(v);
            all_positive = all_positive && v > 0.0;
        }
    }
    if (!std::isfinite(xr.lo) || !std::isfinite(yr.lo)) {
        throw Error("write_line_svg: no data");
    }
    const bool use_log = log_y && all_positive;
    if (use_log) {
        yr = Range{};
        for (const auto& s : series) {
            for (double v : s.y) yr.include(std::log10(v));
        }
    }
    xr.pad();
    yr.pad();

    const auto map_x = [&](double v) {
        return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * (kWidth - kLeft - kRight);
    };
    const auto map_y = [&](double v) {
        if (use_log) v = std::log10(v);
        return kHeight - kBottom - (v - yr.lo) / (yr.hi - yr.lo) * (kHeight - kTop - kBottom);
    };

    std::ostringstream out;
    open_svg(out, title, x_label, use_log ? y_label + " (log)" : y_label);

    for (double t : ticks(xr.lo, xr.hi)) {
        const double px = map_x(t);
        out << "<line x1='" << px << "' y1='" << kTop << "' x2='" << px << "' y2='"
            << kHeight - kBottom << "' stroke='#dddddd'/>\n";
        out << "<text x='" << px << "' y='" << kHeight - kBottom + 18
            << "' text-anchor='middle' font-family='sans-serif' font-size='11'>"
            << fmt(t) << "</text>\n";
    }
    for (double t : ticks(yr.lo, yr.hi)) {
        const double py = kHeight - kBottom -
                          (t - yr.lo) / (yr.hi - yr.lo) * (kHeight - kTop - kBottom);
        out << "<line x1='" << kLeft << "' y1='" << py << "' x2='" << kWidth - kRight
            << "' y2='" << py << "' stroke='#dddddd'/>\n";
        out << "<text x='" << kLeft - 6 << "' y='" << py + 4
            << "' text-anchor='end' font-family='sans-serif' font-size='11'>"
            << fmt(use_log ? std::pow(10.0, t) : t) << "</text>\n";
    }
    out << "<rect x='" << kLeft << "' y='" << kTop << "' width='"
        << kWidth - kLeft - kRight << "' height='" << kHeight - kTop - kBottom
        << "' fill='none' stroke='black'/>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto& sr = series[s];
        out << "<polyline fill='none' stroke='"
            << kSeriesColors[s % std::size(kSeriesColors)] << "' stroke-width='1.5' points='";
        for (std::size_t i = 0; i < sr.x.size(); ++i) {
            out << map_x(sr.x[i]) << ',' << map_y(sr.y[i]) << ' ';
        }
        out << "'/>\n";
        out << "<text x='" << kWidth - kRight - 8 << "' y='" << kTop + 18 + 16 * s
            << "' text-anchor='end' font-family='sans-serif' font-size='12' fill='"
            << kSeriesColors[s % std::size(kSeriesColors)] << "'>" << sr.label
            << "</text>\n";
    }
    out << "</svg>\n";
    save(path, out.str());
}

void write_heatmap_svg(const std::string& path, const std::string& title,
                       const std::string& x_label, const std::string& y_label,
                       const std::vector<double>& x, const std::vector<double>& y,
                       const std::vector<double>& values, double center) {
    if (x.empty() || y.empty() || values.size() != x.size() * y.size()) {
        throw Error("write_heatmap_svg: grid/value size mismatch");
    }
    // log-ratio color scale: blue below center, red above
    double max_abs = 0.0;
    for (double v : values) {
        if (v > 0.0 && center > 0.0) {
            max_abs = std::max(max_abs, std::abs(std::log10(v / center)));
        }
    }
    if (max_abs == 0.0) max_abs = 1.0;

    const auto color = [&](double v) {
        double t = 0.0;
        if (v > 0.0 && center > 0.0) {
            t = std::clamp(std::log10(v / center) / max_abs, -1.0, 1.0);
        }
        int r, g, b;
        if (t >= 0) { // white -> red
            r = 255;
            g = b = static_cast<int>(255 * (1.0 - t));
        } else { // white -> blue
            b = 255;
            r = g = static_cast<int>(255 * (1.0 + t));
        }
        char buf[16];
        std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
        return std::string(buf);
    };

    const double cell_w = (kWidth - kLeft - kRight) / x.size();
    const double cell_h = (kHeight - kTop - kBottom) / y.size();

    std::ostringstream out;
    open_svg(out, title, x_label, y_label);
    for (std::size_t j = 0; j < y.size(); ++j) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double v = values[j * x.size() + i];
            out << "<rect x='" << kLeft + i * cell_w << "' y='"
                << kHeight - kBottom - (j + 1) * cell_h << "' width='" << cell_w + 0.5
                << "' height='" << cell_h + 0.5 << "' fill='" << color(v) << "'/>\n";
        }
    }
    out << "<rect x='" << kLeft << "' y='" << kTop << "' width='"
        << kWidth - kLeft - kRight << "' height='" << kHeight - kTop - kBottom
        << "' fill='none' stroke='black'/>\n";
    out << "<text x='" << kLeft << "' y='" << kHeight - kBottom + 18
        << "' font-family='sans-serif' font-size='11'>" << fmt(x.front()) << "</text>\n";
    out << "<text x='" << kWidth - kRight << "' y='" << kHeight - kBottom + 18
        << "' text-anchor='end' font-family='sans-serif' font-size='11'>" << fmt(x.back())
        << "</text>\n";
    out << "<text x='" << kLeft - 6 << "' y='" << kHeight - kBottom
        << "' text-anchor='end' font-family='sans-serif' font-size='11'>" << fmt(y.front())
        << "</text>\n";
    out << "<text x='" << kLeft - 6 << "' y='" << kTop + 10
        << "' text-anchor='end' font-family='sans-serif' font-size='11'>" << fmt(y.back())
        << "</text>\n";
    out << "</svg>\n";
    save(path, out.str());
}

} // namespace plexsim
