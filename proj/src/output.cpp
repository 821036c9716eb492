#include "plexsim/output.hpp"

#include "plexsim/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace plexsim {

namespace {

using nlohmann::json;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw Error("write to '" + path + "' failed");
    }
}

// JSON numbers are stored pre-rounded so the dump carries 12 significant
// digits at most.
json num(double x) { return round_12sig(x); }

json point_json(const SweepPoint& p) {
    json j;
    j["param1"] = num(p.param1);
    if (p.param2) j["param2"] = num(*p.param2);
    j["omega_eV"] = num(p.drive_omega);
    j["engine"] = to_string(p.engine);
    j["error_code"] = static_cast<int>(p.status);
    if (p.status == PointStatus::Ok) {
        j["g2"] = num(p.g2);
        j["g3"] = num(p.g3);
        j["mean_n"] = num(p.mean_n);
        j["regime"] = to_string(p.regime);
        if (p.delta_theta) j["delta_theta"] = num(*p.delta_theta);
    } else {
        j["error"] = p.error;
    }
    return j;
}

} // namespace

OutputFormat output_format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw ConfigError("format", "expected csv or json, got '" + s + "'");
}

double round_12sig(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string format_12sig(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string to_text(const SweepResult& result, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "omega_eV,param1,param2,g2,g3,mean_n,regime,engine,error_code\n";
        for (const auto& p : result.points) {
            out << format_12sig(p.drive_omega) << ',' << format_12sig(p.param1) << ',';
            if (p.param2) out << format_12sig(*p.param2);
            out << ',';
            if (p.status == PointStatus::Ok) {
                out << format_12sig(p.g2) << ',' << format_12sig(p.g3) << ','
                    << format_12sig(p.mean_n) << ',' << to_string(p.regime);
            } else {
                out << ",,,";
            }
            out << ',' << to_string(p.engine) << ',' << static_cast<int>(p.status)
                << '\n';
        }
        return out.str();
    }
    json j;
    j["axes"] = result.axis_names;
    j["shape"] = result.shape;
    j["metadata"] = result.metadata;
    j["wall_seconds"] = result.wall_seconds;
    json points = json::array();
    for (const auto& p : result.points) points.push_back(point_json(p));
    j["points"] = std::move(points);
    return j.dump(2) + "\n";
}

std::string to_text(const CorrelationResult& result, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "omega_eV,param1,param2,g2,g3,mean_n,regime,engine,error_code\n";
        out << format_12sig(result.drive_omega) << ",,," << format_12sig(result.g2)
            << ',' << format_12sig(result.g3) << ',' << format_12sig(result.mean_n)
            << ',' << to_string(result.regime) << ",,0\n";
        return out.str();
    }
    json j;
    j["omega_eV"] = num(result.drive_omega);
    j["g2"] = num(result.g2);
    j["g3"] = num(result.g3);
    j["mean_n"] = num(result.mean_n);
    j["regime"] = to_string(result.regime);
    return j.dump(2) + "\n";
}

std::string to_text(const LevelDiagram& result, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "manifold,index,energy_eV\n";
        for (const auto& [manifold, levels] : result.manifolds) {
            for (std::size_t i = 0; i < levels.size(); ++i) {
                out << manifold << ',' << i << ',' << format_12sig(levels[i]) << '\n';
            }
        }
        return out.str();
    }
    json m;
    for (const auto& [manifold, levels] : result.manifolds) {
        json vals = json::array();
        for (double v : levels) vals.push_back(num(v));
        m[std::to_string(manifold)] = std::move(vals);
    }
    return json{{"manifolds", std::move(m)}}.dump(2) + "\n";
}

std::string to_text(const SpectrumResult& result, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "omega_eV,response\n";
        for (std::size_t i = 0; i < result.omegas.size(); ++i) {
            out << format_12sig(result.omegas[i]) << ','
                << format_12sig(result.response[i]) << '\n';
        }
        return out.str();
    }
    json j;
    json omegas = json::array(), response = json::array();
    for (double v : result.omegas) omegas.push_back(num(v));
    for (double v : result.response) response.push_back(num(v));
    j["omegas"] = std::move(omegas);
    j["response"] = std::move(response);
    j["normalization"] = result.normalization;
    return j.dump(2) + "\n";
}

std::string to_text(const PhotonStatistics& result, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "m,probability,delta_p\n";
        for (std::size_t m = 0; m < result.probabilities.size(); ++m) {
            out << m << ',' << format_12sig(result.probabilities[m]) << ','
                << format_12sig(result.deltas[m]) << '\n';
        }
        return out.str();
    }
    json j;
    json probs = json::array(), deltas = json::array();
    for (double v : result.probabilities) probs.push_back(num(v));
    for (double v : result.deltas) deltas.push_back(num(v));
    j["probabilities"] = std::move(probs);
    j["deltas"] = std::move(deltas);
    j["mean_n"] = num(result.mean_n);
    return j.dump(2) + "\n";
}

std::string to_text(const PhaseCurve& result, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "omega_eV,delta_theta_rad,abs_delta_theta_rad\n";
        for (std::size_t i = 0; i < result.omegas.size(); ++i) {
            out << format_12sig(result.omegas[i]) << ','
                << format_12sig(result.delta_theta[i]) << ','
                << format_12sig(std::abs(result.delta_theta[i])) << '\n';
        }
        return out.str();
    }
    json j;
    json omegas = json::array(), theta = json::array();
    for (double v : result.omegas) omegas.push_back(num(v));
    for (double v : result.delta_theta) theta.push_back(num(v));
    j["omegas"] = std::move(omegas);
    j["delta_theta"] = std::move(theta);
    return j.dump(2) + "\n";
}

void write_results(const SweepResult& r, OutputFormat f, const std::string& p) {
    write_file(p, to_text(r, f));
}
void write_results(const CorrelationResult& r, OutputFormat f, const std::string& p) {
    write_file(p, to_text(r, f));
}
void write_results(const LevelDiagram& r, OutputFormat f, const std::string& p) {
    write_file(p, to_text(r, f));
}
void write_results(const SpectrumResult& r, OutputFormat f, const std::string& p) {
    write_file(p, to_text(r, f));
}
void write_results(const PhotonStatistics& r, OutputFormat f, const std::string& p) {
    write_file(p, to_text(r, f));
}
void write_results(const PhaseCurve& r, OutputFormat f, const std::string& p) {
    write_file(p, to_text(r, f));
}

std::vector<SweepCsvRow> read_sweep_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "' for reading");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw Error("empty CSV '" + path + "'");
    }
    if (line != "omega_eV,param1,param2,g2,g3,mean_n,regime,engine,error_code") {
        throw Error("unexpected CSV header in '" + path + "'");
    }
    std::vector<SweepCsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        while (fields.size() < 9) fields.emplace_back();
        SweepCsvRow row;
        row.omega_eV = std::strtod(fields[0].c_str(), nullptr);
        row.param1 = std::strtod(fields[1].c_str(), nullptr);
        if (!fields[2].empty()) row.param2 = std::strtod(fields[2].c_str(), nullptr);
        if (!fields[3].empty()) row.g2 = std::strtod(fields[3].c_str(), nullptr);
        if (!fields[4].empty()) row.g3 = std::strtod(fields[4].c_str(), nullptr);
        if (!fields[5].empty()) row.mean_n = std::strtod(fields[5].c_str(), nullptr);
        row.regime = fields[6];
        row.engine = fields[7];
        row.error_code = std::atoi(fields[8].c_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace plexsim
