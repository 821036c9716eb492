#include "plexsim/config.hpp"

#include "plexsim/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace plexsim {

namespace {

using nlohmann::json;

std::string join(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "." + key;
}

void check_keys(const json& obj, const std::string& path,
                const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (allowed.find(key) == allowed.end()) {
            throw ConfigError(join(path, key), "unknown key");
        }
    }
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ConfigError(join(path, key), "missing required field");
    }
    return *it;
}

double energy_field(const json& obj, const std::string& path, const std::string& key) {
    const json& v = require(obj, path, key);
    if (!v.is_string()) {
        throw ConfigError(join(path, key),
                          "energies must be strings with an explicit unit, e.g. \"350 meV\"");
    }
    return parse_energy(v.get<std::string>(), join(path, key));
}

double plain_number(const json& v, const std::string& path) {
    if (!v.is_number()) {
        throw ConfigError(path, "expected a plain number");
    }
    return v.get<double>();
}

// energies=true parses unit strings, otherwise plain numbers
GridConfig parse_grid(const json& v, const std::string& path, bool energies) {
    if (!v.is_object()) {
        throw ConfigError(path, "expected an object with start/stop/points or values");
    }
    check_keys(v, path, {"start", "stop", "points", "values"});
    GridConfig grid;
    if (v.contains("values")) {
        if (v.contains("start") || v.contains("stop") || v.contains("points")) {
            throw ConfigError(path, "give either values or start/stop/points, not both");
        }
        const json& vals = v["values"];
        if (!vals.is_array() || vals.empty()) {
            throw ConfigError(join(path, "values"), "expected a non-empty array");
        }
        for (std::size_t i = 0; i < vals.size(); ++i) {
            const std::string elem_path = path + ".values[" + std::to_string(i) + "]";
            if (energies) {
                if (!vals[i].is_string()) {
                    throw ConfigError(elem_path, "energy values need an explicit unit");
                }
                grid.values.push_back(parse_energy(vals[i].get<std::string>(), elem_path));
            } else {
                grid.values.push_back(plain_number(vals[i], elem_path));
            }
        }
        return grid;
    }

    double start, stop;
    if (energies) {
        start = energy_field(v, path, "start");
        stop = energy_field(v, path, "stop");
    } else {
        start = plain_number(require(v, path, "start"), join(path, "start"));
        stop = plain_number(require(v, path, "stop"), join(path, "stop"));
    }
    const json& pts = require(v, path, "points");
    if (!pts.is_number_integer() || pts.get<int>() < 1) {
        throw ConfigError(join(path, "points"), "expected a positive integer");
    }
    const int n = pts.get<int>();
    if (n == 1) {
        if (start != stop) {
            throw ConfigError(path, "a single-point grid needs start == stop");
        }
        grid.values.push_back(start);
        return grid;
    }
    for (int i = 0; i < n; ++i) {
        grid.values.push_back(start + (stop - start) * i / (n - 1));
    }
    return grid;
}

EmitterSpec parse_emitter(const json& v, const std::string& path) {
    if (!v.is_object()) {
        throw ConfigError(path, "expected an emitter object");
    }
    check_keys(v, path, {"label", "omega_e", "gamma_e", "g"});
    EmitterSpec e;
    if (v.contains("label")) {
        if (!v["label"].is_string()) {
            throw ConfigError(join(path, "label"), "expected a string");
        }
        e.label = v["label"].get<std::string>();
    }
    e.omega_e = energy_field(v, path, "omega_e");
    e.gamma_e = energy_field(v, path, "gamma_e");
    e.g = energy_field(v, path, "g");
    return e;
}

SystemSpec parse_system(const json& v, const std::string& path) {
    if (!v.is_object()) {
        throw ConfigError(path, "expected the system object");
    }
    check_keys(v, path,
               {"omega_c", "kappa", "drive_amplitude", "drive_omega", "n_max", "emitters"});
    SystemSpec spec;
    spec.omega_c = energy_field(v, path, "omega_c");
    spec.kappa = energy_field(v, path, "kappa");
    spec.drive_amplitude = energy_field(v, path, "drive_amplitude");
    spec.drive_omega = energy_field(v, path, "drive_omega");
    if (v.contains("n_max")) {
        const json& n = v["n_max"];
        if (!n.is_number_integer() || n.get<int>() < 1) {
            throw ConfigError(join(path, "n_max"), "expected a positive integer");
        }
        spec.n_max = n.get<int>();
    }
    if (v.contains("emitters")) {
        const json& ems = v["emitters"];
        if (!ems.is_array()) {
            throw ConfigError(join(path, "emitters"), "expected an array");
        }
        for (std::size_t i = 0; i < ems.size(); ++i) {
            spec.emitters.push_back(
                parse_emitter(ems[i], path + ".emitters[" + std::to_string(i) + "]"));
        }
    }
    return spec;
}

AxisConfig parse_axis(const json& v, const std::string& path) {
    if (!v.is_object()) {
        throw ConfigError(path, "expected an axis object");
    }
    check_keys(v, path, {"path", "start", "stop", "points", "values"});
    AxisConfig axis;
    const json& p = require(v, path, "path");
    if (!p.is_string()) {
        throw ConfigError(join(path, "path"), "expected a parameter path string");
    }
    axis.path = p.get<std::string>();
    json grid_part = v;
    grid_part.erase("path");
    axis.grid = parse_grid(grid_part, path, /*energies=*/true);
    return axis;
}

ScenarioConfig parse_scenario(const json& v, const std::string& path) {
    if (!v.is_object()) {
        throw ConfigError(path, "expected the scenario object");
    }
    check_keys(v, path,
               {"name", "fractions", "omegas", "angles_deg", "detunings", "omega",
                "peak_coupling", "g_e2"});
    ScenarioConfig sc;
    const json& name = require(v, path, "name");
    if (!name.is_string()) {
        throw ConfigError(join(path, "name"), "expected a string");
    }
    sc.name = name.get<std::string>();
    if (sc.name != "chemical" && sc.name != "optical" && sc.name != "second-emitter") {
        throw ConfigError(join(path, "name"),
                          "expected chemical, optical or second-emitter");
    }
    if (v.contains("fractions")) {
        sc.fractions = parse_grid(v["fractions"], join(path, "fractions"), false);
    }
    if (v.contains("omegas")) {
        sc.omegas = parse_grid(v["omegas"], join(path, "omegas"), true);
    }
    if (v.contains("angles_deg")) {
        sc.angles_deg = parse_grid(v["angles_deg"], join(path, "angles_deg"), false);
    }
    if (v.contains("detunings")) {
        sc.detunings = parse_grid(v["detunings"], join(path, "detunings"), true);
    }
    if (v.contains("omega")) {
        sc.omega = energy_field(v, path, "omega");
    }
    if (v.contains("peak_coupling")) {
        sc.peak_coupling = energy_field(v, path, "peak_coupling");
    }
    if (v.contains("g_e2")) {
        sc.g_e2 = energy_field(v, path, "g_e2");
    }
    return sc;
}

} // namespace

double parse_energy(const std::string& text, const std::string& path) {
    const auto trim = [](const std::string& s) {
        const auto begin = s.find_first_not_of(" \t");
        const auto end = s.find_last_not_of(" \t");
        return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
    };
    const std::string body = trim(text);

    double scale = 0.0;
    std::string number;
    if (body.ends_with("meV")) {
        scale = 1e-3;
        number = trim(body.substr(0, body.size() - 3));
    } else if (body.ends_with("eV")) {
        scale = 1.0;
        number = trim(body.substr(0, body.size() - 2));
    } else {
        throw ConfigError(path, "energy '" + text + "' is missing its unit (eV or meV)");
    }
    if (number.empty()) {
        throw ConfigError(path, "energy '" + text + "' has no numeric value");
    }
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(number, &consumed);
    } catch (const std::exception&) {
        throw ConfigError(path, "cannot parse energy value from '" + text + "'");
    }
    if (consumed != number.size()) {
        throw ConfigError(path, "trailing content in energy '" + text + "'");
    }
    return value * scale;
}

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("", "top level must be an object");
    }
    check_keys(root, "", {"system", "engine", "sweep", "scenario", "spectrum", "levels",
                          "output"});

    RunConfig config;
    config.system = parse_system(require(root, "", "system"), "system");

    if (root.contains("engine")) {
        const json& e = root["engine"];
        if (!e.is_string()) {
            throw ConfigError("engine", "expected a string");
        }
        try {
            config.engine = engine_from_string(e.get<std::string>());
        } catch (const SpecError& err) {
            throw ConfigError("engine", err.what());
        }
    }

    if (root.contains("sweep")) {
        const json& s = root["sweep"];
        if (!s.is_object()) {
            throw ConfigError("sweep", "expected the sweep object");
        }
        check_keys(s, "sweep", {"axis1", "axis2", "delta_theta"});
        SweepConfig sweep;
        sweep.axis1 = parse_axis(require(s, "sweep", "axis1"), "sweep.axis1");
        if (s.contains("axis2")) {
            sweep.axis2 = parse_axis(s["axis2"], "sweep.axis2");
        }
        if (s.contains("delta_theta")) {
            if (!s["delta_theta"].is_boolean()) {
                throw ConfigError("sweep.delta_theta", "expected a boolean");
            }
            sweep.delta_theta = s["delta_theta"].get<bool>();
        }
        config.sweep = std::move(sweep);
    }

    if (root.contains("scenario")) {
        config.scenario = parse_scenario(root["scenario"], "scenario");
    }

    if (root.contains("spectrum")) {
        const json& s = root["spectrum"];
        if (!s.is_object()) {
            throw ConfigError("spectrum", "expected the spectrum object");
        }
        check_keys(s, "spectrum", {"start", "stop", "points", "values"});
        config.spectrum = SpectrumConfig{parse_grid(s, "spectrum", true)};
    }

    if (root.contains("levels")) {
        const json& l = root["levels"];
        if (!l.is_object()) {
            throw ConfigError("levels", "expected the levels object");
        }
        check_keys(l, "levels", {"max_manifold"});
        LevelsConfig levels;
        if (l.contains("max_manifold")) {
            if (!l["max_manifold"].is_number_integer() || l["max_manifold"].get<int>() < 0) {
                throw ConfigError("levels.max_manifold", "expected a non-negative integer");
            }
            levels.max_manifold = l["max_manifold"].get<int>();
        }
        config.levels = levels;
    }

    if (root.contains("output")) {
        const json& o = root["output"];
        if (!o.is_object()) {
            throw ConfigError("output", "expected the output object");
        }
        check_keys(o, "output", {"path", "format", "plot"});
        OutputConfig out;
        const json& p = require(o, "output", "path");
        if (!p.is_string()) {
            throw ConfigError("output.path", "expected a string");
        }
        out.path = p.get<std::string>();
        if (o.contains("format")) {
            if (!o["format"].is_string()) {
                throw ConfigError("output.format", "expected a string");
            }
            out.format = o["format"].get<std::string>();
            if (out.format != "csv" && out.format != "json") {
                throw ConfigError("output.format", "expected csv or json");
            }
        }
        if (o.contains("plot")) {
            if (!o["plot"].is_boolean()) {
                throw ConfigError("output.plot", "expected a boolean");
            }
            out.plot = o["plot"].get<bool>();
        }
        config.output = std::move(out);
    }
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("", "cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

namespace {

std::string energy_string(double ev) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g eV", ev);
    return buf;
}

json grid_json(const GridConfig& grid, bool energies) {
    json values = json::array();
    for (double v : grid.values) {
        if (energies) {
            values.push_back(energy_string(v));
        } else {
            values.push_back(v);
        }
    }
    return json{{"values", values}};
}

} // namespace

std::string serialize_config(const RunConfig& config) {
    json root;
    json system;
    system["omega_c"] = energy_string(config.system.omega_c);
    system["kappa"] = energy_string(config.system.kappa);
    system["drive_amplitude"] = energy_string(config.system.drive_amplitude);
    system["drive_omega"] = energy_string(config.system.drive_omega);
    system["n_max"] = config.system.n_max;
    json emitters = json::array();
    for (const auto& e : config.system.emitters) {
        json em;
        em["label"] = e.label;
        em["omega_e"] = energy_string(e.omega_e);
        em["gamma_e"] = energy_string(e.gamma_e);
        em["g"] = energy_string(e.g);
        emitters.push_back(em);
    }
    system["emitters"] = emitters;
    root["system"] = system;
    root["engine"] = to_string(config.engine);

    if (config.sweep) {
        json s;
        s["axis1"] = json{{"path", config.sweep->axis1.path}};
        s["axis1"].update(grid_json(config.sweep->axis1.grid, true));
        if (config.sweep->axis2) {
            s["axis2"] = json{{"path", config.sweep->axis2->path}};
            s["axis2"].update(grid_json(config.sweep->axis2->grid, true));
        }
        s["delta_theta"] = config.sweep->delta_theta;
        root["sweep"] = s;
    }
    if (config.scenario) {
        const auto& sc = *config.scenario;
        json s;
        s["name"] = sc.name;
        if (sc.fractions) s["fractions"] = grid_json(*sc.fractions, false);
        if (sc.omegas) s["omegas"] = grid_json(*sc.omegas, true);
        if (sc.angles_deg) s["angles_deg"] = grid_json(*sc.angles_deg, false);
        if (sc.detunings) s["detunings"] = grid_json(*sc.detunings, true);
        if (sc.omega) s["omega"] = energy_string(*sc.omega);
        if (sc.peak_coupling) s["peak_coupling"] = energy_string(*sc.peak_coupling);
        if (sc.g_e2) s["g_e2"] = energy_string(*sc.g_e2);
        root["scenario"] = s;
    }
    if (config.spectrum) {
        root["spectrum"] = grid_json(config.spectrum->omegas, true);
    }
    if (config.levels) {
        root["levels"] = json{{"max_manifold", config.levels->max_manifold}};
    }
    if (config.output) {
        root["output"] = json{{"path", config.output->path},
                              {"format", config.output->format},
                              {"plot", config.output->plot}};
    }
    return root.dump(2) + "\n";
}

} // namespace plexsim
