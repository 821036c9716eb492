// config.hpp — run configuration: strict JSON schema with explicit energy units

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plexsim/sweep.hpp"
#include "plexsim/system.hpp"

namespace plexsim {

// Parse "0.35 eV" / "350meV" into eV. Bare numbers are rejected: every energy
// in a config carries its unit. Throws ConfigError with the field path.
double parse_energy(const std::string& text, const std::string& path);

// Grids are stored fully resolved (eV for energies, plain for fractions and
// angles). Configs may write either {"start","stop","points"} or {"values"}.
struct GridConfig {
    std::vector<double> values;
};

struct AxisConfig {
    std::string path;
    GridConfig grid;
};

struct SweepConfig {
    AxisConfig axis1;
    std::optional<AxisConfig> axis2;
    bool delta_theta = false;
};

struct ScenarioConfig {
    std::string name; // chemical | optical | second-emitter
    std::optional<GridConfig> fractions;  // chemical
    std::optional<GridConfig> omegas;     // chemical (eV)
    std::optional<GridConfig> angles_deg; // optical
    std::optional<GridConfig> detunings;  // second-emitter (eV)
    std::optional<double> omega;          // optical / second-emitter drive (eV)
    std::optional<double> peak_coupling;  // chemical / optical (eV)
    std::optional<double> g_e2;           // second-emitter (eV)
};

struct SpectrumConfig {
    GridConfig omegas; // eV
};

struct LevelsConfig {
    int max_manifold = 3;
};

struct OutputConfig {
    std::string path;
    std::string format = "csv"; // csv | json
    bool plot = false;
};

struct RunConfig {
    SystemSpec system;
    Engine engine = Engine::MasterEquation;
    std::optional<SweepConfig> sweep;
    std::optional<ScenarioConfig> scenario;
    std::optional<SpectrumConfig> spectrum;
    std::optional<LevelsConfig> levels;
    std::optional<OutputConfig> output;
};

// Strict parse: unknown keys anywhere are errors, all energies need units,
// the system block with omega_c/kappa/drive_amplitude/drive_omega is
// mandatory. Throws ConfigError with a path-to-field diagnostic.
RunConfig parse_config(const std::string& json_text);

RunConfig load_config_file(const std::string& path);

// Canonical serialization (energies as "<value> eV", grids as value lists).
// parse(serialize(parse(x))) == parse(x).
std::string serialize_config(const RunConfig& config);

} // namespace plexsim
