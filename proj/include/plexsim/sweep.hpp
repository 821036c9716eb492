// sweep.hpp — parameter-sweep engine and the prebuilt reconfiguration scenarios

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plexsim/observables.hpp"
#include "plexsim/system.hpp"

namespace plexsim {

enum class Engine { MasterEquation, Eom };

std::string to_string(Engine e);
Engine engine_from_string(const std::string& s);

// Swept parameter addresses on SystemSpec:
//   drive_omega | drive_amplitude | omega_c | kappa
//   emitter[j].omega_e | emitter[j].gamma_e | emitter[j].g
//   emitter[j].delta_c   (sets omega_e = omega_c + value)
struct SweepAxis {
    std::string path;
    std::vector<double> grid; // strictly monotone, size >= 2 for real sweeps
};

struct SweepSpec {
    SystemSpec base;
    SweepAxis axis1;
    std::optional<SweepAxis> axis2;
    bool want_delta_theta = false; // pathway phase, 1-emitter bases only
};

enum class PointStatus {
    Ok = 0,
    SolverFailure = 1,
    UndefinedCorrelation = 2,
    SingularParameter = 3,
    UnsupportedEngine = 4,
};

struct SweepPoint {
    double param1 = 0.0;
    std::optional<double> param2;
    double drive_omega = 0.0; // effective laser energy at this point
    double g2 = 0.0;
    double g3 = 0.0;
    double mean_n = 0.0;
    Regime regime = Regime::Coherent;
    std::optional<double> delta_theta; // |pathway phase|, 1-emitter points
    Engine engine = Engine::MasterEquation;
    PointStatus status = PointStatus::Ok;
    std::string error;
};

// Dense grid of results in axis-major order (axis1 outer, axis2 inner).
// Every grid point gets a record; failures carry a status code, never a hole.
struct SweepResult {
    std::vector<std::string> axis_names; // one or two entries
    std::vector<std::size_t> shape;      // grid sizes per axis
    std::vector<SweepPoint> points;
    double wall_seconds = 0.0;           // metadata, excluded from payload equality
    std::map<std::string, std::string> metadata;
};

// Apply a parameter path to a spec (throws SpecError on unknown path).
void apply_parameter(SystemSpec& spec, const std::string& path, double value);

// Evaluate one spec with the chosen engine.
CorrelationResult solve_point(const SystemSpec& spec, Engine engine);

// Generic driver: evaluates the grid with the chosen engine in parallel,
// assembling results in grid order.
SweepResult sweep(const SweepSpec& spec, Engine engine);

// Blended-emitter scenario: four emitters (two species at two sites) with
// couplings g_e1 = c sqrt(f), g_e2 = c sqrt(1-f) and the species fraction f
// swept. peak_coupling c defaults to 0.1 eV; omega_grid entries are drive
// energies. Master-equation engine only.
SweepResult chemical_scenario(const std::vector<double>& f_grid,
                              const std::vector<double>& omega_grid,
                              double peak_coupling = 0.1);

// Polarization-rotation scenario: three identical emitters at the apex sites
// with couplings c|cos(alpha)|, c|cos(alpha - 60deg)|, c|cos(alpha + 60deg)|.
// peak_coupling c defaults to 0.085 eV.
SweepResult optical_scenario(const std::vector<double>& alpha_deg_grid,
                             double omega,
                             double peak_coupling = 0.085);

// Second-emitter reconfiguration map over (detuning from cavity, drive energy)
// with fixed coupling g_e2 and decay gamma_e2 = 60 meV.
SweepResult second_emitter_map(const SystemSpec& base,
                               const std::vector<double>& delta_e2c_grid,
                               const std::vector<double>& omega_grid,
                               double g_e2);

} // namespace plexsim
