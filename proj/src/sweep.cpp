#include "plexsim/sweep.hpp"

#include "plexsim/eom.hpp"
#include "plexsim/errors.hpp"
#include "plexsim/liouvillian.hpp"
#include "plexsim/parallel.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace plexsim {

namespace {

constexpr double kDefaultCavityEnergy = 2.0;  // eV
constexpr double kDefaultKappa = 0.35;        // eV
constexpr double kChemicalGamma = 0.06;       // eV, both species
constexpr double kChemicalSpecies2Energy = 2.04; // eV
constexpr double kOpticalGamma = 0.08;        // eV

void check_axis(const SweepAxis& axis) {
    if (axis.grid.empty()) {
        throw SpecError("sweep: axis '" + axis.path + "' has an empty grid");
    }
    for (std::size_t i = 1; i < axis.grid.size(); ++i) {
        if (!(axis.grid[i] > axis.grid[i - 1])) {
            throw SpecError("sweep: axis '" + axis.path + "' grid not strictly increasing");
        }
    }
}

PointStatus classify_failure(const std::exception& e, std::string& message) {
    message = e.what();
    if (dynamic_cast<const UndefinedCorrelationError*>(&e)) {
        return PointStatus::UndefinedCorrelation;
    }
    if (dynamic_cast<const SingularParameterError*>(&e)) {
        return PointStatus::SingularParameter;
    }
    if (dynamic_cast<const SpecError*>(&e)) {
        return PointStatus::UnsupportedEngine;
    }
    return PointStatus::SolverFailure;
}

// Mean photon number implied by an amplitude set: sum of photon count times
// |c|^2 over the truncated ladder.
double eom_mean_photons(const SystemSpec& spec, const AmplitudeSet& amps) {
    const auto& c = amps.amplitudes;
    if (spec.emitter_count() == 1) {
        // basis: |00>, |10>, |01>, |11>, |20>, |21>, |30>
        return std::norm(c[1]) + std::norm(c[3]) + 2.0 * std::norm(c[4]) +
               2.0 * std::norm(c[5]) + 3.0 * std::norm(c[6]);
    }
    // basis: |000>, |100>, |010>, |001>, |200>, |110>, |101>, |011>,
    //        |300>, |210>, |201>, |111>
    return std::norm(c[1]) + 2.0 * std::norm(c[4]) + std::norm(c[5]) +
           std::norm(c[6]) + 3.0 * std::norm(c[8]) + 2.0 * std::norm(c[9]) +
           2.0 * std::norm(c[10]) + std::norm(c[11]);
}

SweepResult run_grid(const SweepSpec& sweep_spec, Engine engine,
                     const std::string& scenario_name) {
    check_axis(sweep_spec.axis1);
    if (sweep_spec.axis2) check_axis(*sweep_spec.axis2);

    // fail fast on unresolvable paths
    {
        SystemSpec probe = sweep_spec.base;
        apply_parameter(probe, sweep_spec.axis1.path, sweep_spec.axis1.grid.front());
        if (sweep_spec.axis2) {
            apply_parameter(probe, sweep_spec.axis2->path, sweep_spec.axis2->grid.front());
        }
    }

    const std::size_t n1 = sweep_spec.axis1.grid.size();
    const std::size_t n2 = sweep_spec.axis2 ? sweep_spec.axis2->grid.size() : 1;

    SweepResult result;
    result.axis_names.push_back(sweep_spec.axis1.path);
    result.shape.push_back(n1);
    if (sweep_spec.axis2) {
        result.axis_names.push_back(sweep_spec.axis2->path);
        result.shape.push_back(n2);
    }
    result.points.resize(n1 * n2);
    result.metadata["engine"] = to_string(engine);
    if (!scenario_name.empty()) result.metadata["scenario"] = scenario_name;

    const auto t0 = std::chrono::steady_clock::now();
    parallel_for(n1 * n2, [&](std::size_t idx) {
        const std::size_t i = idx / n2;
        const std::size_t j = idx % n2;

        SystemSpec spec = sweep_spec.base;
        SweepPoint& point = result.points[idx];
        point.param1 = sweep_spec.axis1.grid[i];
        apply_parameter(spec, sweep_spec.axis1.path, point.param1);
        if (sweep_spec.axis2) {
            point.param2 = sweep_spec.axis2->grid[j];
            apply_parameter(spec, sweep_spec.axis2->path, *point.param2);
        }
        point.drive_omega = spec.drive_omega;
        point.engine = engine;

        try {
            const CorrelationResult corr = solve_point(spec, engine);
            point.g2 = corr.g2;
            point.g3 = corr.g3;
            point.mean_n = corr.mean_n;
            point.regime = corr.regime;
            if (sweep_spec.want_delta_theta && spec.emitter_count() == 1) {
                point.delta_theta = std::abs(pathway_phase(spec, spec.drive_omega));
            }
        } catch (const std::exception& e) {
            point.status = classify_failure(e, point.error);
        }
    });
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace

std::string to_string(Engine e) {
    return e == Engine::MasterEquation ? "master-equation" : "eom";
}

Engine engine_from_string(const std::string& s) {
    if (s == "master-equation" || s == "me") return Engine::MasterEquation;
    if (s == "eom") return Engine::Eom;
    throw SpecError("unknown engine '" + s + "'");
}

void apply_parameter(SystemSpec& spec, const std::string& path, double value) {
    if (path == "drive_omega") { spec.drive_omega = value; return; }
    if (path == "drive_amplitude") { spec.drive_amplitude = value; return; }
    if (path == "omega_c") { spec.omega_c = value; return; }
    if (path == "kappa") { spec.kappa = value; return; }

    if (path.rfind("emitter[", 0) == 0) {
        const std::size_t close = path.find(']');
        if (close != std::string::npos && close + 1 < path.size() && path[close + 1] == '.') {
            std::size_t index = 0;
            try {
                index = std::stoul(path.substr(8, close - 8));
            } catch (const std::exception&) {
                throw SpecError("sweep: bad emitter index in path '" + path + "'");
            }
            if (index >= spec.emitters.size()) {
                throw SpecError("sweep: emitter index out of range in path '" + path + "'");
            }
            const std::string field = path.substr(close + 2);
            if (field == "omega_e") { spec.emitters[index].omega_e = value; return; }
            if (field == "gamma_e") { spec.emitters[index].gamma_e = value; return; }
            if (field == "g") { spec.emitters[index].g = value; return; }
            if (field == "delta_c") { spec.emitters[index].omega_e = spec.omega_c + value; return; }
        }
    }
    throw SpecError("sweep: unknown parameter path '" + path + "'");
}

CorrelationResult solve_point(const SystemSpec& spec, Engine engine) {
    if (engine == Engine::MasterEquation) {
        return correlations_of(solve_steady_state(spec), spec.drive_omega);
    }
    const EomResult eom = eom_correlations(spec);
    CorrelationResult out;
    out.drive_omega = spec.drive_omega;
    out.g2 = eom.g2;
    out.g3 = eom.g3;
    out.mean_n = eom_mean_photons(spec, eom.amplitudes);
    out.regime = classify(out.g2, out.g3);
    return out;
}

SweepResult sweep(const SweepSpec& spec, Engine engine) {
    return run_grid(spec, engine, "");
}

SweepResult chemical_scenario(const std::vector<double>& f_grid,
                              const std::vector<double>& omega_grid,
                              double peak_coupling) {
    if (peak_coupling < 0.0) {
        throw SpecError("chemical_scenario: peak coupling must be >= 0");
    }
    for (double f : f_grid) {
        if (f < 0.0 || f > 1.0) {
            throw SpecError("chemical_scenario: fraction " + std::to_string(f) +
                            " outside [0,1]");
        }
    }

    SystemSpec base;
    base.omega_c = kDefaultCavityEnergy;
    base.kappa = kDefaultKappa;
    base.drive_amplitude = base.kappa / 50.0;
    base.drive_omega = kDefaultCavityEnergy;
    base.n_max = 6;
    base.emitters = {
        {"A1", kDefaultCavityEnergy, kChemicalGamma, 0.0},
        {"B1", kDefaultCavityEnergy, kChemicalGamma, 0.0},
        {"A2", kChemicalSpecies2Energy, kChemicalGamma, 0.0},
        {"B2", kChemicalSpecies2Energy, kChemicalGamma, 0.0},
    };

    if (f_grid.empty() || omega_grid.empty()) {
        throw SpecError("chemical_scenario: fraction and omega grids must not be empty");
    }

    // The couplings are a derived quantity of the fraction, so the grid loop
    // is explicit here instead of going through a parameter path.
    SweepResult result;
    result.axis_names = {"fraction_e1", "drive_omega"};
    result.shape = {f_grid.size(), omega_grid.size()};
    const std::size_t n1 = f_grid.size(), n2 = omega_grid.size();
    result.points.resize(n1 * n2);
    result.metadata["engine"] = to_string(Engine::MasterEquation);
    result.metadata["scenario"] = "chemical";
    {
        std::ostringstream oss;
        oss << "per-emitter couplings c*sqrt(f), c*sqrt(1-f) with c = " << peak_coupling
            << " eV; collective values are sqrt(2) larger";
        result.metadata["coupling_model"] = oss.str();
    }

    const auto t0 = std::chrono::steady_clock::now();
    parallel_for(n1 * n2, [&](std::size_t idx) {
        const std::size_t i = idx / n2;
        const std::size_t j = idx % n2;
        const double f = f_grid[i];

        SystemSpec spec = base;
        spec.drive_omega = omega_grid[j];
        const double g1 = peak_coupling * std::sqrt(f);
        const double g2 = peak_coupling * std::sqrt(1.0 - f);
        spec.emitters[0].g = g1;
        spec.emitters[1].g = g1;
        spec.emitters[2].g = g2;
        spec.emitters[3].g = g2;

        SweepPoint& point = result.points[idx];
        point.param1 = f;
        point.param2 = omega_grid[j];
        point.drive_omega = spec.drive_omega;
        point.engine = Engine::MasterEquation;
        try {
            const CorrelationResult corr = solve_point(spec, Engine::MasterEquation);
            point.g2 = corr.g2;
            point.g3 = corr.g3;
            point.mean_n = corr.mean_n;
            point.regime = corr.regime;
        } catch (const std::exception& e) {
            point.status = classify_failure(e, point.error);
        }
    });
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

SweepResult optical_scenario(const std::vector<double>& alpha_deg_grid,
                             double omega,
                             double peak_coupling) {
    if (peak_coupling < 0.0) {
        throw SpecError("optical_scenario: peak coupling must be >= 0");
    }
    SystemSpec base;
    base.omega_c = kDefaultCavityEnergy;
    base.kappa = kDefaultKappa;
    base.drive_amplitude = base.kappa / 50.0;
    base.drive_omega = omega;
    base.n_max = 6;
    base.emitters = {
        {"A", kDefaultCavityEnergy, kOpticalGamma, 0.0},
        {"B", kDefaultCavityEnergy, kOpticalGamma, 0.0},
        {"C", kDefaultCavityEnergy, kOpticalGamma, 0.0},
    };

    SweepResult result;
    result.axis_names = {"alpha_deg"};
    result.shape = {alpha_deg_grid.size()};
    result.points.resize(alpha_deg_grid.size());
    result.metadata["engine"] = to_string(Engine::MasterEquation);
    result.metadata["scenario"] = "optical";

    const auto t0 = std::chrono::steady_clock::now();
    parallel_for(alpha_deg_grid.size(), [&](std::size_t i) {
        const double alpha = alpha_deg_grid[i] * std::numbers::pi / 180.0;
        const double offset = 60.0 * std::numbers::pi / 180.0;

        SystemSpec spec = base;
        spec.emitters[0].g = peak_coupling * std::abs(std::cos(alpha));
        spec.emitters[1].g = peak_coupling * std::abs(std::cos(alpha - offset));
        spec.emitters[2].g = peak_coupling * std::abs(std::cos(alpha + offset));

        SweepPoint& point = result.points[i];
        point.param1 = alpha_deg_grid[i];
        point.drive_omega = omega;
        point.engine = Engine::MasterEquation;
        try {
            const CorrelationResult corr = solve_point(spec, Engine::MasterEquation);
            point.g2 = corr.g2;
            point.g3 = corr.g3;
            point.mean_n = corr.mean_n;
            point.regime = corr.regime;
        } catch (const std::exception& e) {
            point.status = classify_failure(e, point.error);
        }
    });
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

SweepResult second_emitter_map(const SystemSpec& base,
                               const std::vector<double>& delta_e2c_grid,
                               const std::vector<double>& omega_grid,
                               double g_e2) {
    if (base.emitter_count() != 1) {
        throw SpecError("second_emitter_map: base spec must have exactly one emitter");
    }
    SystemSpec extended = base;
    extended.emitters.push_back({"e2", base.omega_c, 0.06, g_e2});

    SweepSpec sweep_spec;
    sweep_spec.base = extended;
    sweep_spec.axis1 = {"emitter[1].delta_c", delta_e2c_grid};
    sweep_spec.axis2 = SweepAxis{"drive_omega", omega_grid};
    SweepResult result = run_grid(sweep_spec, Engine::MasterEquation, "second-emitter");
    result.metadata["g_e2"] = std::to_string(g_e2);
    return result;
}

} // namespace plexsim
