// plexsim_main.cpp — command-line front end

#include <CLI11.hpp>

#include "plexsim/config.hpp"
#include "plexsim/eom.hpp"
#include "plexsim/errors.hpp"
#include "plexsim/liouvillian.hpp"
#include "plexsim/observables.hpp"
#include "plexsim/output.hpp"
#include "plexsim/spectra.hpp"
#include "plexsim/svg.hpp"
#include "plexsim/sweep.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace plexsim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitSolver = 4;

struct CommonOpts {
    std::string config_path;
    std::string omega_text;   // optional drive override, e.g. "2eV"
    std::string out_path;
    std::string format_text;  // csv | json
    std::string engine_text;  // master-equation | eom
    int n_max_override = 0;
    bool plot = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_engine = true) {
    cmd->add_option("--config", opts.config_path, "JSON run configuration")
        ->required();
    cmd->add_option("--omega", opts.omega_text,
                    "Drive energy override with unit, e.g. 2eV or '1820 meV'");
    cmd->add_option("--out", opts.out_path, "Output file (default: stdout)");
    cmd->add_option("--format", opts.format_text, "Output format: csv or json");
    cmd->add_option("--n-max", opts.n_max_override, "Cavity truncation override");
    cmd->add_flag("--plot", opts.plot, "Also emit an SVG plot next to the output");
    if (with_engine) {
        cmd->add_option("--engine", opts.engine_text,
                        "Computation engine: master-equation or eom");
    }
}

RunConfig load(const CommonOpts& opts) {
    RunConfig config = load_config_file(opts.config_path);
    if (!opts.omega_text.empty()) {
        config.system.drive_omega = parse_energy(opts.omega_text, "--omega");
    }
    if (opts.n_max_override > 0) {
        config.system.n_max = opts.n_max_override;
    }
    if (!opts.engine_text.empty()) {
        config.engine = engine_from_string(opts.engine_text);
    }
    return config;
}

OutputFormat pick_format(const CommonOpts& opts, const RunConfig& config) {
    if (!opts.format_text.empty()) return output_format_from_string(opts.format_text);
    if (config.output && opts.out_path.empty()) {
        return output_format_from_string(config.output->format);
    }
    const std::string& path = !opts.out_path.empty()
                                  ? opts.out_path
                                  : (config.output ? config.output->path : "");
    if (path.size() >= 5 && path.ends_with(".json")) return OutputFormat::Json;
    return OutputFormat::Csv;
}

std::string pick_path(const CommonOpts& opts, const RunConfig& config) {
    if (!opts.out_path.empty()) return opts.out_path;
    if (config.output && !config.output->path.empty()) return config.output->path;
    return {};
}

std::string svg_path_for(const std::string& out_path) {
    const auto dot = out_path.find_last_of('.');
    return (dot == std::string::npos ? out_path : out_path.substr(0, dot)) + ".svg";
}

template <typename Result>
void emit(const Result& result, const CommonOpts& opts, const RunConfig& config) {
    const OutputFormat format = pick_format(opts, config);
    const std::string path = pick_path(opts, config);
    if (path.empty()) {
        std::cout << to_text(result, format);
    } else {
        write_results(result, format, path);
    }
}

bool want_plot(const CommonOpts& opts, const RunConfig& config) {
    return opts.plot || (config.output && config.output->plot);
}

void plot_sweep(const SweepResult& result, const std::string& out_path) {
    const std::string path = svg_path_for(out_path.empty() ? "sweep.svg" : out_path);
    if (result.shape.size() == 2 && result.shape[0] > 1 && result.shape[1] > 1) {
        std::vector<double> xs, ys, g2(result.points.size());
        for (std::size_t j = 0; j < result.shape[1]; ++j) {
            xs.push_back(result.points[j].param2.value_or(0.0));
        }
        for (std::size_t i = 0; i < result.shape[0]; ++i) {
            ys.push_back(result.points[i * result.shape[1]].param1);
        }
        // heatmap rows follow axis1
        for (std::size_t i = 0; i < result.shape[0]; ++i) {
            for (std::size_t j = 0; j < result.shape[1]; ++j) {
                g2[i * result.shape[1] + j] = result.points[i * result.shape[1] + j].g2;
            }
        }
        write_heatmap_svg(path, "g2(0) map", result.axis_names.size() > 1 ?
                          result.axis_names[1] : "axis2", result.axis_names[0],
                          xs, ys, g2, 1.0);
        return;
    }
    SvgSeries s2{"g2(0)", {}, {}}, s3{"g3(0)", {}, {}};
    for (const auto& p : result.points) {
        if (p.status != PointStatus::Ok) continue;
        s2.x.push_back(p.param1);
        s2.y.push_back(p.g2);
        s3.x.push_back(p.param1);
        s3.y.push_back(p.g3);
    }
    write_line_svg(path, "correlation functions", result.axis_names[0], "g(0)",
                   {s2, s3}, /*log_y=*/true);
}

int cmd_solve(const CommonOpts& opts) {
    const RunConfig config = load(opts);
    const CorrelationResult result = solve_point(config.system, config.engine);
    std::cout << to_text(result, OutputFormat::Json);
    if (!pick_path(opts, config).empty()) {
        write_results(result, pick_format(opts, config), pick_path(opts, config));
    }
    return kExitOk;
}

int cmd_sweep(const CommonOpts& opts) {
    const RunConfig config = load(opts);
    if (!config.sweep) {
        throw ConfigError("sweep", "config has no sweep block");
    }
    SweepSpec spec;
    spec.base = config.system;
    spec.axis1 = {config.sweep->axis1.path, config.sweep->axis1.grid.values};
    if (config.sweep->axis2) {
        spec.axis2 = SweepAxis{config.sweep->axis2->path, config.sweep->axis2->grid.values};
    }
    spec.want_delta_theta = config.sweep->delta_theta;
    const SweepResult result = sweep(spec, config.engine);
    emit(result, opts, config);
    if (want_plot(opts, config)) plot_sweep(result, pick_path(opts, config));
    return kExitOk;
}

int cmd_levels(const CommonOpts& opts) {
    const RunConfig config = load(opts);
    const int max_manifold = config.levels ? config.levels->max_manifold : 3;
    const LevelDiagram result = energy_levels(config.system, max_manifold);
    emit(result, opts, config);
    return kExitOk;
}

int cmd_spectrum(const CommonOpts& opts) {
    const RunConfig config = load(opts);
    if (!config.spectrum) {
        throw ConfigError("spectrum", "config has no spectrum block");
    }
    const SpectrumResult result =
        excitation_spectrum(config.system, config.spectrum->omegas.values);
    emit(result, opts, config);
    if (want_plot(opts, config)) {
        write_line_svg(svg_path_for(pick_path(opts, config).empty()
                                        ? "spectrum.svg"
                                        : pick_path(opts, config)),
                       "excitation spectrum", "omega (eV)", "kappa<n>/E^2",
                       {{"S", result.omegas, result.response}});
    }
    return kExitOk;
}

int cmd_stats(const CommonOpts& opts) {
    const RunConfig config = load(opts);
    const SteadySolution sol = solve_steady_state(config.system);
    const PhotonStatistics result = photon_distribution(sol.rho, config.system);
    emit(result, opts, config);
    return kExitOk;
}

int cmd_phase(const CommonOpts& opts) {
    const RunConfig config = load(opts);
    PhaseCurve curve;
    if (config.sweep && config.sweep->axis1.path == "drive_omega") {
        for (double w : config.sweep->axis1.grid.values) {
            curve.omegas.push_back(w);
            curve.delta_theta.push_back(pathway_phase(config.system, w));
        }
    } else {
        curve.omegas.push_back(config.system.drive_omega);
        curve.delta_theta.push_back(
            pathway_phase(config.system, config.system.drive_omega));
    }
    emit(curve, opts, config);
    return kExitOk;
}

int cmd_scenario(const std::string& name_arg, const CommonOpts& opts) {
    const RunConfig config = load(opts);
    std::string name = name_arg;
    if (name.empty() && config.scenario) name = config.scenario->name;
    if (name.empty()) {
        throw ConfigError("scenario", "no scenario named on the command line or in config");
    }

    const ScenarioConfig scenario =
        config.scenario ? *config.scenario : ScenarioConfig{};

    SweepResult result;
    if (name == "chemical") {
        std::vector<double> fractions;
        if (scenario.fractions) {
            fractions = scenario.fractions->values;
        } else {
            for (int i = 0; i < 81; ++i) fractions.push_back(i / 80.0);
        }
        const std::vector<double> omegas =
            scenario.omegas ? scenario.omegas->values
                            : std::vector<double>{2.0};
        result = chemical_scenario(fractions, omegas,
                                   scenario.peak_coupling.value_or(0.1));
    } else if (name == "optical") {
        std::vector<double> angles;
        if (scenario.angles_deg) {
            angles = scenario.angles_deg->values;
        } else {
            for (int i = 0; i < 81; ++i) angles.push_back(-30.0 + 180.0 * i / 80.0);
        }
        result = optical_scenario(angles, scenario.omega.value_or(2.0),
                                  scenario.peak_coupling.value_or(0.085));
    } else if (name == "second-emitter") {
        std::vector<double> detunings;
        if (scenario.detunings) {
            detunings = scenario.detunings->values;
        } else {
            for (int i = 0; i < 81; ++i) detunings.push_back(-0.4 + 0.8 * i / 80.0);
        }
        std::vector<double> omegas;
        if (scenario.omegas) {
            omegas = scenario.omegas->values;
        } else if (scenario.omega) {
            omegas = {*scenario.omega};
        } else {
            for (int i = 0; i < 81; ++i) omegas.push_back(1.5 + 1.0 * i / 80.0);
        }
        result = second_emitter_map(config.system, detunings, omegas,
                                    scenario.g_e2.value_or(0.08));
    } else {
        throw ConfigError("scenario.name", "unknown scenario '" + name + "'");
    }

    emit(result, opts, config);
    if (want_plot(opts, config)) plot_sweep(result, pick_path(opts, config));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Driven cavity-emitter photon statistics simulator"};
    app.require_subcommand(1);

    CommonOpts solve_opts, sweep_opts, levels_opts, spectrum_opts, stats_opts,
        phase_opts, scenario_opts;
    std::string scenario_name;

    add_common(app.add_subcommand("solve", "Steady state at one drive point"),
               solve_opts);
    add_common(app.add_subcommand("sweep", "Parameter sweep from the config"),
               sweep_opts);
    add_common(app.add_subcommand("levels", "Excitation-manifold energy levels"),
               levels_opts, false);
    add_common(app.add_subcommand("spectrum", "Weak-drive excitation spectrum"),
               spectrum_opts, false);
    add_common(app.add_subcommand("stats", "Photon-number distribution"),
               stats_opts, false);
    add_common(app.add_subcommand("phase", "Two-photon pathway interference phase"),
               phase_opts, false);
    auto* scenario_cmd =
        app.add_subcommand("scenario", "Prebuilt reconfiguration scenarios");
    scenario_cmd->add_option("name", scenario_name,
                             "chemical | optical | second-emitter");
    add_common(scenario_cmd, scenario_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("solve")) return cmd_solve(solve_opts);
        if (app.got_subcommand("sweep")) return cmd_sweep(sweep_opts);
        if (app.got_subcommand("levels")) return cmd_levels(levels_opts);
        if (app.got_subcommand("spectrum")) return cmd_spectrum(spectrum_opts);
        if (app.got_subcommand("stats")) return cmd_stats(stats_opts);
        if (app.got_subcommand("phase")) return cmd_phase(phase_opts);
        if (app.got_subcommand("scenario")) return cmd_scenario(scenario_name, scenario_opts);
        std::cerr << "plexsim: no subcommand\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const UndefinedCorrelationError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const SingularParameterError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const SpecError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
