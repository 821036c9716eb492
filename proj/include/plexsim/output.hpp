// output.hpp — CSV/JSON serialization of results

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plexsim/observables.hpp"
#include "plexsim/spectra.hpp"
#include "plexsim/sweep.hpp"

namespace plexsim {

enum class OutputFormat { Csv, Json };

OutputFormat output_format_from_string(const std::string& s);

// Round to 12 significant digits (the serialization precision for all
// numeric payloads; round-trips well below the 1e-10 contract).
double round_12sig(double x);
std::string format_12sig(double x);

// Sweep CSV columns are fixed:
//   omega_eV,param1,param2,g2,g3,mean_n,regime,engine,error_code
// Failed points leave the numeric columns empty and set error_code != 0.
// JSON mirrors the full data model including delta_theta and metadata.
void write_results(const SweepResult& result, OutputFormat format,
                   const std::string& path);
std::string to_text(const SweepResult& result, OutputFormat format);

void write_results(const CorrelationResult& result, OutputFormat format,
                   const std::string& path);
std::string to_text(const CorrelationResult& result, OutputFormat format);

void write_results(const LevelDiagram& result, OutputFormat format,
                   const std::string& path);
std::string to_text(const LevelDiagram& result, OutputFormat format);

void write_results(const SpectrumResult& result, OutputFormat format,
                   const std::string& path);
std::string to_text(const SpectrumResult& result, OutputFormat format);

void write_results(const PhotonStatistics& result, OutputFormat format,
                   const std::string& path);
std::string to_text(const PhotonStatistics& result, OutputFormat format);

// Pathway-phase curve: (omega, delta_theta) samples.
struct PhaseCurve {
    std::vector<double> omegas;
    std::vector<double> delta_theta; // principal value in (-pi, pi]
};
void write_results(const PhaseCurve& result, OutputFormat format,
                   const std::string& path);
std::string to_text(const PhaseCurve& result, OutputFormat format);

// Parse a sweep CSV back into (param/g2/g3) rows; used by round-trip checks
// and downstream tooling.
struct SweepCsvRow {
    double omega_eV;
    double param1;
    std::optional<double> param2;
    std::optional<double> g2, g3, mean_n;
    std::string regime;
    std::string engine;
    int error_code = 0;
};
std::vector<SweepCsvRow> read_sweep_csv(const std::string& path);

} // namespace plexsim
