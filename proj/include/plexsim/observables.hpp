// observables.hpp — correlation functions, photon statistics, regime labels

#pragma once

#include <string>
#include <vector>

#include "plexsim/liouvillian.hpp"
#include "plexsim/operators.hpp"
#include "plexsim/system.hpp"

namespace plexsim {

enum class Regime { PB, UPB, Bunching, Coherent };

std::string to_string(Regime r);
Regime regime_from_string(const std::string& s);

struct CorrelationResult {
    double drive_omega = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
    double mean_n = 0.0;
    Regime regime = Regime::Coherent;
};

// Reduced-cavity photon-number distribution with Poissonian deviations
// delta_m = (P_m - Poisson_m(mean)) / Poisson_m(mean).
struct PhotonStatistics {
    std::vector<double> probabilities; // P_m, m = 0..n_max
    double mean_n = 0.0;
    std::vector<double> deltas;        // delta P_m, same indexing
};

// g^(n)(0) = Tr(rho a^dag^n a^n) / Tr(rho a^dag a)^n for n = 2 or 3.
// Throws UndefinedCorrelationError when the mean photon number is below 1e-15.
double correlation(const DensityMatrix& rho, const OperatorMatrix& a, int order);

double mean_photon_number(const DensityMatrix& rho, const OperatorMatrix& a);

PhotonStatistics photon_distribution(const DensityMatrix& rho, const SystemSpec& spec);

// g^(n)(0) = sum_{m>=n} m!/(m-n)! P_m / <N>^n, evaluated over the stored
// distribution. Independent route to the same quantity as correlation().
double gn_from_distribution(const PhotonStatistics& stats, int n);

// Bose-Einstein occupation 1/(exp(omega/kB T) - 1); omega in eV, T in kelvin.
double thermal_occupation(double omega, double temperature);

// coherent if both correlations sit within eps of 1; PB if both below 1;
// UPB if g2 < 1 with g3 > 1; bunching otherwise.
Regime classify(double g2, double g3, double eps = 0.01);

// Bundle the standard outputs for one steady state.
CorrelationResult correlations_of(const SteadySolution& sol, double drive_omega);

} // namespace plexsim
