#include "plexsim/observables.hpp"

#include "plexsim/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace plexsim {

namespace {

constexpr double kBoltzmannEvPerK = 8.617333262e-5;
constexpr double kMeanFloor = 1e-15;

double real_expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& op) {
    return (rho.rho * op).trace().real();
}

} // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::PB: return "PB";
        case Regime::UPB: return "UPB";
        case Regime::Bunching: return "bunching";
        case Regime::Coherent: return "coherent";
    }
    throw std::logic_error("unreachable regime");
}

Regime regime_from_string(const std::string& s) {
    if (s == "PB") return Regime::PB;
    if (s == "UPB") return Regime::UPB;
    if (s == "bunching") return Regime::Bunching;
    if (s == "coherent") return Regime::Coherent;
    throw SpecError("unknown regime label '" + s + "'");
}

double mean_photon_number(const DensityMatrix& rho, const OperatorMatrix& a) {
    return real_expectation(rho, a.mat.adjoint() * a.mat);
}

double correlation(const DensityMatrix& rho, const OperatorMatrix& a, int order) {
    if (order != 2 && order != 3) {
        throw SpecError("correlation: order must be 2 or 3, got " + std::to_string(order));
    }
    const double mean = mean_photon_number(rho, a);
    if (mean <= kMeanFloor) {
        throw UndefinedCorrelationError(
            "correlation: mean photon number " + std::to_string(mean) +
            " too small to normalize g^(" + std::to_string(order) + ")(0)");
    }
    Eigen::MatrixXcd an = a.mat * a.mat;
    if (order == 3) an = an * a.mat; // a^3 applied right-to-left
    const double numer = real_expectation(rho, an.adjoint() * an);
    return numer / std::pow(mean, order);
}

PhotonStatistics photon_distribution(const DensityMatrix& rho, const SystemSpec& spec) {
    const Eigen::MatrixXcd cavity = partial_trace_emitters(rho.rho, spec);
    const int nc = spec.n_max + 1;

    PhotonStatistics stats;
    stats.probabilities.resize(nc);
    double mean = 0.0;
    for (int m = 0; m < nc; ++m) {
        stats.probabilities[m] = cavity(m, m).real();
        mean += m * stats.probabilities[m];
    }
    stats.mean_n = mean;

    stats.deltas.resize(nc);
    // Poissonian of the same mean, built up iteratively: P_m = mean^m e^-mean / m!
    double poisson = std::exp(-mean);
    for (int m = 0; m < nc; ++m) {
        if (poisson > 0.0) {
            stats.deltas[m] = (stats.probabilities[m] - poisson) / poisson;
        } else {
            stats.deltas[m] = (stats.probabilities[m] == 0.0)
                                  ? 0.0
                                  : std::numeric_limits<double>::infinity();
        }
        poisson *= mean / (m + 1);
    }
    return stats;
}

double gn_from_distribution(const PhotonStatistics& stats, int n) {
    if (n < 1) {
        throw SpecError("gn_from_distribution: order must be >= 1");
    }
    const int n_max = static_cast<int>(stats.probabilities.size()) - 1;
    if (n > n_max) {
        throw SpecError("gn_from_distribution: order " + std::to_string(n) +
                        " exceeds truncation n_max " + std::to_string(n_max));
    }
    if (stats.mean_n <= kMeanFloor) {
        throw UndefinedCorrelationError(
            "gn_from_distribution: mean photon number too small");
    }
    double sum = 0.0;
    for (int m = n; m <= n_max; ++m) {
        double falling = 1.0; // m!/(m-n)! = m (m-1) ... (m-n+1)
        for (int k = 0; k < n; ++k) falling *= (m - k);
        sum += falling * stats.probabilities[m];
    }
    return sum / std::pow(stats.mean_n, n);
}

double thermal_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) {
        throw SpecError("thermal_occupation: omega must be > 0");
    }
    if (!(temperature > 0.0)) {
        throw SpecError("thermal_occupation: temperature must be > 0");
    }
    return 1.0 / std::expm1(omega / (kBoltzmannEvPerK * temperature));
}

Regime classify(double g2, double g3, double eps) {
    if (std::abs(g2 - 1.0) < eps && std::abs(g3 - 1.0) < eps) return Regime::Coherent;
    if (g2 < 1.0 && g3 < 1.0) return Regime::PB;
    if (g2 < 1.0 && g3 > 1.0) return Regime::UPB;
    return Regime::Bunching;
}

CorrelationResult correlations_of(const SteadySolution& sol, double drive_omega) {
    CorrelationResult out;
    out.drive_omega = drive_omega;
    out.mean_n = mean_photon_number(sol.rho, sol.a);
    out.g2 = correlation(sol.rho, sol.a, 2);
    out.g3 = correlation(sol.rho, sol.a, 3);
    out.regime = classify(out.g2, out.g3);
    return out;
}

} // namespace plexsim
