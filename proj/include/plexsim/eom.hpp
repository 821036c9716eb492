// eom.hpp — perturbative non-Hermitian equations-of-motion closed forms
//
// Weak-drive steady-state amplitudes of the dressed ladder up to three
// excitations, obtained from the non-Hermitian Hamiltonian with complex
// detunings Delta' = Delta - i rate/2. Single-emitter systems reduce to a
// closed-form cascade; two-emitter systems need two 4x4 complex solves.
// Serves as an independent cross-check of the master-equation solver.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "plexsim/system.hpp"

namespace plexsim {

struct ComplexDetunings {
    std::complex<double> delta_c_p;              // Delta_c - i kappa/2
    std::vector<std::complex<double>> delta_e_p; // Delta_ej - i gamma_ej/2
};

ComplexDetunings complex_detunings(const SystemSpec& spec);

// Decomposition of the two-photon amplitude c5 = A52 c2 + A53 c3 into the
// direct (two photons straight into the cavity) and emitter-mediated
// excitation pathways; also carries the one-plexciton feed factors for c4.
struct PathwayCoefficients {
    std::complex<double> a42, a43, a52, a53;
};

// Steady amplitudes ordered by excitation tier:
//   1 emitter : c1 | c2 c3 | c4 c5 | c6 c7
//   2 emitters: c1 | c2 c3 c4 | c5 c6 c7 c8 | c9 c10 c11 c12
struct AmplitudeSet {
    std::vector<std::complex<double>> amplitudes; // c1 first
    std::optional<PathwayCoefficients> pathway;   // single-emitter case only
};

struct EomResult {
    AmplitudeSet amplitudes;
    double g2 = 0.0; // 2|c_two-photon|^2 / |c_one-photon|^4
    double g3 = 0.0; // 6|c_three-photon|^2 / |c_one-photon|^6
};

// Closed-form cascade for exactly one emitter. Requires the weak-drive
// regime; throws SingularParameterError when a tier denominator vanishes.
EomResult eom_single(const SystemSpec& spec);

// Phase difference Arg(A52 c2) - Arg(A53 c3) between the two two-photon
// excitation pathways, wrapped to (-pi, pi]. Destructive interference
// (unconventional blockade) shows up as |delta theta| = pi.
double pathway_phase(const SystemSpec& spec, double omega);

// Two-emitter variant: tier-1 closed form, then 4x4 solves for tiers 2 and 3.
EomResult eom_double(const SystemSpec& spec);

// Dispatch on emitter count (1 or 2).
EomResult eom_correlations(const SystemSpec& spec);

} // namespace plexsim
