// system.hpp — physical description of a driven cavity + two-level emitters

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace plexsim {

// All energies, rates and field amplitudes are in eV (hbar = 1); time is 1/eV.

struct EmitterSpec {
    std::string label;
    double omega_e = 0.0; // transition energy
    double gamma_e = 0.0; // spontaneous decay rate
    double g = 0.0;       // coupling rate to the cavity mode
};

// One lossy bosonic cavity mode, coherently driven, coupled to N two-level
// emitters. The composite basis is fixed everywhere in the library:
// cavity index slowest, emitters in spec order, i.e. flat index
//   idx = n_photon * 2^N + sum_j bit_j * 2^(N-1-j),  bit_j = 1 for |e>.
struct SystemSpec {
    double omega_c = 0.0;         // cavity energy
    double kappa = 0.0;           // cavity decay rate
    double drive_amplitude = 0.0; // laser field E_l
    double drive_omega = 0.0;     // laser energy
    std::vector<EmitterSpec> emitters;
    int n_max = 6;                // cavity Fock truncation (states 0..n_max)

    std::size_t emitter_count() const { return emitters.size(); }

    // Composite Hilbert-space dimension (n_max+1) * 2^N.
    int dim() const;

    double delta_c() const { return omega_c - drive_omega; }
    double delta_e(std::size_t j) const;

    // Weak-drive regime used by the perturbative solver: E_l <= kappa/20.
    bool weak_drive() const { return drive_amplitude <= kappa / 20.0; }

    // Structural checks needed by any operator construction: n_max >= 1,
    // positive emitter energies, non-negative rates and couplings.
    void validate_structure() const;

    // Full contract: structure plus n_max >= 4 so that g3(0) is meaningful.
    void validate() const;
};

} // namespace plexsim
