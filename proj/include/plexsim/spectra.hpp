// spectra.hpp — excitation-manifold energy levels and weak-drive spectra

#pragma once

#include <map>
#include <string>
#include <vector>

#include "plexsim/system.hpp"

namespace plexsim {

// Lab-frame eigenvalues of the undriven Hamiltonian, grouped by total
// excitation number. Manifold 0 is the ground state at energy zero.
struct LevelDiagram {
    std::map<int, std::vector<double>> manifolds; // ascending per manifold
};

// Steady-state cavity response S(omega) = kappa <a^dag a>_ss / E_l^2.
// Dimensionless proxy for the density of optical states: peaks sit on the
// dressed levels and carry the linewidth broadening.
struct SpectrumResult {
    std::vector<double> omegas;
    std::vector<double> response;
    std::string normalization = "kappa*<n>/E_l^2";
};

// Block-diagonalize the undriven lab-frame Hamiltonian by excitation number
// and return sorted eigenvalues for manifolds 0..max_manifold. The drive
// terms of `spec` are ignored. max_manifold must not exceed n_max.
LevelDiagram energy_levels(const SystemSpec& spec, int max_manifold = 3);

// Weak-drive excitation spectrum over the given frequency grid; one
// steady-state solve per grid point (parallelized).
SpectrumResult excitation_spectrum(const SystemSpec& spec,
                                   const std::vector<double>& omega_grid);

} // namespace plexsim
