#include "plexsim/spectra.hpp"

#include "plexsim/errors.hpp"
#include "plexsim/liouvillian.hpp"
#include "plexsim/observables.hpp"
#include "plexsim/operators.hpp"
#include "plexsim/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace plexsim {

LevelDiagram energy_levels(const SystemSpec& spec, int max_manifold) {
    spec.validate_structure();
    if (max_manifold < 0 || max_manifold > spec.n_max) {
        throw SpecError("energy_levels: max_manifold " + std::to_string(max_manifold) +
                        " exceeds truncation n_max " + std::to_string(spec.n_max));
    }

    // Lab frame, undriven: a zero-frequency frame with no drive leaves the
    // bare energies on the diagonal.
    SystemSpec lab = spec;
    lab.drive_omega = 0.0;
    lab.drive_amplitude = 0.0;
    const OperatorMatrix h = build_hamiltonian(lab);
    const OperatorMatrix n_exc = excitation_number_operator(lab);
    const Eigen::Index d = h.dim();

    LevelDiagram out;
    for (int manifold = 0; manifold <= max_manifold; ++manifold) {
        std::vector<Eigen::Index> basis;
        for (Eigen::Index i = 0; i < d; ++i) {
            if (static_cast<int>(std::lround(n_exc.mat(i, i).real())) == manifold) {
                basis.push_back(i);
            }
        }
        Eigen::MatrixXcd block(basis.size(), basis.size());
        for (std::size_t r = 0; r < basis.size(); ++r) {
            for (std::size_t c = 0; c < basis.size(); ++c) {
                block(r, c) = h.mat(basis[r], basis[c]);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block, Eigen::EigenvaluesOnly);
        std::vector<double> levels(es.eigenvalues().data(),
                                   es.eigenvalues().data() + es.eigenvalues().size());
        std::sort(levels.begin(), levels.end());
        out.manifolds.emplace(manifold, std::move(levels));
    }
    return out;
}

SpectrumResult excitation_spectrum(const SystemSpec& spec,
                                   const std::vector<double>& omega_grid) {
    spec.validate();
    if (spec.drive_amplitude <= 0.0) {
        throw SpecError("excitation_spectrum: needs a nonzero drive amplitude");
    }
    if (!spec.weak_drive()) {
        throw SpecError("excitation_spectrum: weak drive required (E_l <= kappa/20)");
    }

    SpectrumResult out;
    out.omegas = omega_grid;
    out.response.assign(omega_grid.size(), 0.0);
    const double scale = spec.kappa / (spec.drive_amplitude * spec.drive_amplitude);

    parallel_for(omega_grid.size(), [&](std::size_t i) {
        SystemSpec probed = spec;
        probed.drive_omega = omega_grid[i];
        const SteadySolution sol = solve_steady_state(probed);
        out.response[i] = scale * mean_photon_number(sol.rho, sol.a);
    });
    return out;
}

} // namespace plexsim
