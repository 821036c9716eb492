#include "plexsim/operators.hpp"

#include "plexsim/errors.hpp"

#include <cmath>
#include <string>

namespace plexsim {

double max_nonhermiticity(const Eigen::MatrixXcd& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

OperatorMatrix fock_annihilation(int n_max) {
    if (n_max < 1) {
        throw SpecError("fock_annihilation: n_max must be >= 1, got " + std::to_string(n_max));
    }
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return OperatorMatrix(std::move(a));
}

OperatorMatrix sigma_minus() {
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(2, 2);
    s(0, 1) = 1.0;
    return OperatorMatrix(std::move(s));
}

OperatorMatrix embed(const OperatorMatrix& local_op, std::size_t site_index,
                     const SystemSpec& spec) {
    spec.validate_structure();
    const std::size_t n_sites = 1 + spec.emitter_count();
    if (site_index >= n_sites) {
        throw SpecError("embed: site " + std::to_string(site_index) + " out of range (" +
                        std::to_string(n_sites) + " sites)");
    }
    const Eigen::Index local_dim = (site_index == 0) ? spec.n_max + 1 : 2;
    if (local_op.dim() != local_dim) {
        throw SpecError("embed: operator dim " + std::to_string(local_op.dim()) +
                        " does not match local dim " + std::to_string(local_dim) +
                        " of site " + std::to_string(site_index));
    }

    // dim of everything left (slower) and right (faster) of the site
    Eigen::Index left = 1, right = 1;
    for (std::size_t s = 0; s < n_sites; ++s) {
        const Eigen::Index d = (s == 0) ? spec.n_max + 1 : 2;
        if (s < site_index) left *= d;
        if (s > site_index) right *= d;
    }

    const Eigen::Index dim = left * local_dim * right;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index l = 0; l < left; ++l) {
        for (Eigen::Index i = 0; i < local_dim; ++i) {
            for (Eigen::Index j = 0; j < local_dim; ++j) {
                const std::complex<double> v = local_op.mat(i, j);
                if (v == 0.0) continue;
                for (Eigen::Index r = 0; r < right; ++r) {
                    out((l * local_dim + i) * right + r, (l * local_dim + j) * right + r) = v;
                }
            }
        }
    }
    return OperatorMatrix(std::move(out), local_op.hermitian_hint);
}

OperatorMatrix cavity_annihilation(const SystemSpec& spec) {
    return embed(fock_annihilation(spec.n_max), 0, spec);
}

OperatorMatrix emitter_lowering(const SystemSpec& spec, std::size_t j) {
    return embed(sigma_minus(), 1 + j, spec);
}

OperatorMatrix build_hamiltonian(const SystemSpec& spec) {
    spec.validate_structure();
    const OperatorMatrix a = cavity_annihilation(spec);
    const Eigen::MatrixXcd ad = a.mat.adjoint();

    Eigen::MatrixXcd h = spec.delta_c() * (ad * a.mat);
    h += spec.drive_amplitude * (a.mat + ad);
    for (std::size_t j = 0; j < spec.emitter_count(); ++j) {
        const OperatorMatrix sm = emitter_lowering(spec, j);
        const Eigen::MatrixXcd sp = sm.mat.adjoint();
        h += spec.delta_e(j) * (sp * sm.mat);
        h += spec.emitters[j].g * (a.mat * sp + ad * sm.mat);
    }

    OperatorMatrix out(std::move(h), true);
    if (max_nonhermiticity(out.mat) >= 1e-12) {
        throw SolverError("build_hamiltonian: lost Hermiticity beyond 1e-12");
    }
    return out;
}

OperatorMatrix excitation_number_operator(const SystemSpec& spec) {
    spec.validate_structure();
    const std::size_t n_em = spec.emitter_count();
    const Eigen::Index d = spec.dim();
    Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(d, d);
    const Eigen::Index em_dim = Eigen::Index(1) << n_em;
    for (Eigen::Index idx = 0; idx < d; ++idx) {
        const Eigen::Index photons = idx / em_dim;
        const Eigen::Index bits = idx % em_dim;
        Eigen::Index excited = 0;
        for (std::size_t j = 0; j < n_em; ++j) {
            excited += (bits >> (n_em - 1 - j)) & 1;
        }
        n(idx, idx) = static_cast<double>(photons + excited);
    }
    return OperatorMatrix(std::move(n), true);
}

Eigen::MatrixXcd partial_trace_emitters(const Eigen::MatrixXcd& rho,
                                        const SystemSpec& spec) {
    const Eigen::Index d = spec.dim();
    if (rho.rows() != d || rho.cols() != d) {
        throw SpecError("partial_trace_emitters: state dim " + std::to_string(rho.rows()) +
                        " does not match spec dim " + std::to_string(d));
    }
    const Eigen::Index nc = spec.n_max + 1;
    const Eigen::Index em_dim = d / nc;
    Eigen::MatrixXcd red = Eigen::MatrixXcd::Zero(nc, nc);
    for (Eigen::Index m = 0; m < nc; ++m) {
        for (Eigen::Index n = 0; n < nc; ++n) {
            std::complex<double> sum = 0.0;
            for (Eigen::Index s = 0; s < em_dim; ++s) {
                sum += rho(m * em_dim + s, n * em_dim + s);
            }
            red(m, n) = sum;
        }
    }
    return red;
}

} // namespace plexsim
