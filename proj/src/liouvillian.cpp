#include "plexsim/liouvillian.hpp"

#include "plexsim/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SparseLU>

#include <cmath>
#include <sstream>

namespace plexsim {

namespace {

using Cd = std::complex<double>;
using Triplet = Eigen::Triplet<Cd>;

constexpr Eigen::Index kDenseSolveMaxDim = 100; // Hilbert dim; above this, sparse LU

// vec() is column-stacking: entry (r,c) of a d x d matrix sits at index c*d + r.

// vec(rho M): coefficient of rho[r,k] in output (r,c) is M[k,c].
void add_right_mult(std::vector<Triplet>& t, const Eigen::MatrixXcd& m, Cd scale,
                    Eigen::Index d) {
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index k = 0; k < d; ++k) {
            const Cd v = m(k, c);
            if (v == 0.0) continue;
            for (Eigen::Index r = 0; r < d; ++r) {
                t.emplace_back(c * d + r, k * d + r, scale * v);
            }
        }
    }
}

// vec(M rho): coefficient of rho[k,c] in output (r,c) is M[r,k].
void add_left_mult(std::vector<Triplet>& t, const Eigen::MatrixXcd& m, Cd scale,
                   Eigen::Index d) {
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index k = 0; k < d; ++k) {
            const Cd v = m(r, k);
            if (v == 0.0) continue;
            for (Eigen::Index c = 0; c < d; ++c) {
                t.emplace_back(c * d + r, c * d + k, scale * v);
            }
        }
    }
}

// vec(o rho o^dag): coefficient of rho[k,l] in output (r,c) is o[r,k] conj(o[c,l]).
void add_sandwich(std::vector<Triplet>& t, const Eigen::MatrixXcd& o, Cd scale,
                  Eigen::Index d) {
    struct Entry {
        Eigen::Index row, col;
        Cd value;
    };
    std::vector<Entry> nz;
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index k = 0; k < d; ++k) {
            if (o(r, k) != 0.0) nz.push_back({r, k, o(r, k)});
        }
    }
    for (const Entry& a : nz) {
        for (const Entry& b : nz) {
            t.emplace_back(b.row * d + a.row, b.col * d + a.col,
                           scale * a.value * std::conj(b.value));
        }
    }
}

Eigen::VectorXcd trace_row(Eigen::Index d) {
    Eigen::VectorXcd row = Eigen::VectorXcd::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        row(i * d + i) = 1.0;
    }
    return row;
}

double vec_trace_error(const Eigen::VectorXcd& x, Eigen::Index d) {
    Cd tr = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        tr += x(i * d + i);
    }
    return std::abs(tr - Cd(1.0));
}

DensityMatrix from_vec(const Eigen::VectorXcd& x, Eigen::Index d, bool renormalize) {
    Eigen::MatrixXcd rho = Eigen::Map<const Eigen::MatrixXcd>(x.data(), d, d);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    if (renormalize) {
        const double tr = rho.trace().real();
        if (std::abs(tr) < 1e-14) {
            throw SolverError("steady_state: solution has vanishing trace");
        }
        rho /= tr;
    }
    return DensityMatrix{std::move(rho)};
}

} // namespace

void DensityMatrix::validate() const {
    std::ostringstream oss;
    if (trace_error() >= 1e-10) {
        oss << "density matrix trace error " << trace_error();
        throw SolverError(oss.str());
    }
    if (max_nonhermiticity(rho) >= 1e-10) {
        oss << "density matrix non-Hermitian by " << max_nonhermiticity(rho);
        throw SolverError(oss.str());
    }
    const double lam = min_eigenvalue();
    if (lam <= -1e-8) {
        oss << "density matrix indefinite, min eigenvalue " << lam;
        throw SolverError(oss.str());
    }
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double Liouvillian::residual(const DensityMatrix& rho) const {
    const Eigen::Index d = hilbert_dim;
    const Eigen::VectorXcd x = Eigen::Map<const Eigen::VectorXcd>(rho.rho.data(), d * d);
    return (op * x).norm();
}

Liouvillian build_liouvillian(const OperatorMatrix& hamiltonian,
                              const std::vector<std::pair<OperatorMatrix, double>>& collapse) {
    const Eigen::Index d = hamiltonian.dim();
    for (const auto& [o, rate] : collapse) {
        if (o.dim() != d) {
            throw SpecError("build_liouvillian: collapse operator dim mismatch");
        }
        if (rate < 0.0) {
            throw SpecError("build_liouvillian: negative rate " + std::to_string(rate));
        }
    }

    std::vector<Triplet> triplets;
    const Cd i_unit(0.0, 1.0);
    // i[rho, H] = i(rho H - H rho)
    add_right_mult(triplets, hamiltonian.mat, i_unit, d);
    add_left_mult(triplets, hamiltonian.mat, -i_unit, d);
    // (rate/2) (2 o rho o^dag - rho o^dag o - o^dag o rho)
    for (const auto& [o, rate] : collapse) {
        if (rate == 0.0) continue;
        const Eigen::MatrixXcd odo = o.mat.adjoint() * o.mat;
        add_sandwich(triplets, o.mat, Cd(rate), d);
        add_right_mult(triplets, odo, Cd(-rate / 2.0), d);
        add_left_mult(triplets, odo, Cd(-rate / 2.0), d);
    }

    Liouvillian out;
    out.hilbert_dim = d;
    out.op.resize(d * d, d * d);
    out.op.setFromTriplets(triplets.begin(), triplets.end());
    out.op.makeCompressed();
    out.frobenius_norm = out.op.norm();
    return out;
}

DensityMatrix steady_state(const Liouvillian& liou) {
    const Eigen::Index d = liou.hilbert_dim;
    const Eigen::Index dd = liou.superop_dim();
    if (d < 1 || dd != d * d) {
        throw SpecError("steady_state: malformed Liouvillian");
    }

    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dd);
    rhs(0) = 1.0;
    const Eigen::VectorXcd trow = trace_row(d);

    Eigen::VectorXcd x(dd);
    if (d <= kDenseSolveMaxDim) {
        Eigen::MatrixXcd m(liou.op);
        m.row(0) = trow.transpose();
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
        x = lu.solve(rhs);
        x += lu.solve(rhs - m * x); // one refinement pass
        const double res = (m * x - rhs).norm();
        if (!std::isfinite(res) || res > 1e-8 * std::max(1.0, x.norm())) {
            std::ostringstream oss;
            oss << "steady_state: trace-replaced system is singular or ill-conditioned "
                   "(degenerate stationary manifold?), residual " << res;
            throw SolverError(oss.str());
        }
    } else {
        // rebuild without row 0, then add the trace row
        std::vector<Triplet> triplets;
        triplets.reserve(static_cast<std::size_t>(liou.op.nonZeros()) + d);
        for (Eigen::Index k = 0; k < liou.op.outerSize(); ++k) {
            for (SparseCd::InnerIterator it(liou.op, k); it; ++it) {
                if (it.row() != 0) {
                    triplets.emplace_back(it.row(), it.col(), it.value());
                }
            }
        }
        for (Eigen::Index i = 0; i < d; ++i) {
            triplets.emplace_back(0, i * d + i, Cd(1.0));
        }
        SparseCd m(dd, dd);
        m.setFromTriplets(triplets.begin(), triplets.end());
        m.makeCompressed();

        Eigen::SparseLU<SparseCd, Eigen::COLAMDOrdering<int>> lu;
        lu.analyzePattern(m);
        lu.factorize(m);
        if (lu.info() != Eigen::Success) {
            throw SolverError(
                "steady_state: sparse LU failed (degenerate stationary manifold?): " +
                lu.lastErrorMessage());
        }
        x = lu.solve(rhs);
        x += lu.solve(rhs - m * x);
        const double res = (m * x - rhs).norm();
        if (!std::isfinite(res) || res > 1e-8 * std::max(1.0, x.norm())) {
            std::ostringstream oss;
            oss << "steady_state: sparse solve did not converge, residual " << res;
            throw SolverError(oss.str());
        }
    }

    DensityMatrix rho = from_vec(x, d, /*renormalize=*/true);
    const double rel_res = liou.residual(rho) / liou.frobenius_norm;
    if (!(rel_res < 1e-10)) {
        std::ostringstream oss;
        oss << "steady_state: residual ||L rho||/||L||_F = " << rel_res
            << " exceeds 1e-10";
        throw SolverError(oss.str());
    }
    rho.validate();
    return rho;
}

DensityMatrix evolve(const DensityMatrix& rho0, const Liouvillian& liou,
                     double t_final, double dt) {
    const Eigen::Index d = liou.hilbert_dim;
    if (rho0.dim() != d) {
        throw SpecError("evolve: state dim does not match Liouvillian");
    }
    if (!(dt > 0.0) || !(t_final >= 0.0)) {
        throw SolverError("evolve: need dt > 0 and t_final >= 0");
    }
    if (dt * liou.frobenius_norm >= 0.1) {
        std::ostringstream oss;
        oss << "evolve: step size violation, dt*||L|| = " << dt * liou.frobenius_norm
            << " >= 0.1";
        throw SolverError(oss.str());
    }

    Eigen::VectorXcd x = Eigen::Map<const Eigen::VectorXcd>(rho0.rho.data(), d * d);
    double t = 0.0;
    while (t < t_final) {
        const double h = std::min(dt, t_final - t);
        const Eigen::VectorXcd k1 = liou.op * x;
        const Eigen::VectorXcd k2 = liou.op * (x + 0.5 * h * k1);
        const Eigen::VectorXcd k3 = liou.op * (x + 0.5 * h * k2);
        const Eigen::VectorXcd k4 = liou.op * (x + h * k3);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
        const double drift = vec_trace_error(x, d);
        if (drift > 1e-6) {
            std::ostringstream oss;
            oss << "evolve: trace drift " << drift << " beyond 1e-6 at t = " << t;
            throw SolverError(oss.str());
        }
    }
    if (vec_trace_error(x, d) > 1e-8) {
        std::ostringstream oss;
        oss << "evolve: final trace error " << vec_trace_error(x, d) << " beyond 1e-8";
        throw SolverError(oss.str());
    }
    return from_vec(x, d, /*renormalize=*/false);
}

std::vector<std::pair<OperatorMatrix, double>> collapse_operators(const SystemSpec& spec) {
    std::vector<std::pair<OperatorMatrix, double>> ops;
    if (spec.kappa > 0.0) {
        ops.emplace_back(cavity_annihilation(spec), spec.kappa);
    }
    for (std::size_t j = 0; j < spec.emitter_count(); ++j) {
        if (spec.emitters[j].gamma_e > 0.0) {
            ops.emplace_back(emitter_lowering(spec, j), spec.emitters[j].gamma_e);
        }
    }
    return ops;
}

SteadySolution solve_steady_state(const SystemSpec& spec) {
    spec.validate();
    const OperatorMatrix h = build_hamiltonian(spec);
    const Liouvillian liou = build_liouvillian(h, collapse_operators(spec));
    return SteadySolution{steady_state(liou), cavity_annihilation(spec)};
}

} // namespace plexsim
