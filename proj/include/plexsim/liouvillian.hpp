// liouvillian.hpp — Lindblad superoperator assembly and steady-state solvers

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "plexsim/operators.hpp"
#include "plexsim/system.hpp"

namespace plexsim {

using SparseCd = Eigen::SparseMatrix<std::complex<double>>;

// Steady-state density matrix. Always stored Hermitian with unit trace;
// construction through steady_state()/evolve() additionally checks positivity
// down to -1e-8 on the smallest eigenvalue.
struct DensityMatrix {
    Eigen::MatrixXcd rho;

    Eigen::Index dim() const { return rho.rows(); }
    double trace_error() const { return std::abs(rho.trace() - std::complex<double>(1.0)); }

    // Throws SolverError when trace, Hermiticity or positivity tolerances
    // (1e-10, 1e-10, -1e-8) are violated.
    void validate() const;

    // Smallest eigenvalue (positivity witness).
    double min_eigenvalue() const;
};

// Generator of the master equation
//   d rho/dt = i[rho,H] + sum_k (rate_k/2) (2 o rho o^dag - rho o^dag o - o^dag o rho)
// acting on column-stacked density matrices. Stored sparse: the number of
// nonzeros scales with d^3 while a dense superoperator would need d^4.
struct Liouvillian {
    SparseCd op;               // (d^2 x d^2)
    Eigen::Index hilbert_dim = 0;
    double frobenius_norm = 0.0;

    Eigen::Index superop_dim() const { return op.rows(); }

    // ||L vec(rho)||_2 for a given density matrix.
    double residual(const DensityMatrix& rho) const;
};

// Assemble the superoperator from a Hamiltonian and (operator, rate) pairs.
// Rates enter as rate/2 with the internal factor 2 on the sandwich term, so a
// cavity population decays at exactly `rate`.
Liouvillian build_liouvillian(const OperatorMatrix& hamiltonian,
                              const std::vector<std::pair<OperatorMatrix, double>>& collapse);

// Unique steady state of L via the trace-replaced linear system: row 0 of L
// is overwritten with the trace functional and L' x = e_0 is solved by direct
// LU (dense for hilbert_dim <= 100, sparse above) with one step of iterative
// refinement. Throws SolverError on degenerate stationary manifolds or when
// the relative residual ||L x|| / ||L||_F exceeds 1e-10.
DensityMatrix steady_state(const Liouvillian& liou);

// Explicit RK4 integration of vec(rho)' = L vec(rho) up to t_final.
// Preconditions: dt * ||L||_F < 0.1. Aborts if |Tr rho - 1| drifts beyond 1e-6.
DensityMatrix evolve(const DensityMatrix& rho0, const Liouvillian& liou,
                     double t_final, double dt);

// Dissipator list (a, kappa), (sigma_j^-, gamma_j) for a spec.
std::vector<std::pair<OperatorMatrix, double>> collapse_operators(const SystemSpec& spec);

// Bundled convenience: build H and dissipators from the spec and solve.
struct SteadySolution {
    DensityMatrix rho;
    OperatorMatrix a; // embedded cavity annihilation operator
};
SteadySolution solve_steady_state(const SystemSpec& spec);

} // namespace plexsim
