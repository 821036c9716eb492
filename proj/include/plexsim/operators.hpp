// operators.hpp — composite-space operators and rotating-frame Hamiltonians

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "plexsim/system.hpp"

namespace plexsim {

// Square complex operator on a (sub)space of the composite basis. These stay
// dense: the largest composite dimension in practice is a few hundred, and
// sparsity only pays off at the superoperator level.
struct OperatorMatrix {
    Eigen::MatrixXcd mat;
    bool hermitian_hint = false;

    OperatorMatrix() = default;
    explicit OperatorMatrix(Eigen::MatrixXcd m, bool hermitian = false)
        : mat(std::move(m)), hermitian_hint(hermitian) {}

    Eigen::Index dim() const { return mat.rows(); }
    OperatorMatrix adjoint() const { return OperatorMatrix(mat.adjoint(), hermitian_hint); }
};

// Largest element of |M - M^dag|; zero for Hermitian input.
double max_nonhermiticity(const Eigen::MatrixXcd& m);

// Truncated photon annihilation operator on Fock states |0..n_max>:
// entries M[n-1,n] = sqrt(n). The adjoint is the truncated creation operator,
// so [a, a^dag] = 1 holds on every Fock state except |n_max>.
OperatorMatrix fock_annihilation(int n_max);

// Two-level lowering operator |g><e| in the local {|g>,|e>} basis.
OperatorMatrix sigma_minus();

// Kronecker lift of a single-site operator into the composite space.
// Site 0 is the cavity (local dim n_max+1); sites 1..N are the emitters in
// spec order (local dim 2).
OperatorMatrix embed(const OperatorMatrix& local_op, std::size_t site_index,
                     const SystemSpec& spec);

// Convenience embeddings.
OperatorMatrix cavity_annihilation(const SystemSpec& spec);          // a
OperatorMatrix emitter_lowering(const SystemSpec& spec, std::size_t j); // sigma_j^-

// Rotating-frame Hamiltonian
//   H = Delta_c a^dag a + sum_j Delta_ej sigma_j^+ sigma_j^-
//     + sum_j g_j (a sigma_j^+ + a^dag sigma_j^-) + E_l (a + a^dag).
OperatorMatrix build_hamiltonian(const SystemSpec& spec);

// Total excitation number N_exc = a^dag a + sum_j sigma_j^+ sigma_j^-.
// Diagonal; commutes with the undriven Hamiltonian.
OperatorMatrix excitation_number_operator(const SystemSpec& spec);

// Reduced cavity state: trace over all emitter subspaces.
Eigen::MatrixXcd partial_trace_emitters(const Eigen::MatrixXcd& rho,
                                        const SystemSpec& spec);

} // namespace plexsim
