#include <doctest.h>

#include "plexsim/errors.hpp"
#include "plexsim/operators.hpp"

#include <complex>
#include <map>
#include <random>

using namespace plexsim;

namespace {

SystemSpec one_emitter_spec(int n_max) {
    SystemSpec spec;
    spec.omega_c = 2.0;
    spec.kappa = 0.35;
    spec.drive_omega = 2.0;
    spec.drive_amplitude = 0.007;
    spec.n_max = n_max;
    spec.emitters = {{"e1", 2.0, 0.08, 0.08}};
    return spec;
}

Eigen::MatrixXcd random_density(Eigen::Index d, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist;
    Eigen::MatrixXcd a(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            a(i, j) = std::complex<double>(dist(rng), dist(rng));
        }
    }
    Eigen::MatrixXcd rho = a * a.adjoint();
    rho /= rho.trace().real();
    return rho;
}

} // namespace

TEST_CASE("fock annihilation entries and number operator") {
    const OperatorMatrix a1 = fock_annihilation(1);
    CHECK(a1.mat(0, 1).real() == doctest::Approx(1.0));
    CHECK(a1.mat(0, 0) == std::complex<double>(0.0));
    CHECK(a1.mat(1, 0) == std::complex<double>(0.0));
    CHECK(a1.mat(1, 1) == std::complex<double>(0.0));

    const OperatorMatrix a3 = fock_annihilation(3);
    CHECK(a3.mat(2, 3).real() == doctest::Approx(std::sqrt(3.0)));

    const Eigen::MatrixXcd number = a3.mat.adjoint() * a3.mat;
    for (int n = 0; n <= 3; ++n) {
        CHECK(number(n, n).real() == doctest::Approx(n));
    }
    CHECK((number - number.diagonal().asDiagonal().toDenseMatrix()).norm() ==
          doctest::Approx(0.0));
}

TEST_CASE("fock annihilation rejects bad truncation") {
    CHECK_THROWS_AS(fock_annihilation(0), SpecError);
    CHECK_THROWS_AS(fock_annihilation(-3), SpecError);
}

TEST_CASE("truncation edge: a|n_max> = sqrt(n_max)|n_max-1>, a^dag|n_max> = 0") {
    const int n_max = 5;
    const OperatorMatrix a = fock_annihilation(n_max);
    Eigen::VectorXcd top = Eigen::VectorXcd::Zero(n_max + 1);
    top(n_max) = 1.0;
    const Eigen::VectorXcd lowered = a.mat * top;
    CHECK(lowered(n_max - 1).real() == doctest::Approx(std::sqrt(n_max)));
    CHECK((a.mat.adjoint() * top).norm() == doctest::Approx(0.0));
}

TEST_CASE("embed places sigma minus as I3 kron sigma") {
    SystemSpec spec = one_emitter_spec(2);
    const OperatorMatrix em = embed(sigma_minus(), 1, spec);
    REQUIRE(em.dim() == 6);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(6, 6);
    for (int block = 0; block < 3; ++block) {
        expected(2 * block, 2 * block + 1) = 1.0;
    }
    CHECK((em.mat - expected).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("embed dimension bookkeeping for two emitters") {
    SystemSpec spec;
    spec.omega_c = 2.0;
    spec.kappa = 0.35;
    spec.n_max = 4;
    spec.emitters = {{"e1", 2.0, 0.08, 0.08}, {"e2", 2.04, 0.06, 0.08}};
    CHECK(embed(fock_annihilation(4), 0, spec).dim() == 20);
    CHECK_THROWS_AS(embed(fock_annihilation(3), 0, spec), SpecError);
    CHECK_THROWS_AS(embed(sigma_minus(), 3, spec), SpecError);
}

TEST_CASE("commutator [a, a^dag] is identity below the truncation edge") {
    SystemSpec spec;
    spec.omega_c = 2.0;
    spec.kappa = 0.35;
    spec.n_max = 6;
    spec.emitters = {{"e1", 2.0, 0.08, 0.08}, {"e2", 2.04, 0.06, 0.08}};
    const OperatorMatrix a = cavity_annihilation(spec);
    const Eigen::MatrixXcd comm = a.mat * a.mat.adjoint() - a.mat.adjoint() * a.mat;
    const Eigen::Index em_dim = 4;
    for (Eigen::Index i = 0; i < spec.dim(); ++i) {
        const Eigen::Index photons = i / em_dim;
        const double expected = photons < spec.n_max ? 1.0 : -double(spec.n_max);
        CHECK(comm(i, i).real() == doctest::Approx(expected));
    }
}

TEST_CASE("hamiltonian is hermitian and zero for a bare resonant cavity") {
    SystemSpec spec;
    spec.omega_c = 2.0;
    spec.kappa = 0.35;
    spec.drive_omega = 2.0; // Delta_c = 0
    spec.drive_amplitude = 0.0;
    spec.n_max = 4;
    const OperatorMatrix h = build_hamiltonian(spec);
    CHECK(h.mat.cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("resonant one-excitation block gives vacuum Rabi doublet") {
    SystemSpec spec = one_emitter_spec(4);
    spec.drive_amplitude = 0.0;
    const OperatorMatrix h = build_hamiltonian(spec);
    // one-excitation block spans |1,g> (index 2) and |0,e> (index 1)
    Eigen::Matrix2cd block;
    block << h.mat(2, 2), h.mat(2, 1), h.mat(1, 2), h.mat(1, 1);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-0.08).epsilon(1e-12));
    CHECK(es.eigenvalues()(1) == doctest::Approx(0.08).epsilon(1e-12));
    CHECK(max_nonhermiticity(h.mat) < 1e-12);
}

TEST_CASE("detuned hamiltonian carries the right diagonal detunings") {
    SystemSpec spec;
    spec.omega_c = 2.0;
    spec.kappa = 0.35;
    spec.drive_omega = 1.82;
    spec.drive_amplitude = 0.0;
    spec.n_max = 4;
    spec.emitters = {{"e1", 1.795, 0.08, 0.08}};
    const OperatorMatrix h = build_hamiltonian(spec);
    CHECK(spec.delta_c() == doctest::Approx(0.18));
    CHECK(spec.delta_e(0) == doctest::Approx(-0.025));
    // |1,g> at index 2: one photon; |0,e> at index 1: one exciton
    CHECK(h.mat(2, 2).real() == doctest::Approx(0.18));
    CHECK(h.mat(1, 1).real() == doctest::Approx(-0.025));
}

TEST_CASE("excitation number operator diagonal and conservation") {
    SystemSpec spec = one_emitter_spec(2);
    const OperatorMatrix n_exc = excitation_number_operator(spec);
    const std::vector<double> expected = {0, 1, 1, 2, 2, 3};
    for (int i = 0; i < 6; ++i) {
        CHECK(n_exc.mat(i, i).real() == doctest::Approx(expected[i]));
    }

    SystemSpec undriven = spec;
    undriven.drive_amplitude = 0.0;
    const OperatorMatrix h0 = build_hamiltonian(undriven);
    CHECK((h0.mat * n_exc.mat - n_exc.mat * h0.mat).cwiseAbs().maxCoeff() < 1e-12);

    SystemSpec driven = spec; // E_l > 0 breaks the conservation
    const OperatorMatrix hd = build_hamiltonian(driven);
    CHECK((hd.mat * n_exc.mat - n_exc.mat * hd.mat).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("manifold block sizes for one emitter go 1,2,2,...") {
    SystemSpec spec = one_emitter_spec(4);
    const OperatorMatrix n_exc = excitation_number_operator(spec);
    std::map<int, int> counts;
    for (Eigen::Index i = 0; i < spec.dim(); ++i) {
        counts[static_cast<int>(n_exc.mat(i, i).real())]++;
    }
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 2);
    CHECK(counts[2] == 2);
    CHECK(counts[3] == 2);
}

TEST_CASE("partial trace over emitters is consistent with embedding") {
    SystemSpec spec;
    spec.omega_c = 2.0;
    spec.kappa = 0.35;
    spec.n_max = 3;
    spec.emitters = {{"e1", 2.0, 0.08, 0.08}, {"e2", 2.04, 0.06, 0.05}};
    const Eigen::Index d = spec.dim();
    const OperatorMatrix local_n =
        OperatorMatrix(fock_annihilation(spec.n_max).mat.adjoint() *
                       fock_annihilation(spec.n_max).mat);
    const OperatorMatrix full_n = embed(local_n, 0, spec);

    for (unsigned seed : {7u, 99u, 1234u}) {
        const Eigen::MatrixXcd rho = random_density(d, seed);
        const Eigen::MatrixXcd reduced = partial_trace_emitters(rho, spec);
        CHECK(reduced.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
        const double full_exp = (rho * full_n.mat).trace().real();
        const double red_exp = (reduced * local_n.mat).trace().real();
        CHECK(full_exp == doctest::Approx(red_exp).epsilon(1e-12));
    }
}

TEST_CASE("spec validation rejects unphysical parameters") {
    SystemSpec spec = one_emitter_spec(6);
    CHECK_NOTHROW(spec.validate());

    SystemSpec bad = spec;
    bad.emitters[0].gamma_e = -0.01;
    CHECK_THROWS_AS(bad.validate(), SpecError);

    bad = spec;
    bad.emitters[0].omega_e = 0.0;
    CHECK_THROWS_AS(bad.validate(), SpecError);

    bad = spec;
    bad.n_max = 3; // operators fine, correlations not
    CHECK_NOTHROW(bad.validate_structure());
    CHECK_THROWS_AS(bad.validate(), SpecError);
}
