#include "plexsim/eom.hpp"

#include "plexsim/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/LU>

#include <cmath>
#include <numbers>

namespace plexsim {

namespace {

using Cd = std::complex<double>;

constexpr double kSingularTol = 1e-12;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

void require_weak_drive(const SystemSpec& spec) {
    if (!spec.weak_drive()) {
        throw SpecError("eom: perturbative solution requires weak drive E_l <= kappa/20");
    }
}

void check_denominator(const Cd& d, const char* tier) {
    if (std::abs(d) < kSingularTol) {
        throw SingularParameterError(std::string("eom: singular ") + tier +
                                     " denominator");
    }
}

double wrap_principal(double angle) {
    angle = std::remainder(angle, 2.0 * std::numbers::pi);
    if (angle <= -std::numbers::pi) angle += 2.0 * std::numbers::pi;
    return angle;
}

// Single-emitter cascade with all intermediate quantities exposed.
struct SingleCascade {
    Cd c2, c3, c4, c5, c6, c7;
    PathwayCoefficients path;
};

SingleCascade single_cascade(const SystemSpec& spec) {
    const ComplexDetunings det = complex_detunings(spec);
    const Cd dc = det.delta_c_p;
    const Cd de = det.delta_e_p[0];
    const double g = spec.emitters[0].g;
    const double el = spec.drive_amplitude;

    const Cd d1 = dc * de - g * g;
    check_denominator(d1, "1-plexciton");
    SingleCascade s;
    s.c2 = el * (-de) / d1;
    s.c3 = el * g / d1;

    const Cd d2 = dc * (dc + de) - g * g;
    check_denominator(d2, "2-plexciton");
    s.path.a42 = el * g / d2;
    s.path.a43 = el * (-dc) / d2;
    s.path.a52 = el / kSqrt2 * (-(dc + de)) / d2;
    s.path.a53 = el / kSqrt2 * g / d2;
    s.c4 = s.path.a42 * s.c2 + s.path.a43 * s.c3;
    s.c5 = s.path.a52 * s.c2 + s.path.a53 * s.c3;

    const Cd d3 = dc * (2.0 * dc + de) - g * g;
    check_denominator(d3, "3-plexciton");
    s.c6 = el * (-kSqrt2 * dc * s.c4 + g * s.c5) / d3;
    s.c7 = el / kSqrt3 * (kSqrt2 * g * s.c4 - (2.0 * dc + de) * s.c5) / d3;
    return s;
}

Eigen::Vector4cd solve4(const Eigen::Matrix4cd& m, const Eigen::Vector4cd& rhs,
                        const char* tier) {
    Eigen::PartialPivLU<Eigen::Matrix4cd> lu(m);
    if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() < kSingularTol) {
        throw SingularParameterError(std::string("eom: singular ") + tier + " system");
    }
    return lu.solve(rhs);
}

} // namespace

ComplexDetunings complex_detunings(const SystemSpec& spec) {
    spec.validate_structure();
    ComplexDetunings det;
    det.delta_c_p = Cd(spec.delta_c(), -0.5 * spec.kappa);
    det.delta_e_p.reserve(spec.emitter_count());
    for (std::size_t j = 0; j < spec.emitter_count(); ++j) {
        det.delta_e_p.emplace_back(spec.delta_e(j), -0.5 * spec.emitters[j].gamma_e);
    }
    return det;
}

EomResult eom_single(const SystemSpec& spec) {
    spec.validate_structure();
    if (spec.emitter_count() != 1) {
        throw SpecError("eom_single: spec must have exactly one emitter");
    }
    require_weak_drive(spec);

    const SingleCascade s = single_cascade(spec);
    const double c2sq = std::norm(s.c2);
    if (c2sq == 0.0) {
        throw SingularParameterError("eom_single: vanishing one-photon amplitude");
    }

    EomResult out;
    out.amplitudes.amplitudes = {Cd(1.0), s.c2, s.c3, s.c4, s.c5, s.c6, s.c7};
    out.amplitudes.pathway = s.path;
    out.g2 = 2.0 * std::norm(s.c5) / (c2sq * c2sq);
    out.g3 = 6.0 * std::norm(s.c7) / (c2sq * c2sq * c2sq);
    return out;
}

double pathway_phase(const SystemSpec& spec, double omega) {
    if (spec.emitter_count() != 1) {
        throw SpecError("pathway_phase: spec must have exactly one emitter");
    }
    SystemSpec probed = spec;
    probed.drive_omega = omega;
    const SingleCascade s = single_cascade(probed);

    const Cd direct = s.path.a52 * s.c2;   // |1,0> -> |2,0>
    const Cd mediated = s.path.a53 * s.c3; // |1,0> -> |0,1> -> |1,1> -> |2,0>
    if (direct == 0.0 || mediated == 0.0) {
        throw SingularParameterError("pathway_phase: a pathway amplitude vanishes");
    }
    return wrap_principal(std::arg(direct) - std::arg(mediated));
}

EomResult eom_double(const SystemSpec& spec) {
    spec.validate_structure();
    if (spec.emitter_count() != 2) {
        throw SpecError("eom_double: spec must have exactly two emitters");
    }
    require_weak_drive(spec);

    const ComplexDetunings det = complex_detunings(spec);
    const Cd dc = det.delta_c_p;
    const Cd de1 = det.delta_e_p[0];
    const Cd de2 = det.delta_e_p[1];
    const double g1 = spec.emitters[0].g;
    const double g2 = spec.emitters[1].g;
    const double el = spec.drive_amplitude;

    const Cd d1 = dc * de1 * de2 - g1 * g1 * de2 - g2 * g2 * de1;
    check_denominator(d1, "1-plexciton");
    const Cd c2 = el * (-de1 * de2) / d1;
    const Cd c3 = el * (g1 * de2) / d1;
    const Cd c4 = el * (g2 * de1) / d1;

    Eigen::Matrix4cd m2;
    m2 << 2.0 * dc, kSqrt2 * g1, kSqrt2 * g2, 0.0,
          kSqrt2 * g1, dc + de1, 0.0, g2,
          kSqrt2 * g2, 0.0, dc + de2, g1,
          0.0, g2, g1, de1 + de2;
    Eigen::Vector4cd b2;
    b2 << kSqrt2 * c2, c3, c4, 0.0;
    const Eigen::Vector4cd tier2 = solve4(m2, (-el) * b2, "2-plexciton");

    Eigen::Matrix4cd m3;
    m3 << 3.0 * dc, kSqrt3 * g1, kSqrt3 * g2, 0.0,
          kSqrt3 * g1, 2.0 * dc + de1, 0.0, kSqrt2 * g2,
          kSqrt3 * g2, 0.0, 2.0 * dc + de2, kSqrt2 * g1,
          0.0, kSqrt2 * g2, kSqrt2 * g1, dc + de1 + de2;
    Eigen::Vector4cd b3;
    b3 << kSqrt3 * tier2(0), kSqrt2 * tier2(1), kSqrt2 * tier2(2), tier2(3);
    const Eigen::Vector4cd tier3 = solve4(m3, (-el) * b3, "3-plexciton");

    const double c2sq = std::norm(c2);
    if (c2sq == 0.0) {
        throw SingularParameterError("eom_double: vanishing one-photon amplitude");
    }

    EomResult out;
    out.amplitudes.amplitudes = {Cd(1.0), c2, c3, c4,
                                 tier2(0), tier2(1), tier2(2), tier2(3),
                                 tier3(0), tier3(1), tier3(2), tier3(3)};
    out.g2 = 2.0 * std::norm(tier2(0)) / (c2sq * c2sq);
    out.g3 = 6.0 * std::norm(tier3(0)) / (c2sq * c2sq * c2sq);
    return out;
}

EomResult eom_correlations(const SystemSpec& spec) {
    switch (spec.emitter_count()) {
        case 1: return eom_single(spec);
        case 2: return eom_double(spec);
        default:
            throw SpecError("eom_correlations: closed forms exist for 1 or 2 emitters only");
    }
}

} // namespace plexsim
