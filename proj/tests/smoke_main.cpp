// smoke_main.cpp — quick numeric cross-check harness (not registered in ctest)

#include "plexsim/eom.hpp"
#include "plexsim/liouvillian.hpp"
#include "plexsim/observables.hpp"
#include "plexsim/sweep.hpp"

#include <chrono>
#include <cstdio>

using namespace plexsim;

int main() {
    SystemSpec spec;
    spec.omega_c = 2.0;
    spec.kappa = 0.35;
    spec.drive_amplitude = spec.kappa / 50.0;
    spec.drive_omega = 2.0;
    spec.n_max = 6;
    spec.emitters = {{"e1", 2.0, 0.08, 0.08}};

    auto t0 = std::chrono::steady_clock::now();
    const CorrelationResult me = solve_point(spec, Engine::MasterEquation);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("resonant 1e ME:  mean=%.6e g2=%.6f g3=%.6f regime=%s (%.3fs)\n",
                me.mean_n, me.g2, me.g3, to_string(me.regime).c_str(), dt);

    const CorrelationResult eom = solve_point(spec, Engine::Eom);
    std::printf("resonant 1e EOM: mean=%.6e g2=%.6f g3=%.6f\n", eom.mean_n, eom.g2, eom.g3);
    std::printf("pathway phase at 2.0: %.6f\n", pathway_phase(spec, 2.0));

    // two-emitter reconfiguration point
    SystemSpec two = spec;
    two.emitters.push_back({"e2", 2.04, 0.06, 0.08});
    t0 = std::chrono::steady_clock::now();
    const CorrelationResult me2 = solve_point(two, Engine::MasterEquation);
    dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("2-emitter ME:    mean=%.6e g2=%.6f g3=%.6f regime=%s (%.3fs)\n",
                me2.mean_n, me2.g2, me2.g3, to_string(me2.regime).c_str(), dt);
    const CorrelationResult eom2 = solve_point(two, Engine::Eom);
    std::printf("2-emitter EOM:   g2=%.6f g3=%.6f\n", eom2.g2, eom2.g3);

    // detuned blockade point
    SystemSpec det = spec;
    det.emitters[0].omega_e = 1.795;
    det.drive_omega = 1.82;
    const CorrelationResult me3 = solve_point(det, Engine::MasterEquation);
    std::printf("detuned@1.82 ME: g2=%.6f g3=%.6f regime=%s\n", me3.g2, me3.g3,
                to_string(me3.regime).c_str());

    // 3-emitter (dense path d=56) timing
    SystemSpec opt = spec;
    opt.emitters = {{"A", 2.0, 0.08, 0.085},
                    {"B", 2.0, 0.08, 0.0425},
                    {"C", 2.0, 0.08, 0.0425}};
    t0 = std::chrono::steady_clock::now();
    const CorrelationResult me4 = solve_point(opt, Engine::MasterEquation);
    dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("3-emitter ME:    g2=%.6f g3=%.6f regime=%s (%.3fs, d=%d)\n", me4.g2,
                me4.g3, to_string(me4.regime).c_str(), dt, opt.dim());

    // 4-emitter (sparse path d=112) timing
    SystemSpec chem = spec;
    const double g1 = 0.1 * std::sqrt(0.5), g2v = 0.1 * std::sqrt(0.5);
    chem.emitters = {{"A1", 2.0, 0.06, g1},
                     {"B1", 2.0, 0.06, g1},
                     {"A2", 2.04, 0.06, g2v},
                     {"B2", 2.04, 0.06, g2v}};
    t0 = std::chrono::steady_clock::now();
    const CorrelationResult me5 = solve_point(chem, Engine::MasterEquation);
    dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("4-emitter ME:    g2=%.6f g3=%.6f regime=%s (%.3fs, d=%d)\n", me5.g2,
                me5.g3, to_string(me5.regime).c_str(), dt, chem.dim());

    // 4-emitter at n_max=7 (d=128) timing for the convergence check
    chem.n_max = 7;
    t0 = std::chrono::steady_clock::now();
    const CorrelationResult me6 = solve_point(chem, Engine::MasterEquation);
    dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("4-emitter n7 ME: g2=%.6f g3=%.6f (%.3fs, d=%d)\n", me6.g2, me6.g3, dt,
                chem.dim());
    return 0;
}
