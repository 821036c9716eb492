#include "plexsim/system.hpp"

#include "plexsim/errors.hpp"

#include <limits>

namespace plexsim {

int SystemSpec::dim() const {
    if (emitters.size() > 20) {
        throw SpecError("SystemSpec: too many emitters for a dense composite basis");
    }
    const long long d = static_cast<long long>(n_max + 1) * (1LL << emitters.size());
    if (n_max < 1 || d > std::numeric_limits<int>::max()) {
        throw SpecError("SystemSpec: invalid truncation n_max=" + std::to_string(n_max));
    }
    return static_cast<int>(d);
}

double SystemSpec::delta_e(std::size_t j) const {
    if (j >= emitters.size()) {
        throw SpecError("SystemSpec: emitter index " + std::to_string(j) + " out of range");
    }
    return emitters[j].omega_e - drive_omega;
}

void SystemSpec::validate_structure() const {
    if (n_max < 1) {
        throw SpecError("SystemSpec: n_max must be >= 1, got " + std::to_string(n_max));
    }
    if (kappa < 0.0) {
        throw SpecError("SystemSpec: kappa must be >= 0");
    }
    if (drive_amplitude < 0.0) {
        throw SpecError("SystemSpec: drive_amplitude must be >= 0");
    }
    for (std::size_t j = 0; j < emitters.size(); ++j) {
        const auto& e = emitters[j];
        const std::string who = "emitter " + (e.label.empty() ? std::to_string(j) : e.label);
        if (!(e.omega_e > 0.0)) {
            throw SpecError(who + ": omega_e must be > 0");
        }
        if (e.gamma_e < 0.0) {
            throw SpecError(who + ": gamma_e must be >= 0");
        }
        if (e.g < 0.0) {
            throw SpecError(who + ": coupling g must be >= 0");
        }
    }
    dim(); // overflow check
}

void SystemSpec::validate() const {
    validate_structure();
    if (n_max < 4) {
        throw SpecError("SystemSpec: n_max must be >= 4 for meaningful g3(0), got " +
                        std::to_string(n_max));
    }
}

} // namespace plexsim
