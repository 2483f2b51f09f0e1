#include "kerr_mzi/input_state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kerr_mzi {

InputStateSpec InputStateSpec::twin_fock(int n) {
    if (n < 0) throw std::invalid_argument("twin_fock: n must be >= 0");
    InputStateSpec spec;
    spec.family = StateFamily::TwinFock;
    spec.n = n;
    return spec;
}

InputStateSpec InputStateSpec::tmsv(double nbar) {
    if (!(nbar >= 0.0)) throw std::invalid_argument("tmsv: nbar must be >= 0");
    InputStateSpec spec;
    spec.family = StateFamily::Tmsv;
    spec.nbar = nbar;
    return spec;
}

InputStateSpec InputStateSpec::noon(int n) {
    if (n < 0) throw std::invalid_argument("noon: n must be >= 0");
    InputStateSpec spec;
    spec.family = StateFamily::Noon;
    spec.n = n;
    return spec;
}

InputStateSpec InputStateSpec::entangled_coherent(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("entangled_coherent: alpha must be > 0");
    InputStateSpec spec;
    spec.family = StateFamily::EntangledCoherent;
    spec.alpha = alpha;
    return spec;
}

double InputStateSpec::mean_photon_number() const {
    switch (family) {
        case StateFamily::TwinFock: return 2.0 * n;
        case StateFamily::Tmsv: return nbar;
        case StateFamily::Noon: return static_cast<double>(n);
        case StateFamily::EntangledCoherent: {
            const double lambda = alpha * alpha;
            return lambda / (1.0 + std::exp(-lambda));
        }
    }
    return 0.0;
}

bool InputStateSpec::has_fluctuating_number() const {
    return family == StateFamily::Tmsv || family == StateFamily::EntangledCoherent;
}

std::string InputStateSpec::label() const {
    std::ostringstream out;
    switch (family) {
        case StateFamily::TwinFock: out << "tf(" << n << ")"; break;
        case StateFamily::Tmsv: out << "tmsv(" << nbar << ")"; break;
        case StateFamily::Noon: out << "noon(" << n << ")"; break;
        case StateFamily::EntangledCoherent: out << "ec(" << alpha << ")"; break;
    }
    return out.str();
}

StateFamily parse_state_family(const std::string& tag) {
    if (tag == "tf") return StateFamily::TwinFock;
    if (tag == "tmsv") return StateFamily::Tmsv;
    if (tag == "noon") return StateFamily::Noon;
    if (tag == "ec") return StateFamily::EntangledCoherent;
    throw std::invalid_argument("unknown state tag '" + tag + "' (expected tf|tmsv|noon|ec)");
}

std::string family_tag(StateFamily family) {
    switch (family) {
        case StateFamily::TwinFock: return "tf";
        case StateFamily::Tmsv: return "tmsv";
        case StateFamily::Noon: return "noon";
        case StateFamily::EntangledCoherent: return "ec";
    }
    return "?";
}

InputStateSpec instantiate_state(StateFamily family, double parameter) {
    switch (family) {
        case StateFamily::TwinFock:
        case StateFamily::Noon: {
            if (!(parameter >= 0.0) || parameter != std::floor(parameter) || parameter > 1e9)
                throw std::invalid_argument(
                    family_tag(family) + ": photon number must be a nonnegative integer");
            const int n = static_cast<int>(parameter);
            return family == StateFamily::TwinFock ? InputStateSpec::twin_fock(n)
                                                   : InputStateSpec::noon(n);
        }
        case StateFamily::Tmsv: return InputStateSpec::tmsv(parameter);
        case StateFamily::EntangledCoherent:
            return InputStateSpec::entangled_coherent(parameter);
    }
    throw std::logic_error("instantiate_state: unreachable");
}

double family_parameter(const InputStateSpec& spec) {
    switch (spec.family) {
        case StateFamily::TwinFock:
        case StateFamily::Noon: return spec.n;
        case StateFamily::Tmsv: return spec.nbar;
        case StateFamily::EntangledCoherent: return spec.alpha;
    }
    return 0.0;
}

}  // namespace kerr_mzi
