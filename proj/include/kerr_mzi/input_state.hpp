#pragma once

#include <string>

namespace kerr_mzi {

/// The four probe-state families: twin Fock |n,n>, two-mode squeezed vacuum
/// of mean photon number nbar, NOON with N photons, and entangled coherent
/// with amplitude alpha.
enum class StateFamily { TwinFock, Tmsv, Noon, EntangledCoherent };

struct InputStateSpec {
    StateFamily family = StateFamily::TwinFock;
    int n = 0;           // TwinFock: photons per mode; Noon: total photons
    double nbar = 0.0;   // Tmsv: mean photon number
    double alpha = 0.0;  // EntangledCoherent: coherent amplitude, real > 0

    static InputStateSpec twin_fock(int n);
    static InputStateSpec tmsv(double nbar);
    static InputStateSpec noon(int n);
    static InputStateSpec entangled_coherent(double alpha);

    /// Mean total photon number of the (phase-averaged) state:
    /// 2n for twin Fock, nbar for TMSV, N for NOON,
    /// alpha^2/(1 + exp(-alpha^2)) for entangled coherent.
    double mean_photon_number() const;

    /// True for families whose total photon number fluctuates (TMSV, EC).
    bool has_fluctuating_number() const;

    /// Short label such as "tf(2)" or "tmsv(1.5)", used in column headers.
    std::string label() const;
};

StateFamily parse_state_family(const std::string& tag);
std::string family_tag(StateFamily family);

/// Builds a spec from the family's natural parameter (n for tf/noon, nbar
/// for tmsv, alpha for ec). Photon numbers must be nonnegative integers.
InputStateSpec instantiate_state(StateFamily family, double parameter);

/// The inverse: the spec's own natural parameter.
double family_parameter(const InputStateSpec& spec);

}  // namespace kerr_mzi
