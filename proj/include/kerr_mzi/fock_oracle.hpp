#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "kerr_mzi/input_state.hpp"
#include "kerr_mzi/special_functions.hpp"

// Brute-force simulator on a truncated two-mode Fock space. Everything here
// is derived from ladder-operator matrix elements and dense linear algebra,
// independent of the closed forms it is used to validate.
namespace kerr_mzi::oracle {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// ---------------------------------------------------------------------------
// Full-grid operators over |n_a, n_b>, 0 <= n_a, n_b <= n_max,
// basis index n_a * (n_max + 1) + n_b. Used for operator-identity checks.
// ---------------------------------------------------------------------------

struct ModeOperators {
    int n_max = 0;
    Matrix a, a_dag, b, b_dag;
    Matrix total_number;  // N_hat = a^t a + b^t b
    Matrix jx, jy, jz;    // Schwinger representation
};

ModeOperators build_mode_operators(int n_max);

enum class Splitter { B1, B2 };

/// Beam splitter on the full grid, exponentiated per total-N sector by
/// diagonalizing the Hermitian generator of each block. Exactly unitary
/// everywhere; equal to the true operator on complete sectors (N <= n_max).
Matrix beam_splitter_unitary(Splitter which, int n_max);

/// Kerr (or linear, k = 1) phase shift exp(-i phi (a^t a)^k), diagonal.
Matrix kerr_unitary(double phi, int k, int n_max);

/// Parity of mode b, diagonal entries (-1)^(n_b).
Matrix parity_b(int n_max);

/// Max |entry| over rows and columns whose total photon number is at most
/// n_max - guard; truncation corrupts only the top of the grid.
double max_abs_on_interior(const Matrix& m, int n_max, int guard = 4);

/// Max-norm of (a^t a)^2 - [N^2/4 + Jz^2 + N Jz] over the interior block.
double schwinger_identity_residual(int n_max);

// ---------------------------------------------------------------------------
// Sector-level pipeline. Every operator in the interferometer conserves the
// total photon number, so states are stored and processed per total-N sector
// (basis |k, N-k>, k = 0..N) with no truncation error inside a sector.
// ---------------------------------------------------------------------------

/// Beam splitter restricted to one total-N sector, (N+1) x (N+1).
Matrix sector_beam_splitter(Splitter which, int total_n);

struct SectorComponent {
    int total_n = 0;
    Vector amplitudes;  // coefficient of |k, N-k>, not individually normalized
};

/// A two-mode state as a list of total-N sector components with
/// sum_N ||amplitudes_N||^2 = 1 (within the truncation tail).
/// `through_first_splitter` records the family convention: twin-Fock/TMSV
/// states enter the interferometer through B1, NOON/EC states are probes
/// prepared directly between the splitters.
struct TwoModeState {
    std::vector<SectorComponent> sectors;  // ascending total_n
    bool through_first_splitter = true;

    double norm_squared() const;
    /// Pure-state amplitude of |n_a, n_b> (zero off the stored sectors).
    std::complex<double> amplitude(int n_a, int n_b) const;
};

/// TF -> |n,n>; TMSV -> sum sqrt(p_n)|n,n>; NOON -> (|N,0> + i^N |0,N>)/sqrt2;
/// EC -> N_a sum c_n (|n,0> + i^n |0,n>) truncated by the policy.
/// The NOON relative phase i^N makes the parity signal equal cos(N^2 phi)
/// under the B2 convention used here (any relative phase is admissible).
TwoModeState prepare_input_state(const InputStateSpec& spec, const TruncationPolicy& policy);

/// Parity expectation at the output port, sector by sector. Phase-averaged
/// families (TMSV, EC) are the p_N-weighted sums of their fixed-N sectors.
double parity_expectation_output(const InputStateSpec& spec, double phi,
                                 const TruncationPolicy& policy);

/// Precomputed per-sector pipeline for evaluating the parity expectation on
/// a phi grid without rebuilding the beam-splitter matrices.
class ParityPipeline {
public:
    explicit ParityPipeline(TwoModeState state);

    double expectation(double phi) const;

private:
    struct SectorData {
        int total_n;
        Vector probe;            // state just before the Kerr medium
        Matrix second_splitter;  // B2 restricted to the sector
    };
    std::vector<SectorData> sectors_;
};

struct GeneratorMoments {
    double mean = 0.0;           // <G>
    double second_moment = 0.0;  // <G^2>
};

/// Moments of the estimation generator on a normalized fixed-N component:
/// G = B1^t (a^t a)^2 B1 when the state passes through the first splitter,
/// (a^t a)^2 for direct probes.
GeneratorMoments kerr_generator_moments(const SectorComponent& component,
                                        bool through_first_splitter);

/// 4 (<G^2> - <G>^2) on a single-sector state. Throws on multi-sector input.
double qfi_fixed_sector(const TwoModeState& state);

/// Summability rule for phase-averaged mixtures: sum_N p_N F(sector N).
/// TMSV sectors are twin-Fock states, EC sectors are NOON states.
double qfi_phase_averaged(const InputStateSpec& spec, const TruncationPolicy& policy);

// ---------------------------------------------------------------------------
// Spectral bounds on the N-photon sector.
// ---------------------------------------------------------------------------

enum class SectorHamiltonian {
    KerrEffective,  // Jz^2 + N Jz  (the Kerr generator minus its N^2/4 part)
    JzSquared,      // one-axis twisting
    NumberTimesJz,  // N Jz
};

struct SectorSpectrum {
    std::vector<double> eigenvalues;  // indexed by k = n_a, i.e. m = k - N/2
    double seminorm = 0.0;            // lambda_max - lambda_min
    double max_qfi = 0.0;             // seminorm^2 = 4 * max variance
    SectorComponent extremal_state;   // equal superposition of the extremes
};

/// All three Hamiltonians are diagonal in the Fock sector basis, so the
/// spectrum is read off directly and the extremal state is an equal
/// superposition of the arg-min and arg-max basis states.
SectorSpectrum heff_sector_spectrum(int total_n, SectorHamiltonian hamiltonian);

}  // namespace kerr_mzi::oracle
