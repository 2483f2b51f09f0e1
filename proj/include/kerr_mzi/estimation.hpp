#pragma once

#include "kerr_mzi/cosine_series.hpp"
#include "kerr_mzi/input_state.hpp"
#include "kerr_mzi/special_functions.hpp"

namespace kerr_mzi {

/// Error-propagation phase uncertainty for a parity signal,
///   sqrt(1 - S(phi)^2) / (sqrt(nu) |S'(phi)|),
/// using parity idempotence <Pi^2> = 1. Throws std::domain_error where the
/// derivative vanishes (|S'| <= 1e-14); use zero_phase_sensitivity_limit there.
double error_propagation_sensitivity(const CosineSeriesSignal& signal, double phi, int nu);

/// The phi -> 0+ limit of the error-propagation formula for a unit-peak even
/// signal: 1 / sqrt(nu * sum_j W_j w_j^2). Rejects signals whose peak value
/// deviates from 1 by more than peak_tolerance (pass 10 * tail_epsilon when
/// the signal came from a truncated series).
double zero_phase_sensitivity_limit(const CosineSeriesSignal& signal, int nu,
                                    double peak_tolerance = 1e-9);

// Quantum Fisher information, per family.
double qfi_tf(int n);                 // (17/2) n^4 + 9 n^3 - n^2/2 - n
double qfi_tmsv_closed(double nbar);  // (51/4) N^4 + 45 N^3 + 43 N^2 + 8 N
double qfi_tmsv_series(double nbar, const TruncationPolicy& policy);
double qfi_noon(int n);               // n^4
double qfi_ec_series(double alpha, const TruncationPolicy& policy);
double qfi_ec_asymptotic(double nbar);  // N^4 + 6 N^3 + 7 N^2 + N
// Reference-beam EC value N^4 + 10 N^3 + 13 N^2 + 2 N, for comparison only.
double qfi_ec_joo(double nbar);

/// Quantum Cramer-Rao bound 1/sqrt(nu F). Rejects F <= 0.
double qcr_bound(double fisher_information, int nu);

/// Fixed-number sensitivity limit 1/(sqrt(nu) N^k) for k-th order
/// nonlinearity; k = 2 is the Kerr case.
double bgsl(double n_total, int k, int nu);

/// 4/(sqrt(nu) N^2), the limit for the one-axis-twisting generator Jz^2.
double one_axis_twisting_limit(int n_total, int nu);

/// <N_hat^4> of the (phase-averaged) state: 24 N^4 + 72 N^3 + 56 N^2 + 8 N
/// for TMSV in closed form, (2n)^4 for twin Fock, N^4 for NOON, and the
/// Poisson-weighted series for entangled coherent states.
double fourth_moment_total_photon(const InputStateSpec& spec, const TruncationPolicy& policy);

/// Fluctuating-number sensitivity limit 1/sqrt(nu <N_hat^4>).
double generalized_limit(double fourth_moment, int nu);

/// Gain over the fixed-number limit 1/N^2, in dB: -10 log10(N^2 / sqrt(F)).
double sensitivity_gain(double fisher_information, double nbar);

/// Mean photon number of the phase-averaged entangled coherent state,
/// alpha^2 / (1 + exp(-alpha^2)), and its inverse (monotone for alpha > 0).
double ec_mean_photon(double alpha);
double ec_alpha_for_mean(double nbar);

struct SensitivityReport {
    InputStateSpec state;
    double nbar = 0.0;  // mean total photon number
    int nu = 1;
    double delta_phi_parity = 0.0;  // zero-phase parity sensitivity
    double qcr = 0.0;
    double bgsl_value = 0.0;  // 1/(sqrt(nu) nbar^2)
    double generalized = 0.0;
    double gain_db = 0.0;
};

struct BoundSet {
    double bgsl_value = 0.0;
    double generalized_value = 0.0;
    double fourth_moment = 0.0;
};

SensitivityReport make_sensitivity_report(const InputStateSpec& spec, int nu,
                                          double tail_epsilon);
BoundSet make_bound_set(const InputStateSpec& spec, int nu, double tail_epsilon);

/// QFI used in reports and figure tables: closed form for TF/TMSV/NOON,
/// truncated series for EC.
double qfi_for_state(const InputStateSpec& spec, double tail_epsilon);

}  // namespace kerr_mzi
