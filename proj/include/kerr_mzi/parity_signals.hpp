#pragma once

#include "kerr_mzi/cosine_series.hpp"
#include "kerr_mzi/input_state.hpp"
#include "kerr_mzi/special_functions.hpp"

namespace kerr_mzi {

/// Geometric twin-Fock weight p_n = (1 - r) r^n with r = nbar/(nbar+2).
double tmsv_weight(int n, double nbar);

/// The retained weights p_0..p_n_max for one TMSV state.
struct GeometricWeights {
    double nbar = 0.0;
    std::vector<double> weights;
};
GeometricWeights geometric_weights(double nbar, const TruncationPolicy& policy);

/// Beam-splitter coefficient
///   C_nk = (-1)^(n-k) 2^-n sqrt(C(2k,k) C(2n-2k,n-k)),
/// computed in the log domain. Requires 0 <= k <= n.
double beam_splitter_coefficient(int n, int k);

/// All coefficients C_n0..C_nn of one twin-Fock sector.
struct BeamSplitterCoefficients {
    int n = 0;
    std::vector<double> c;
};
BeamSplitterCoefficients beam_splitter_coefficients(int n);

/// Twin-Fock parity signal sum_k C_nk^2 cos[4n(n-2k) phi]; S(0) = 1 exactly.
CosineSeriesSignal tf_parity_series(int n);

/// TMSV parity signal sum_{n <= n_max} p_n * tf_parity_series(n);
/// S(0) equals the retained mass, within tail_epsilon of 1.
CosineSeriesSignal tmsv_parity_series(double nbar, const TruncationPolicy& policy);

/// NOON parity signal: constant 2 for n = 0, cos(n^2 phi) for n >= 1.
CosineSeriesSignal noon_parity_series(int n);

/// Entangled-coherent parity signal
///   2 N_a^2 [ 2|c_0|^2 + sum_{n>=1} |c_n|^2 cos(n^2 phi) ],
/// with the n = 0 contribution folded into the constant offset.
CosineSeriesSignal ec_parity_series(double alpha, const TruncationPolicy& policy);

/// Dispatch on the state family. For TF/NOON the policy is ignored.
CosineSeriesSignal parity_series(const InputStateSpec& spec, const TruncationPolicy& policy);

/// sum_j W_j w_j^2 of the parity signal, accumulated term by term without
/// materializing the merged series. Feeds the phi -> 0 sensitivity limit at
/// mean photon numbers where the full TMSV series would not fit in memory.
double parity_curvature_sum(const InputStateSpec& spec, const TruncationPolicy& policy);

}  // namespace kerr_mzi
