#include "kerr_mzi/parity_signals.hpp"

#include <cmath>
#include <stdexcept>

namespace kerr_mzi {

double tmsv_weight(int n, double nbar) {
    if (n < 0) throw std::invalid_argument("tmsv_weight: n must be >= 0");
    if (!(nbar >= 0.0)) throw std::invalid_argument("tmsv_weight: nbar must be >= 0");
    const double r = nbar / (nbar + 2.0);
    return (1.0 - r) * std::pow(r, n);
}

double beam_splitter_coefficient(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("beam_splitter_coefficient: need 0 <= k <= n");
    const double log_mag =
        0.5 * (log_binomial(2LL * k, k) + log_binomial(2LL * (n - k), n - k)) -
        n * std::log(2.0);
    const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(log_mag);
}

GeometricWeights geometric_weights(double nbar, const TruncationPolicy& policy) {
    GeometricWeights result;
    result.nbar = nbar;
    result.weights.reserve(static_cast<size_t>(policy.n_max) + 1);
    for (int n = 0; n <= policy.n_max; ++n) result.weights.push_back(tmsv_weight(n, nbar));
    return result;
}

BeamSplitterCoefficients beam_splitter_coefficients(int n) {
    BeamSplitterCoefficients result;
    result.n = n;
    result.c.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) result.c.push_back(beam_splitter_coefficient(n, k));
    return result;
}

namespace {

// squared coefficient straight from the log domain, no sign
double bs_coefficient_squared(int n, int k) {
    return std::exp(log_binomial(2LL * k, k) + log_binomial(2LL * (n - k), n - k) -
                    n * std::log(4.0));
}

void add_tf_terms(CosineSeriesBuilder& builder, int n, double scale) {
    for (int k = 0; k <= n; ++k) {
        const long long freq = 4LL * n * (n - 2LL * k);
        builder.add(scale * bs_coefficient_squared(n, k), freq);
    }
}

// sum_k C_nk^2 (4n(n-2k))^2, the twin-Fock contribution to the curvature
double tf_curvature(int n) {
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double freq = 4.0 * n * (n - 2.0 * k);
        acc += bs_coefficient_squared(n, k) * freq * freq;
    }
    return acc;
}

}  // namespace

CosineSeriesSignal tf_parity_series(int n) {
    if (n < 0) throw std::invalid_argument("tf_parity_series: n must be >= 0");
    CosineSeriesBuilder builder;
    add_tf_terms(builder, n, 1.0);
    return std::move(builder).build_unit_peak();
}

CosineSeriesSignal tmsv_parity_series(double nbar, const TruncationPolicy& policy) {
    if (!(nbar >= 0.0)) throw std::invalid_argument("tmsv_parity_series: nbar must be >= 0");
    // distinct merged frequencies grow like n_max^2/4; refuse to materialize
    // series that would not fit (use parity_curvature_sum for sensitivities,
    // or a looser tail_epsilon)
    const long long projected = static_cast<long long>(policy.n_max) * policy.n_max / 4;
    if (projected > 5'000'000)
        throw std::invalid_argument(
            "tmsv_parity_series: series too large to materialize at this nbar and "
            "tail_epsilon");
    CosineSeriesBuilder builder;
    for (int n = 0; n <= policy.n_max; ++n)
        add_tf_terms(builder, n, tmsv_weight(n, nbar));
    return std::move(builder).build();
}

CosineSeriesSignal noon_parity_series(int n) {
    if (n < 0) throw std::invalid_argument("noon_parity_series: n must be >= 0");
    if (n == 0) return CosineSeriesSignal::constant(2.0);
    CosineSeriesBuilder builder;
    builder.add(1.0, static_cast<long long>(n) * n);
    return std::move(builder).build();
}

CosineSeriesSignal ec_parity_series(double alpha, const TruncationPolicy& policy) {
    if (!(alpha > 0.0)) throw std::invalid_argument("ec_parity_series: alpha must be > 0");
    const double lambda = alpha * alpha;
    const double two_na2 = 1.0 / (1.0 + std::exp(-lambda));  // 2 N_alpha^2
    CosineSeriesBuilder builder;
    // |c_n|^2 is the Poisson(lambda) weight; the n = 0 "value 2" contribution
    // folds into the offset
    builder.add_offset(2.0 * two_na2 * poisson_weight(lambda, 0));
    for (int n = 1; n <= policy.n_max; ++n)
        builder.add(two_na2 * poisson_weight(lambda, n), static_cast<long long>(n) * n);
    return std::move(builder).build();
}

CosineSeriesSignal parity_series(const InputStateSpec& spec, const TruncationPolicy& policy) {
    switch (spec.family) {
        case StateFamily::TwinFock: return tf_parity_series(spec.n);
        case StateFamily::Tmsv: return tmsv_parity_series(spec.nbar, policy);
        case StateFamily::Noon: return noon_parity_series(spec.n);
        case StateFamily::EntangledCoherent: return ec_parity_series(spec.alpha, policy);
    }
    throw std::logic_error("parity_series: unreachable");
}

double parity_curvature_sum(const InputStateSpec& spec, const TruncationPolicy& policy) {
    switch (spec.family) {
        case StateFamily::TwinFock: return tf_curvature(spec.n);
        case StateFamily::Tmsv: {
            double acc = 0.0;
            for (int n = 0; n <= policy.n_max; ++n)
                acc += tmsv_weight(n, spec.nbar) * tf_curvature(n);
            return acc;
        }
        case StateFamily::Noon: {
            const double n2 = static_cast<double>(spec.n) * spec.n;
            return spec.n == 0 ? 0.0 : n2 * n2;
        }
        case StateFamily::EntangledCoherent: {
            const double lambda = spec.alpha * spec.alpha;
            const double two_na2 = 1.0 / (1.0 + std::exp(-lambda));
            double acc = 0.0;
            for (int n = 1; n <= policy.n_max; ++n) {
                const double n2 = static_cast<double>(n) * n;
                acc += poisson_weight(lambda, n) * n2 * n2;
            }
            return two_na2 * acc;
        }
    }
    throw std::logic_error("parity_curvature_sum: unreachable");
}

}  // namespace kerr_mzi
