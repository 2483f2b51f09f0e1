#include "kerr_mzi/estimation.hpp"

#include <cmath>
#include <stdexcept>

#include "kerr_mzi/parity_signals.hpp"

namespace kerr_mzi {

namespace {

void require_positive_nu(int nu) {
    if (nu < 1) throw std::invalid_argument("nu must be a positive integer");
}

}  // namespace

double error_propagation_sensitivity(const CosineSeriesSignal& signal, double phi, int nu) {
    require_positive_nu(nu);
    const double slope = signal.derivative(phi);
    if (std::abs(slope) <= 1e-14)
        throw std::domain_error(
            "error_propagation_sensitivity: signal derivative vanishes at this phi; "
            "use zero_phase_sensitivity_limit");
    const double value = signal.evaluate(phi);
    const double variance = std::max(0.0, 1.0 - value * value);  // <Pi^2> = 1
    return std::sqrt(variance) / (std::sqrt(static_cast<double>(nu)) * std::abs(slope));
}

double zero_phase_sensitivity_limit(const CosineSeriesSignal& signal, int nu,
                                    double peak_tolerance) {
    require_positive_nu(nu);
    const double peak = signal.peak_value();
    if (std::abs(peak - 1.0) > peak_tolerance)
        throw std::domain_error("zero_phase_sensitivity_limit: signal peak deviates from 1");
    const double curvature = signal.curvature_sum();
    if (!(curvature > 0.0))
        throw std::domain_error("zero_phase_sensitivity_limit: flat signal");
    return 1.0 / std::sqrt(nu * curvature);
}

double qfi_tf(int n) {
    if (n < 0) throw std::invalid_argument("qfi_tf: n must be >= 0");
    const double x = n;
    return 8.5 * x * x * x * x + 9.0 * x * x * x - 0.5 * x * x - x;
}

double qfi_tmsv_closed(double nbar) {
    if (!(nbar >= 0.0)) throw std::invalid_argument("qfi_tmsv_closed: nbar must be >= 0");
    const double x = nbar;
    return 12.75 * x * x * x * x + 45.0 * x * x * x + 43.0 * x * x + 8.0 * x;
}

double qfi_tmsv_series(double nbar, const TruncationPolicy& policy) {
    if (!(nbar >= 0.0)) throw std::invalid_argument("qfi_tmsv_series: nbar must be >= 0");
    double acc = 0.0;
    for (int n = 0; n <= policy.n_max; ++n) acc += tmsv_weight(n, nbar) * qfi_tf(n);
    return acc;
}

double qfi_noon(int n) {
    if (n < 0) throw std::invalid_argument("qfi_noon: n must be >= 0");
    const double x = n;
    return x * x * x * x;
}

double qfi_ec_series(double alpha, const TruncationPolicy& policy) {
    if (!(alpha > 0.0)) throw std::invalid_argument("qfi_ec_series: alpha must be > 0");
    const double lambda = alpha * alpha;
    const double two_na2 = 1.0 / (1.0 + std::exp(-lambda));
    double acc = 0.0;
    for (int n = 1; n <= policy.n_max; ++n) {
        const double n2 = static_cast<double>(n) * n;
        acc += poisson_weight(lambda, n) * n2 * n2;
    }
    return two_na2 * acc;
}

double qfi_ec_asymptotic(double nbar) {
    if (!(nbar >= 0.0)) throw std::invalid_argument("qfi_ec_asymptotic: nbar must be >= 0");
    const double x = nbar;
    return x * x * x * x + 6.0 * x * x * x + 7.0 * x * x + x;
}

double qfi_ec_joo(double nbar) {
    if (!(nbar >= 0.0)) throw std::invalid_argument("qfi_ec_joo: nbar must be >= 0");
    const double x = nbar;
    return x * x * x * x + 10.0 * x * x * x + 13.0 * x * x + 2.0 * x;
}

double qcr_bound(double fisher_information, int nu) {
    require_positive_nu(nu);
    if (!(fisher_information > 0.0))
        throw std::invalid_argument("qcr_bound: Fisher information must be > 0");
    return 1.0 / std::sqrt(nu * fisher_information);
}

double bgsl(double n_total, int k, int nu) {
    require_positive_nu(nu);
    if (k < 1) throw std::invalid_argument("bgsl: k must be a positive integer");
    if (!(n_total > 0.0)) throw std::invalid_argument("bgsl: N must be > 0");
    return 1.0 / (std::sqrt(static_cast<double>(nu)) * std::pow(n_total, k));
}

double one_axis_twisting_limit(int n_total, int nu) {
    require_positive_nu(nu);
    if (n_total < 1) throw std::invalid_argument("one_axis_twisting_limit: N must be >= 1");
    const double x = n_total;
    return 4.0 / (std::sqrt(static_cast<double>(nu)) * x * x);
}

double fourth_moment_total_photon(const InputStateSpec& spec, const TruncationPolicy& policy) {
    switch (spec.family) {
        case StateFamily::Tmsv: {
            const double x = spec.nbar;
            return 24.0 * x * x * x * x + 72.0 * x * x * x + 56.0 * x * x + 8.0 * x;
        }
        case StateFamily::TwinFock: {
            const double total = 2.0 * spec.n;
            return total * total * total * total;
        }
        case StateFamily::Noon: {
            const double total = spec.n;
            return total * total * total * total;
        }
        case StateFamily::EntangledCoherent:
            // sector probabilities 2 N_a^2 |c_n|^2 times n^4: the same series
            // as the EC QFI (NOON sectors carry F = N^4 = <N^4>)
            return qfi_ec_series(spec.alpha, policy);
    }
    throw std::logic_error("fourth_moment_total_photon: unreachable");
}

double generalized_limit(double fourth_moment, int nu) {
    require_positive_nu(nu);
    if (!(fourth_moment > 0.0))
        throw std::invalid_argument("generalized_limit: fourth moment must be > 0");
    return 1.0 / std::sqrt(nu * fourth_moment);
}

double sensitivity_gain(double fisher_information, double nbar) {
    if (!(fisher_information > 0.0))
        throw std::invalid_argument("sensitivity_gain: Fisher information must be > 0");
    if (!(nbar > 0.0)) throw std::invalid_argument("sensitivity_gain: nbar must be > 0");
    return -10.0 * std::log10(nbar * nbar / std::sqrt(fisher_information));
}

double ec_mean_photon(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("ec_mean_photon: alpha must be > 0");
    const double lambda = alpha * alpha;
    return lambda / (1.0 + std::exp(-lambda));
}

double ec_alpha_for_mean(double nbar) {
    if (!(nbar > 0.0)) throw std::invalid_argument("ec_alpha_for_mean: nbar must be > 0");
    double lo = 0.0;
    double hi = std::sqrt(nbar) + 2.0;
    while (ec_mean_photon(hi) < nbar) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (ec_mean_photon(mid) < nbar ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double qfi_for_state(const InputStateSpec& spec, double tail_epsilon) {
    switch (spec.family) {
        case StateFamily::TwinFock: return qfi_tf(spec.n);
        case StateFamily::Tmsv: return qfi_tmsv_closed(spec.nbar);
        case StateFamily::Noon: return qfi_noon(spec.n);
        case StateFamily::EntangledCoherent:
            return qfi_ec_series(spec.alpha, truncation_cutoff(spec, tail_epsilon));
    }
    throw std::logic_error("qfi_for_state: unreachable");
}

SensitivityReport make_sensitivity_report(const InputStateSpec& spec, int nu,
                                          double tail_epsilon) {
    require_positive_nu(nu);
    SensitivityReport report;
    report.state = spec;
    report.nu = nu;
    report.nbar = spec.mean_photon_number();
    if (!(report.nbar > 0.0))
        throw std::invalid_argument("make_sensitivity_report: state carries no photons");

    TruncationPolicy policy{0, tail_epsilon};
    if (spec.has_fluctuating_number()) policy = truncation_cutoff(spec, tail_epsilon);

    // phi -> 0 limit from the accumulated curvature; unlike the materialized
    // series this stays tractable at large nbar
    const double curvature = parity_curvature_sum(spec, policy);
    if (!(curvature > 0.0))
        throw std::invalid_argument("make_sensitivity_report: flat parity signal");
    report.delta_phi_parity = 1.0 / std::sqrt(nu * curvature);
    report.qcr = qcr_bound(qfi_for_state(spec, tail_epsilon), nu);
    report.bgsl_value = bgsl(report.nbar, 2, nu);
    report.generalized = generalized_limit(fourth_moment_total_photon(spec, policy), nu);
    report.gain_db = sensitivity_gain(qfi_for_state(spec, tail_epsilon), report.nbar);
    return report;
}

BoundSet make_bound_set(const InputStateSpec& spec, int nu, double tail_epsilon) {
    require_positive_nu(nu);
    const double nbar = spec.mean_photon_number();
    if (!(nbar > 0.0)) throw std::invalid_argument("make_bound_set: state carries no photons");
    TruncationPolicy policy{0, tail_epsilon};
    if (spec.has_fluctuating_number()) policy = truncation_cutoff(spec, tail_epsilon);
    BoundSet bounds;
    bounds.fourth_moment = fourth_moment_total_photon(spec, policy);
    bounds.bgsl_value = bgsl(nbar, 2, nu);
    bounds.generalized_value = generalized_limit(bounds.fourth_moment, nu);
    return bounds;
}

}  // namespace kerr_mzi
