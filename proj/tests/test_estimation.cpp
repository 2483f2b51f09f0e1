#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "kerr_mzi/estimation.hpp"
#include "kerr_mzi/parity_signals.hpp"

using namespace kerr_mzi;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_err(double got, double want) {
    return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("error propagation on single-frequency signals") {
    // NOON(2): 1/(sqrt(nu) N^2) at every phi with a nonvanishing derivative
    const auto noon2 = noon_parity_series(2);
    CHECK(rel_err(error_propagation_sensitivity(noon2, kPi / 8.0, 1), 0.25) <= 1e-12);
    CHECK(rel_err(error_propagation_sensitivity(noon2, kPi / 8.0, 4), 0.125) <= 1e-12);

    CosineSeriesBuilder builder;
    builder.add(1.0, 7);
    const auto single = std::move(builder).build();
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> phi_dist(0.02, kPi / 7.0 - 0.02);
    for (int trial = 0; trial < 10; ++trial) {
        const double phi = phi_dist(rng);
        CHECK(rel_err(error_propagation_sensitivity(single, phi, 1), 1.0 / 7.0) <= 1e-12);
    }

    CHECK(rel_err(error_propagation_sensitivity(tf_parity_series(1), kPi / 16.0, 1), 0.25) <=
          1e-12);

    CHECK_THROWS_AS(error_propagation_sensitivity(noon2, 0.0, 1), std::domain_error);
    CHECK_THROWS_AS(error_propagation_sensitivity(noon2, kPi / 4.0, 1), std::domain_error);
    CHECK_THROWS_AS(error_propagation_sensitivity(noon2, kPi / 8.0, 0), std::invalid_argument);
}

TEST_CASE("noon parity is exactly 1/(sqrt(nu) N^2) wherever defined") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> phi_dist(1e-3, kPi / 2.0);
    for (const int n : {1, 2, 3, 4, 6}) {
        const auto signal = noon_parity_series(n);
        const double want = 1.0 / (static_cast<double>(n) * n);
        int accepted = 0;
        while (accepted < 20) {
            const double phi = phi_dist(rng);
            if (std::abs(std::sin(n * n * phi)) < 1e-3) continue;
            ++accepted;
            CHECK(rel_err(error_propagation_sensitivity(signal, phi, 1), want) <= 1e-12);
        }
    }
}

TEST_CASE("zero-phase sensitivity limit") {
    CosineSeriesBuilder builder;
    builder.add(1.0, 5);
    const auto single = std::move(builder).build();
    CHECK(rel_err(zero_phase_sensitivity_limit(single, 1), 0.2) <= 1e-14);
    CHECK(rel_err(zero_phase_sensitivity_limit(single, 4), 0.1) <= 1e-14);

    // TMSV(2): the curvature series was validated by brute force as
    // 12 N^4 + 42 N^3 + 40 N^2 + 8 N = 704 before the build
    const auto policy = truncation_cutoff(InputStateSpec::tmsv(2.0), 1e-12);
    const auto tmsv2 = tmsv_parity_series(2.0, policy);
    const double limit = zero_phase_sensitivity_limit(tmsv2, 1, 1e-9);
    CHECK(rel_err(limit, 1.0 / std::sqrt(704.0)) <= 1e-7);
    CHECK(limit == doctest::Approx(0.037688).epsilon(1e-4));

    // EC saturates the QCR bound: zero-phase limit == 1/sqrt(F_EC-series)
    for (const double alpha : {0.8, 2.0}) {
        const auto ec_policy = truncation_cutoff(InputStateSpec::entangled_coherent(alpha), 1e-12);
        const auto ec_signal = ec_parity_series(alpha, ec_policy);
        const double fisher = qfi_ec_series(alpha, ec_policy);
        CHECK(rel_err(zero_phase_sensitivity_limit(ec_signal, 1, 1e-9),
                      1.0 / std::sqrt(fisher)) <= 1e-12);
    }

    // rejects signals that do not peak at 1
    CHECK_THROWS_AS(zero_phase_sensitivity_limit(noon_parity_series(0), 1), std::domain_error);
    CHECK_THROWS_AS(zero_phase_sensitivity_limit(CosineSeriesSignal::constant(1.0), 1),
                    std::domain_error);  // flat: zero curvature
}

TEST_CASE("QFI closed forms") {
    CHECK(qfi_tf(0) == 0.0);
    CHECK(qfi_tf(1) == 16.0);
    CHECK(qfi_tf(2) == 204.0);

    CHECK(qfi_tmsv_closed(0.0) == 0.0);
    CHECK(qfi_tmsv_closed(2.0) == 752.0);

    CHECK(qfi_noon(0) == 0.0);
    CHECK(qfi_noon(2) == 16.0);
    CHECK(qfi_tf(1) == qfi_noon(2));  // Hong-Ou-Mandel saturation point

    CHECK(qfi_ec_asymptotic(0.0) == 0.0);
    CHECK(qfi_ec_asymptotic(4.0) == 756.0);
    CHECK(qfi_ec_joo(0.0) == 0.0);
    CHECK(qfi_ec_joo(4.0) == 1112.0);
    for (const double nbar : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        CHECK(qfi_ec_asymptotic(nbar) < qfi_ec_joo(nbar));
        CHECK(qfi_tmsv_closed(nbar) > qfi_ec_joo(nbar));
    }
}

TEST_CASE("TMSV QFI series against the closed form") {
    const auto policy0 = truncation_cutoff(InputStateSpec::tmsv(0.0), 1e-12);
    CHECK(qfi_tmsv_series(0.0, policy0) == 0.0);

    for (const double nbar : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const auto policy = truncation_cutoff(InputStateSpec::tmsv(nbar), 1e-12);
        CHECK(rel_err(qfi_tmsv_series(nbar, policy), qfi_tmsv_closed(nbar)) <= 1e-6);
    }
    // a deeper tail delivers the tighter agreement
    const auto deep = truncation_cutoff(InputStateSpec::tmsv(2.0), 1e-16);
    CHECK(rel_err(qfi_tmsv_series(2.0, deep), 752.0) <= 1e-8);

    // monotone nondecreasing in n_max
    double previous = -1.0;
    for (int n_max = 0; n_max <= 50; n_max += 5) {
        const double value = qfi_tmsv_series(2.0, TruncationPolicy{n_max, 1e-12});
        CHECK(value >= previous);
        previous = value;
    }
}

TEST_CASE("EC QFI series, asymptote and Poisson-moment oracle") {
    const auto tiny = truncation_cutoff(InputStateSpec::entangled_coherent(1e-3), 1e-12);
    CHECK(qfi_ec_series(1e-3, tiny) <= 1e-5);

    const double alpha = 6.0;  // alpha^2 = 36
    const auto policy = truncation_cutoff(InputStateSpec::entangled_coherent(alpha), 1e-12);
    const double series = qfi_ec_series(alpha, policy);
    CHECK(rel_err(series, qfi_ec_asymptotic(36.0)) <= 1e-6);

    // Poisson raw-moment oracle: 2 N_a^2 (l^4 + 6 l^3 + 7 l^2 + l)
    const double lambda = alpha * alpha;
    const double two_na2 = 1.0 / (1.0 + std::exp(-lambda));
    const double moment4 =
        lambda * lambda * lambda * lambda + 6.0 * lambda * lambda * lambda +
        7.0 * lambda * lambda + lambda;
    CHECK(rel_err(series, two_na2 * moment4) <= 1e-10);
}

TEST_CASE("bounds and limits") {
    CHECK(qcr_bound(16.0, 1) == 0.25);
    CHECK(qcr_bound(16.0, 4) == 0.125);
    CHECK(rel_err(qcr_bound(752.0, 1), 0.036466) <= 1e-4);
    CHECK_THROWS_AS(qcr_bound(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(qcr_bound(-2.0, 1), std::invalid_argument);

    CHECK(bgsl(2.0, 2, 1) == 0.25);
    for (const double n : {2.0, 5.0, 10.0}) CHECK(rel_err(bgsl(n, 1, 1), 1.0 / n) <= 1e-15);
    for (const int k : {1, 2, 3, 4}) CHECK(bgsl(1.0, k, 1) == 1.0);

    CHECK(one_axis_twisting_limit(2, 1) == 1.0);
    CHECK(one_axis_twisting_limit(4, 1) == 0.25);

    CHECK(rel_err(generalized_limit(1200.0, 1), 0.028868) <= 1e-4);
    CHECK(generalized_limit(16.0, 1) == 0.25);
    CHECK_THROWS_AS(generalized_limit(0.0, 1), std::invalid_argument);
}

TEST_CASE("fourth moment of the total photon number") {
    const TruncationPolicy unused{0, 1e-12};
    CHECK(fourth_moment_total_photon(InputStateSpec::tmsv(0.0), unused) == 0.0);
    CHECK(fourth_moment_total_photon(InputStateSpec::tmsv(2.0), unused) == 1200.0);
    CHECK(fourth_moment_total_photon(InputStateSpec::twin_fock(1), unused) == 16.0);
    CHECK(fourth_moment_total_photon(InputStateSpec::noon(3), unused) == 81.0);

    for (const double nbar : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double closed = fourth_moment_total_photon(InputStateSpec::tmsv(nbar), unused);
        CHECK(rel_err(closed, 16.0 * geometric_moment(nbar, 4)) <= 1e-10);
        // the QFI never exceeds <N^4>, so the generalized limit is not overcome
        CHECK(qfi_tmsv_closed(nbar) <= closed);
        CHECK(generalized_limit(closed, 1) <= qcr_bound(qfi_tmsv_closed(nbar), 1) + 1e-12);
    }

    const auto ec = InputStateSpec::entangled_coherent(2.0);
    const auto policy = truncation_cutoff(ec, 1e-12);
    CHECK(fourth_moment_total_photon(ec, policy) == qfi_ec_series(2.0, policy));
}

TEST_CASE("supersensitivity orderings") {
    for (const double nbar : {0.5, 1.0, 2.0, 4.0, 8.0, 100.0}) {
        CHECK(qcr_bound(qfi_tmsv_closed(nbar), 1) < bgsl(nbar, 2, 1));
        CHECK(qcr_bound(qfi_ec_asymptotic(nbar), 1) < bgsl(nbar, 2, 1));
    }
}

TEST_CASE("sensitivity gain") {
    for (const double nbar : {1.0, 3.0, 10.0})
        CHECK(std::abs(sensitivity_gain(qfi_noon(1) * std::pow(nbar, 4), nbar)) <= 1e-12);

    CHECK(rel_err(sensitivity_gain(752.0, 2.0), 10.0 * std::log10(std::sqrt(752.0) / 4.0)) <=
          1e-12);
    CHECK(sensitivity_gain(752.0, 2.0) == doctest::Approx(8.36).epsilon(1e-3));

    const double g1000 = sensitivity_gain(qfi_tmsv_closed(1000.0), 1000.0);
    CHECK(g1000 >= 5.50);
    CHECK(g1000 <= 5.55);

    // EC gain decays: strictly decreasing for nbar >= 1 and < 0.3 dB at 50
    double previous = sensitivity_gain(qfi_ec_asymptotic(1.0), 1.0);
    for (double nbar = 1.5; nbar <= 50.0; nbar += 0.5) {
        const double gain = sensitivity_gain(qfi_ec_asymptotic(nbar), nbar);
        CHECK(gain < previous);
        previous = gain;
    }
    CHECK(sensitivity_gain(qfi_ec_asymptotic(50.0), 50.0) < 0.3);

    CHECK_THROWS_AS(sensitivity_gain(0.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(sensitivity_gain(16.0, 0.0), std::invalid_argument);
}

TEST_CASE("parity quasi-optimality ratio approaches sqrt(51/48)") {
    const double target = std::sqrt(51.0 / 48.0);
    double previous_gap = 1e9;
    for (const double nbar : {10.0, 30.0, 100.0}) {
        const auto policy = truncation_cutoff(InputStateSpec::tmsv(nbar), 1e-12);
        const double parity =
            zero_phase_sensitivity_limit(tmsv_parity_series(nbar, policy), 1, 1e-9);
        const double ratio = parity / qcr_bound(qfi_tmsv_closed(nbar), 1);
        const double gap = std::abs(ratio - target);
        CHECK(gap < previous_gap);
        previous_gap = gap;
        if (nbar == 100.0) CHECK(gap <= 1e-3);
    }
}

TEST_CASE("QCR dominance of the error-propagation sensitivity") {
    // twin Fock
    for (const int n : {1, 2, 3, 4}) {
        const auto signal = tf_parity_series(n);
        const double bound = qcr_bound(qfi_tf(n), 1);
        for (double phi = 0.003; phi < kPi / 2.0; phi += 0.013) {
            if (std::abs(signal.derivative(phi)) <= 1e-6) continue;
            CHECK(error_propagation_sensitivity(signal, phi, 1) >= bound - 1e-12);
        }
        CHECK(zero_phase_sensitivity_limit(signal, 1) >= bound - 1e-12);
    }
    // TMSV and EC via the zero-phase limit
    for (const double nbar : {1.0, 2.0, 4.0}) {
        const auto policy = truncation_cutoff(InputStateSpec::tmsv(nbar), 1e-12);
        CHECK(zero_phase_sensitivity_limit(tmsv_parity_series(nbar, policy), 1, 1e-9) >=
              qcr_bound(qfi_tmsv_closed(nbar), 1) - 1e-12);
    }
}

TEST_CASE("accumulated curvature equals the materialized series curvature") {
    const TruncationPolicy fixed{0, 1e-12};
    for (const int n : {1, 2, 5}) {
        const auto spec = InputStateSpec::twin_fock(n);
        CHECK(rel_err(parity_curvature_sum(spec, fixed),
                      tf_parity_series(n).curvature_sum()) <= 1e-12);
    }
    CHECK(parity_curvature_sum(InputStateSpec::noon(3), fixed) == 81.0);
    for (const double nbar : {1.0, 4.0, 40.0}) {
        const auto spec = InputStateSpec::tmsv(nbar);
        const auto policy = truncation_cutoff(spec, 1e-12);
        CHECK(rel_err(parity_curvature_sum(spec, policy),
                      tmsv_parity_series(nbar, policy).curvature_sum()) <= 1e-12);
    }
    const auto ec = InputStateSpec::entangled_coherent(2.0);
    const auto ec_policy = truncation_cutoff(ec, 1e-12);
    CHECK(rel_err(parity_curvature_sum(ec, ec_policy),
                  ec_parity_series(2.0, ec_policy).curvature_sum()) <= 1e-12);
}

TEST_CASE("reports stay tractable at large nbar") {
    // the materialized series is refused here, the curvature path is not
    const auto policy = truncation_cutoff(InputStateSpec::tmsv(1000.0), 1e-12);
    CHECK_THROWS_AS(tmsv_parity_series(1000.0, policy), std::invalid_argument);

    const SensitivityReport report = make_sensitivity_report(InputStateSpec::tmsv(300.0), 1, 1e-12);
    CHECK(report.delta_phi_parity >= report.qcr - 1e-12);
    CHECK(report.qcr >= report.generalized - 1e-12);
    // deep in the asymptotic regime the parity/QCR ratio is sqrt(51/48)
    CHECK(rel_err(report.delta_phi_parity / report.qcr, std::sqrt(51.0 / 48.0)) <= 1e-4);
}

TEST_CASE("ec mean photon mapping") {
    for (const double alpha : {0.3, 1.0, 2.0, 6.0}) {
        const double nbar = ec_mean_photon(alpha);
        CHECK(rel_err(ec_alpha_for_mean(nbar), alpha) <= 1e-10);
    }
    CHECK(ec_mean_photon(2.0) == doctest::Approx(4.0 / (1.0 + std::exp(-4.0))).epsilon(1e-15));
    CHECK_THROWS_AS(ec_alpha_for_mean(0.0), std::invalid_argument);
}

TEST_CASE("sensitivity reports satisfy the bound ordering") {
    for (const auto& spec :
         {InputStateSpec::tmsv(2.0), InputStateSpec::tmsv(6.0),
          InputStateSpec::entangled_coherent(2.0), InputStateSpec::twin_fock(2),
          InputStateSpec::noon(3)}) {
        const SensitivityReport report = make_sensitivity_report(spec, 1, 1e-12);
        CHECK(report.delta_phi_parity >= report.qcr - 1e-12);
        if (spec.has_fluctuating_number()) CHECK(report.qcr >= report.generalized - 1e-12);
        CHECK(report.nbar == spec.mean_photon_number());

        const BoundSet bounds = make_bound_set(spec, 1, 1e-12);
        CHECK(bounds.generalized_value ==
              doctest::Approx(1.0 / std::sqrt(bounds.fourth_moment)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(make_sensitivity_report(InputStateSpec::tmsv(0.0), 1, 1e-12),
                    std::invalid_argument);
}
