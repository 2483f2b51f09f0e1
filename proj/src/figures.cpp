#include "kerr_mzi/figures.hpp"

#include <cmath>

#include "kerr_mzi/estimation.hpp"
#include "kerr_mzi/parity_signals.hpp"
#include "kerr_mzi/sweep.hpp"

namespace kerr_mzi {

FigureId parse_figure_id(const std::string& tag) {
    if (tag == "fig2a") return FigureId::Fig2a;
    if (tag == "fig2b") return FigureId::Fig2b;
    if (tag == "fig3") return FigureId::Fig3;
    if (tag == "fig4") return FigureId::Fig4;
    throw ValidationError("figure id: unknown value '" + tag +
                          "' (expected fig2a|fig2b|fig3|fig4)");
}

const FigureManifest& default_figure_manifest() {
    static const FigureManifest manifest;
    return manifest;
}

namespace {

NumericTable signal_grid_table(const std::vector<InputStateSpec>& specs, int threads,
                               double tail_epsilon) {
    const auto& manifest = default_figure_manifest();
    std::vector<CosineSeriesSignal> signals;
    signals.reserve(specs.size());
    for (const auto& spec : specs) {
        TruncationPolicy policy{0, tail_epsilon};
        if (spec.has_fluctuating_number()) policy = truncation_cutoff(spec, tail_epsilon);
        signals.push_back(parity_series(spec, policy));
    }
    NumericTable table;
    table.add_column("phi", "linear_grid");
    for (const auto& spec : specs)
        table.add_column("parity_" + spec.label(),
                         "evaluate_signal(parity_series(" + spec.label() + "))");
    const std::vector<double> grid =
        linear_grid(manifest.phi_min, manifest.phi_max, manifest.phi_steps);
    table.rows.assign(grid.size(), std::vector<double>(table.columns.size(), 0.0));
    parallel_for_index(static_cast<int>(grid.size()), threads, [&](int i) {
        auto& row = table.rows[static_cast<size_t>(i)];
        row[0] = grid[static_cast<size_t>(i)];
        for (size_t j = 0; j < signals.size(); ++j)
            row[j + 1] = signals[j].evaluate(row[0]);
    });
    return table;
}

NumericTable sensitivity_table(int nu, double tail_epsilon, int threads) {
    const auto& manifest = default_figure_manifest();
    std::vector<double> nbars;
    for (double nbar = manifest.fig3_nbar_min; nbar <= manifest.fig3_nbar_max + 1e-9;
         nbar += manifest.fig3_nbar_step)
        nbars.push_back(nbar);

    NumericTable table;
    table.add_column("nbar", "figure manifest grid");
    table.add_column("parity_tf", "zero_phase_sensitivity_limit(tf_parity_series)");
    table.add_column("qcr_tf", "qcr_bound(qfi_tf)");
    table.add_column("parity_tmsv", "zero_phase_sensitivity_limit(tmsv_parity_series)");
    table.add_column("qcr_tmsv", "qcr_bound(qfi_tmsv_closed)");
    table.add_column("parity_ec", "zero_phase_sensitivity_limit(ec_parity_series)");
    table.add_column("qcr_ec", "qcr_bound(qfi_ec_series)");
    table.add_column("limit_n32", "1/(sqrt(nu) nbar^(3/2))");
    table.add_column("bgsl_n2", "bgsl(nbar, 2)");
    table.add_column("generalized_tmsv", "generalized_limit(fourth_moment_total_photon(tmsv))");

    const double peak_tolerance = std::max(1e-9, 10.0 * tail_epsilon);
    table.rows.assign(nbars.size(), std::vector<double>(table.columns.size(), 0.0));
    parallel_for_index(static_cast<int>(nbars.size()), threads, [&](int i) {
        const double nbar = nbars[static_cast<size_t>(i)];
        auto& row = table.rows[static_cast<size_t>(i)];
        const int tf_n = static_cast<int>(std::llround(nbar / 2.0));

        const auto tmsv = InputStateSpec::tmsv(nbar);
        const auto tmsv_policy = truncation_cutoff(tmsv, tail_epsilon);
        const auto ec = InputStateSpec::entangled_coherent(ec_alpha_for_mean(nbar));
        const auto ec_policy = truncation_cutoff(ec, tail_epsilon);

        row[0] = nbar;
        row[1] = zero_phase_sensitivity_limit(tf_parity_series(tf_n), nu);
        row[2] = qcr_bound(qfi_tf(tf_n), nu);
        row[3] = zero_phase_sensitivity_limit(tmsv_parity_series(nbar, tmsv_policy), nu,
                                              peak_tolerance);
        row[4] = qcr_bound(qfi_tmsv_closed(nbar), nu);
        row[5] = zero_phase_sensitivity_limit(ec_parity_series(ec.alpha, ec_policy), nu,
                                              peak_tolerance);
        row[6] = qcr_bound(qfi_ec_series(ec.alpha, ec_policy), nu);
        row[7] = 1.0 / (std::sqrt(static_cast<double>(nu)) * std::pow(nbar, 1.5));
        row[8] = bgsl(nbar, 2, nu);
        row[9] = generalized_limit(fourth_moment_total_photon(tmsv, tmsv_policy), nu);
    });
    return table;
}

NumericTable gain_table(double tail_epsilon, int threads) {
    const auto& manifest = default_figure_manifest();
    std::vector<double> nbars;
    for (int d = 0; d <= manifest.fig4_decades * manifest.fig4_points_per_decade; ++d)
        nbars.push_back(std::pow(10.0, static_cast<double>(d) / manifest.fig4_points_per_decade));

    NumericTable table;
    table.add_column("nbar", "figure manifest grid");
    table.add_column("gain_tmsv", "sensitivity_gain(qfi_tmsv_closed)");
    table.add_column("gain_ec", "sensitivity_gain(qfi_ec_series)");
    table.add_column("gain_asymptote", "5 log10(51/4) dB");

    const double asymptote = -10.0 * std::log10(std::sqrt(4.0 / 51.0));
    table.rows.assign(nbars.size(), std::vector<double>(table.columns.size(), 0.0));
    parallel_for_index(static_cast<int>(nbars.size()), threads, [&](int i) {
        const double nbar = nbars[static_cast<size_t>(i)];
        auto& row = table.rows[static_cast<size_t>(i)];
        const auto ec = InputStateSpec::entangled_coherent(ec_alpha_for_mean(nbar));
        const auto ec_policy = truncation_cutoff(ec, tail_epsilon);
        row[0] = nbar;
        row[1] = sensitivity_gain(qfi_tmsv_closed(nbar), nbar);
        row[2] = sensitivity_gain(qfi_ec_series(ec.alpha, ec_policy), nbar);
        row[3] = asymptote;
    });
    return table;
}

}  // namespace

NumericTable run_figure(FigureId id, int nu, double tail_epsilon, int threads) {
    if (nu < 1) throw ValidationError("nu must be a positive integer");
    if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0))
        throw ValidationError("tail_epsilon must be in (0,1)");
    const auto& manifest = default_figure_manifest();
    switch (id) {
        case FigureId::Fig2a: {
            std::vector<InputStateSpec> specs;
            for (const int n : manifest.fig2a_n) specs.push_back(InputStateSpec::twin_fock(n));
            return signal_grid_table(specs, threads, tail_epsilon);
        }
        case FigureId::Fig2b: {
            std::vector<InputStateSpec> specs;
            for (const double nbar : manifest.fig2b_nbar)
                specs.push_back(InputStateSpec::tmsv(nbar));
            return signal_grid_table(specs, threads, tail_epsilon);
        }
        case FigureId::Fig3: return sensitivity_table(nu, tail_epsilon, threads);
        case FigureId::Fig4: return gain_table(tail_epsilon, threads);
    }
    throw std::logic_error("run_figure: unreachable");
}

}  // namespace kerr_mzi
