// kerr-mzi: tables for Kerr-nonlinear Mach-Zehnder phase estimation.
// Every emitted numeric is a direct library-call result; the CLI only
// gathers parameters and writes tables.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "kerr_mzi/estimation.hpp"
#include "kerr_mzi/figures.hpp"
#include "kerr_mzi/parity_signals.hpp"
#include "kerr_mzi/sweep.hpp"
#include "kerr_mzi/table_io.hpp"

namespace {

using namespace kerr_mzi;

struct CommonOptions {
    std::string state_tag;
    std::vector<double> n_values;
    std::vector<double> nbar_values;
    std::vector<double> alpha_values;
    double phi_min = 0.0;
    double phi_max = 1.5707963267948966;
    int phi_steps = 201;
    int nu = 1;
    double tail_eps = 1e-12;
    std::string out_path;
    std::string format_tag = "csv";
    int threads = 0;
};

void add_state_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--state", opts.state_tag, "state family: tf|tmsv|ec|noon")->required();
    cmd->add_option("--n", opts.n_values, "photon number(s) for tf/noon");
    cmd->add_option("--nbar", opts.nbar_values, "mean photon number(s) for tmsv");
    cmd->add_option("--alpha", opts.alpha_values, "coherent amplitude(s) for ec");
}

void add_output_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--nu", opts.nu, "experiment repetitions");
    cmd->add_option("--tail-eps", opts.tail_eps, "truncation tail tolerance");
    cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    cmd->add_option("--format", opts.format_tag, "csv|json");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = hardware)");
}

StateFamily family_of(const CommonOptions& opts) {
    try {
        return parse_state_family(opts.state_tag);
    } catch (const std::invalid_argument& error) {
        throw ValidationError(error.what());
    }
}

// the parameter list matching the family; rejects flags of other families
std::vector<double> parameter_values(const CommonOptions& opts, StateFamily family) {
    const bool fock_like = family == StateFamily::TwinFock || family == StateFamily::Noon;
    if (!opts.n_values.empty() && !fock_like)
        throw ValidationError("--n applies to tf/noon states only");
    if (!opts.nbar_values.empty() && family != StateFamily::Tmsv)
        throw ValidationError("--nbar applies to tmsv states only");
    if (!opts.alpha_values.empty() && family != StateFamily::EntangledCoherent)
        throw ValidationError("--alpha applies to ec states only");
    const std::vector<double>& values = fock_like ? opts.n_values
                                        : family == StateFamily::Tmsv ? opts.nbar_values
                                                                      : opts.alpha_values;
    if (values.empty())
        throw ValidationError(std::string("missing state parameter (--") +
                              (fock_like ? "n" : family == StateFamily::Tmsv ? "nbar" : "alpha") +
                              ")");
    return values;
}

std::vector<InputStateSpec> build_specs(const CommonOptions& opts) {
    const StateFamily family = family_of(opts);
    std::vector<InputStateSpec> specs;
    try {
        for (const double value : parameter_values(opts, family))
            specs.push_back(instantiate_state(family, value));
    } catch (const std::invalid_argument& error) {
        throw ValidationError(error.what());
    }
    return specs;
}

void emit(const NumericTable& table, const CommonOptions& opts) {
    write_table(table, opts.out_path, parse_output_format(opts.format_tag));
}

int run_signal(const CommonOptions& opts) {
    const std::vector<InputStateSpec> specs = build_specs(opts);
    if (specs.size() != 1) throw ValidationError("signal takes exactly one state parameter");
    SweepConfig config;
    config.state = specs.front();
    config.phi_min = opts.phi_min;
    config.phi_max = opts.phi_max;
    config.phi_steps = opts.phi_steps;
    config.nbar_list = {family_parameter(specs.front())};
    config.nu = opts.nu;
    config.tail_epsilon = opts.tail_eps;
    emit(run_sweep(config, opts.threads), opts);
    return 0;
}

int run_qfi(const CommonOptions& opts) {
    NumericTable table;
    table.add_column("param", "family parameter");
    table.add_column("mean_photon", "mean_photon_number");
    table.add_column("qfi", "qfi_for_state");
    table.add_column("qcr_bound", "qcr_bound(qfi_for_state)");
    for (const auto& spec : build_specs(opts)) {
        const double fisher = qfi_for_state(spec, opts.tail_eps);
        table.rows.push_back({family_parameter(spec), spec.mean_photon_number(), fisher,
                              qcr_bound(fisher, opts.nu)});
    }
    emit(table, opts);
    return 0;
}

int run_sensitivity(const CommonOptions& opts) {
    NumericTable table;
    table.add_column("param", "family parameter");
    table.add_column("mean_photon", "mean_photon_number");
    table.add_column("delta_phi_parity", "zero_phase_sensitivity_limit(parity_series)");
    table.add_column("qcr_bound", "qcr_bound(qfi_for_state)");
    table.add_column("bgsl", "bgsl(mean_photon, 2)");
    table.add_column("generalized_limit", "generalized_limit(fourth_moment_total_photon)");
    table.add_column("gain_db", "sensitivity_gain(qfi_for_state)");
    for (const auto& spec : build_specs(opts)) {
        const SensitivityReport report = make_sensitivity_report(spec, opts.nu, opts.tail_eps);
        table.rows.push_back({family_parameter(spec), report.nbar, report.delta_phi_parity,
                              report.qcr, report.bgsl_value, report.generalized,
                              report.gain_db});
    }
    emit(table, opts);
    return 0;
}

int run_bounds(const CommonOptions& opts) {
    NumericTable table;
    table.add_column("param", "family parameter");
    table.add_column("mean_photon", "mean_photon_number");
    table.add_column("fourth_moment", "fourth_moment_total_photon");
    table.add_column("bgsl", "bgsl(mean_photon, 2)");
    table.add_column("generalized_limit", "generalized_limit(fourth_moment)");
    for (const auto& spec : build_specs(opts)) {
        const BoundSet bounds = make_bound_set(spec, opts.nu, opts.tail_eps);
        table.rows.push_back({family_parameter(spec), spec.mean_photon_number(),
                              bounds.fourth_moment, bounds.bgsl_value,
                              bounds.generalized_value});
    }
    emit(table, opts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kerr-nonlinear Mach-Zehnder phase-estimation tables"};
    app.require_subcommand(1);

    CommonOptions signal_opts, qfi_opts, sens_opts, bounds_opts, figure_opts, sweep_opts;

    auto* signal_cmd = app.add_subcommand("signal", "parity signal over a phi grid");
    add_state_flags(signal_cmd, signal_opts);
    signal_cmd->add_option("--phi-min", signal_opts.phi_min, "grid start (radians)");
    signal_cmd->add_option("--phi-max", signal_opts.phi_max, "grid end (radians)");
    signal_cmd->add_option("--phi-steps", signal_opts.phi_steps, "grid points");
    add_output_flags(signal_cmd, signal_opts);

    auto* qfi_cmd = app.add_subcommand("qfi", "quantum Fisher information");
    add_state_flags(qfi_cmd, qfi_opts);
    add_output_flags(qfi_cmd, qfi_opts);

    auto* sens_cmd = app.add_subcommand("sensitivity", "parity and QCR phase uncertainties");
    add_state_flags(sens_cmd, sens_opts);
    add_output_flags(sens_cmd, sens_opts);

    auto* bounds_cmd = app.add_subcommand("bounds", "fourth moment and sensitivity limits");
    add_state_flags(bounds_cmd, bounds_opts);
    add_output_flags(bounds_cmd, bounds_opts);

    std::string figure_tag;
    auto* figure_cmd = app.add_subcommand("figure", "reproduce a figure data table");
    figure_cmd->add_option("--id", figure_tag, "fig2a|fig2b|fig3|fig4")->required();
    add_output_flags(figure_cmd, figure_opts);

    std::string config_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a sweep from a JSON config");
    sweep_cmd->add_option("--config", config_path, "JSON config path")->required();
    add_output_flags(sweep_cmd, sweep_opts);

    try {
        app.parse(argc, argv);

        if (signal_cmd->parsed()) return run_signal(signal_opts);
        if (qfi_cmd->parsed()) return run_qfi(qfi_opts);
        if (sens_cmd->parsed()) return run_sensitivity(sens_opts);
        if (bounds_cmd->parsed()) return run_bounds(bounds_opts);
        if (figure_cmd->parsed()) {
            const NumericTable table = run_figure(parse_figure_id(figure_tag), figure_opts.nu,
                                                  figure_opts.tail_eps, figure_opts.threads);
            emit(table, figure_opts);
            return 0;
        }
        if (sweep_cmd->parsed()) {
            SweepConfig config = parse_config(config_path);
            if (!sweep_opts.out_path.empty()) config.output_path = sweep_opts.out_path;
            write_table(run_sweep(config, sweep_opts.threads), config.output_path,
                        config.format);
            return 0;
        }
        return 0;
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    } catch (const kerr_mzi::IoError& error) {
        std::cerr << "io error: " << error.what() << "\n";
        return 3;
    } catch (const kerr_mzi::ValidationError& error) {
        std::cerr << "validation error: " << error.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& error) {
        std::cerr << "validation error: " << error.what() << "\n";
        return 2;
    } catch (const std::domain_error& error) {
        std::cerr << "validation error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
}
