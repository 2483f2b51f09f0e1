#include "kerr_mzi/sweep.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "kerr_mzi/parity_signals.hpp"

namespace kerr_mzi {

std::vector<double> linear_grid(double lo, double hi, int steps) {
    if (steps < 2) throw std::invalid_argument("linear_grid: steps must be >= 2");
    std::vector<double> grid(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i)
        grid[static_cast<size_t>(i)] =
            (i == steps - 1) ? hi : lo + (hi - lo) * i / (steps - 1);
    return grid;
}

void parallel_for_index(int count, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        const int begin = static_cast<int>(static_cast<long long>(count) * t / threads);
        const int end = static_cast<int>(static_cast<long long>(count) * (t + 1) / threads);
        workers.emplace_back([begin, end, &fn] {
            for (int i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& worker : workers) worker.join();
}

namespace {

bool is_nonnegative_integer(double value) {
    return value >= 0.0 && value == std::floor(value) && value <= 1e9;
}

}  // namespace

void validate_config(const SweepConfig& config) {
    if (!(config.phi_min < config.phi_max))
        throw ValidationError("phi_min must be less than phi_max");
    if (config.phi_steps < 2) throw ValidationError("phi_steps must be >= 2");
    if (!(config.tail_epsilon > 0.0 && config.tail_epsilon < 1.0))
        throw ValidationError("tail_epsilon must be in (0,1)");
    if (config.nu < 1) throw ValidationError("nu must be a positive integer");
    if (config.nbar_list.empty()) throw ValidationError("nbar_list must be non-empty");
    for (const double value : config.nbar_list) {
        switch (config.state.family) {
            case StateFamily::TwinFock:
            case StateFamily::Noon:
                if (!is_nonnegative_integer(value))
                    throw ValidationError("nbar_list: photon numbers must be nonnegative integers");
                break;
            case StateFamily::Tmsv:
                if (!(value >= 0.0)) throw ValidationError("nbar_list: nbar must be >= 0");
                break;
            case StateFamily::EntangledCoherent:
                if (!(value > 0.0)) throw ValidationError("nbar_list: alpha must be > 0");
                break;
        }
    }
}

namespace {

const nlohmann::json* find_field(const nlohmann::json& doc, const char* name) {
    const auto it = doc.find(name);
    return it == doc.end() ? nullptr : &*it;
}

double require_number(const nlohmann::json& value, const std::string& field) {
    if (!value.is_number()) throw ValidationError(field + ": expected a number");
    return value.get<double>();
}

int require_integer(const nlohmann::json& value, const std::string& field) {
    if (!value.is_number_integer()) throw ValidationError(field + ": expected an integer");
    return value.get<int>();
}

std::string require_string(const nlohmann::json& value, const std::string& field) {
    if (!value.is_string()) throw ValidationError(field + ": expected a string");
    return value.get<std::string>();
}

InputStateSpec parse_state(const nlohmann::json& value) {
    if (!value.is_object()) throw ValidationError("state: expected an object");
    const auto* family_field = find_field(value, "family");
    if (!family_field) throw ValidationError("state.family: missing");
    StateFamily family;
    try {
        family = parse_state_family(require_string(*family_field, "state.family"));
    } catch (const std::invalid_argument& error) {
        throw ValidationError(std::string("state.family: ") + error.what());
    }
    switch (family) {
        case StateFamily::TwinFock:
        case StateFamily::Noon: {
            const auto* n_field = find_field(value, "n");
            if (!n_field) throw ValidationError("state.n: missing");
            return instantiate_state(family, require_integer(*n_field, "state.n"));
        }
        case StateFamily::Tmsv: {
            const auto* nbar_field = find_field(value, "nbar");
            if (!nbar_field) throw ValidationError("state.nbar: missing");
            return InputStateSpec::tmsv(require_number(*nbar_field, "state.nbar"));
        }
        case StateFamily::EntangledCoherent: {
            const auto* alpha_field = find_field(value, "alpha");
            if (!alpha_field) throw ValidationError("state.alpha: missing");
            return InputStateSpec::entangled_coherent(
                require_number(*alpha_field, "state.alpha"));
        }
    }
    throw std::logic_error("parse_state: unreachable");
}

}  // namespace

SweepConfig parse_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open config '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(file);
    } catch (const nlohmann::json::parse_error& error) {
        throw ValidationError(std::string("config is not valid JSON: ") + error.what());
    }
    if (!doc.is_object()) throw ValidationError("config root must be an object");

    SweepConfig config;
    const auto* state_field = find_field(doc, "state");
    if (!state_field) throw ValidationError("state: missing");
    try {
        config.state = parse_state(*state_field);
    } catch (const std::invalid_argument& error) {
        throw ValidationError(std::string("state: ") + error.what());
    }

    if (const auto* field = find_field(doc, "phi_min"))
        config.phi_min = require_number(*field, "phi_min");
    if (const auto* field = find_field(doc, "phi_max"))
        config.phi_max = require_number(*field, "phi_max");
    if (const auto* field = find_field(doc, "phi_steps"))
        config.phi_steps = require_integer(*field, "phi_steps");
    if (const auto* field = find_field(doc, "nu"))
        config.nu = require_integer(*field, "nu");
    if (const auto* field = find_field(doc, "tail_epsilon"))
        config.tail_epsilon = require_number(*field, "tail_epsilon");
    if (const auto* field = find_field(doc, "output_path"))
        config.output_path = require_string(*field, "output_path");
    if (const auto* field = find_field(doc, "format"))
        config.format = parse_output_format(require_string(*field, "format"));

    if (const auto* field = find_field(doc, "nbar_list")) {
        if (!field->is_array()) throw ValidationError("nbar_list: expected an array");
        for (const auto& entry : *field)
            config.nbar_list.push_back(require_number(entry, "nbar_list"));
        // an explicitly empty list is rejected by validate_config below
    } else {
        config.nbar_list.push_back(family_parameter(config.state));
    }

    validate_config(config);
    return config;
}

NumericTable run_sweep(const SweepConfig& config, int threads) {
    validate_config(config);

    std::vector<InputStateSpec> specs;
    specs.reserve(config.nbar_list.size());
    for (const double parameter : config.nbar_list)
        specs.push_back(instantiate_state(config.state.family, parameter));

    std::vector<CosineSeriesSignal> signals;
    signals.reserve(specs.size());
    for (const auto& spec : specs) {
        TruncationPolicy policy{0, config.tail_epsilon};
        if (spec.has_fluctuating_number())
            policy = truncation_cutoff(spec, config.tail_epsilon);
        signals.push_back(parity_series(spec, policy));
    }

    NumericTable table;
    table.add_column("phi", "linear_grid");
    for (const auto& spec : specs)
        table.add_column("parity_" + spec.label(),
                         "evaluate_signal(parity_series(" + spec.label() + "))");

    const std::vector<double> grid =
        linear_grid(config.phi_min, config.phi_max, config.phi_steps);
    table.rows.assign(grid.size(), std::vector<double>(table.columns.size(), 0.0));
    parallel_for_index(static_cast<int>(grid.size()), threads, [&](int i) {
        auto& row = table.rows[static_cast<size_t>(i)];
        row[0] = grid[static_cast<size_t>(i)];
        for (size_t j = 0; j < signals.size(); ++j)
            row[j + 1] = signals[j].evaluate(row[0]);
    });
    return table;
}

void run_sweep_to_file(const SweepConfig& config, int threads) {
    write_table(run_sweep(config, threads), config.output_path, config.format);
}

}  // namespace kerr_mzi
