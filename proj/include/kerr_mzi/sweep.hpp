#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kerr_mzi/input_state.hpp"
#include "kerr_mzi/table_io.hpp"

namespace kerr_mzi {

struct SweepConfig {
    InputStateSpec state;
    double phi_min = 0.0;
    double phi_max = 1.5707963267948966;  // pi/2
    int phi_steps = 201;
    /// Family-parameter values, one signal column each (n for tf/noon,
    /// nbar for tmsv, alpha for ec). Empty means "the state's own parameter".
    std::vector<double> nbar_list;
    int nu = 1;
    double tail_epsilon = 1e-12;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
};

/// Throws ValidationError naming the offending field.
void validate_config(const SweepConfig& config);

/// Parses a JSON config file, applies defaults (nu = 1, tail_epsilon = 1e-12,
/// format = csv), validates. Missing or ill-typed fields are named in the
/// error message; an explicitly empty nbar_list is rejected.
SweepConfig parse_config(const std::string& path);

/// Parity-signal sweep over the phi grid, one column per parameter value.
/// Deterministic: identical bytes for identical configs, any thread count.
NumericTable run_sweep(const SweepConfig& config, int threads = 0);

/// run_sweep + write to config.output_path in config.format.
void run_sweep_to_file(const SweepConfig& config, int threads = 0);

/// Evenly spaced grid from lo to hi inclusive (steps >= 2).
std::vector<double> linear_grid(double lo, double hi, int steps);

/// Applies fn(i) for i in [0, count) on the given number of threads
/// (0 = hardware concurrency). Results must be written to disjoint slots.
void parallel_for_index(int count, int threads, const std::function<void(int)>& fn);

}  // namespace kerr_mzi
