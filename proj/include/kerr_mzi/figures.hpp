#pragma once

#include <string>
#include <vector>

#include "kerr_mzi/table_io.hpp"

namespace kerr_mzi {

enum class FigureId { Fig2a, Fig2b, Fig3, Fig4 };

FigureId parse_figure_id(const std::string& tag);

/// Default parameters for each figure, encoded once so regenerating a table
/// is a single command. `manifest_version` tags the parameter set.
struct FigureManifest {
    std::string manifest_version = "1";
    // fig2a: twin-Fock signals, total photon numbers 2n in {2, 4, 6}
    std::vector<int> fig2a_n = {1, 2, 3};
    // fig2b: TMSV signals, mean photon numbers
    std::vector<double> fig2b_nbar = {2.0, 3.0, 4.0};
    double phi_min = 0.0;
    double phi_max = 1.5707963267948966;  // pi/2
    int phi_steps = 201;
    // fig3: sensitivity curves on an even mean-photon grid (twin-Fock states
    // exist only at even total photon numbers)
    double fig3_nbar_min = 2.0;
    double fig3_nbar_max = 40.0;
    double fig3_nbar_step = 2.0;
    // fig4: gain curves on a logarithmic grid 10^0 .. 10^3
    int fig4_points_per_decade = 10;
    int fig4_decades = 3;
};

const FigureManifest& default_figure_manifest();

/// Reproduces one figure as a data table using library calls only.
///   fig2a: phi, parity_tf_2, parity_tf_4, parity_tf_6
///   fig2b: phi, parity_tmsv(nbar) columns
///   fig3:  nbar, parity/QCR pairs for tf, tmsv, ec, plus the boundary
///          curves 1/nbar^(3/2), 1/nbar^2 and the generalized TMSV limit
///   fig4:  nbar, gain_tmsv, gain_ec, gain_asymptote (5 log10(51/4) dB)
NumericTable run_figure(FigureId id, int nu, double tail_epsilon, int threads = 0);

}  // namespace kerr_mzi
