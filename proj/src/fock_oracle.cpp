#include "kerr_mzi/fock_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace kerr_mzi::oracle {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// i^n with exact entries
std::complex<double> i_pow(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

int grid_index(int n_a, int n_b, int n_max) { return n_a * (n_max + 1) + n_b; }

// geometric twin-Fock weight, kept local so the oracle shares nothing with
// the analytic-signal path beyond the state definition itself
double geometric_weight(int n, double nbar) {
    const double r = nbar / (nbar + 2.0);
    return (1.0 - r) * std::pow(r, n);
}

double integer_power(int base, int exponent) {
    double acc = 1.0;
    for (int i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

}  // namespace

ModeOperators build_mode_operators(int n_max) {
    if (n_max < 1) throw std::invalid_argument("build_mode_operators: n_max must be >= 1");
    const int dim = (n_max + 1) * (n_max + 1);
    ModeOperators ops;
    ops.n_max = n_max;
    ops.a = Matrix::Zero(dim, dim);
    ops.b = Matrix::Zero(dim, dim);
    for (int n_a = 0; n_a <= n_max; ++n_a) {
        for (int n_b = 0; n_b <= n_max; ++n_b) {
            if (n_a >= 1)
                ops.a(grid_index(n_a - 1, n_b, n_max), grid_index(n_a, n_b, n_max)) =
                    std::sqrt(static_cast<double>(n_a));
            if (n_b >= 1)
                ops.b(grid_index(n_a, n_b - 1, n_max), grid_index(n_a, n_b, n_max)) =
                    std::sqrt(static_cast<double>(n_b));
        }
    }
    ops.a_dag = ops.a.adjoint();
    ops.b_dag = ops.b.adjoint();
    ops.total_number = ops.a_dag * ops.a + ops.b_dag * ops.b;
    ops.jx = (ops.a_dag * ops.b + ops.a * ops.b_dag) / 2.0;
    ops.jy = (ops.a_dag * ops.b - ops.a * ops.b_dag) / (2.0 * kI);
    ops.jz = (ops.a_dag * ops.a - ops.b_dag * ops.b) / 2.0;
    return ops;
}

namespace {

// Hermitian generator H and angle theta such that the splitter is
// exp(i theta H), restricted to the sector members [k_lo, k_hi] of |k, N-k>.
// B1 = exp[pi(a^t b - a b^t)/4] = exp(+i pi/2 Jy),
// B2 = exp[-i pi(a^t b + a b^t)/4] = exp(-i pi/2 Jx).
Matrix sector_generator(Splitter which, int total_n, int k_lo, int k_hi) {
    const int dim = k_hi - k_lo + 1;
    Matrix h = Matrix::Zero(dim, dim);
    for (int k = k_lo; k < k_hi; ++k) {
        // a^t b |k, N-k> = sqrt((k+1)(N-k)) |k+1, N-k-1>
        const double v = std::sqrt(static_cast<double>(k + 1) * (total_n - k));
        const int i = k - k_lo;
        if (which == Splitter::B1) {  // Jy
            h(i + 1, i) = v / (2.0 * kI);
            h(i, i + 1) = -v / (2.0 * kI);
        } else {  // Jx
            h(i + 1, i) = v / 2.0;
            h(i, i + 1) = v / 2.0;
        }
    }
    return h;
}

Matrix exponentiate_sector(Splitter which, int total_n, int k_lo, int k_hi) {
    const double theta = (which == Splitter::B1) ? M_PI / 2.0 : -M_PI / 2.0;
    const Matrix h = sector_generator(which, total_n, k_lo, k_hi);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    const auto& values = solver.eigenvalues();
    const Matrix& vectors = solver.eigenvectors();
    Vector phases(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i)
        phases(i) = std::polar(1.0, theta * values(i));
    return vectors * phases.asDiagonal() * vectors.adjoint();
}

}  // namespace

Matrix sector_beam_splitter(Splitter which, int total_n) {
    if (total_n < 0) throw std::invalid_argument("sector_beam_splitter: total_n must be >= 0");
    if (total_n == 0) return Matrix::Identity(1, 1);
    return exponentiate_sector(which, total_n, 0, total_n);
}

Matrix beam_splitter_unitary(Splitter which, int n_max) {
    if (n_max < 1) throw std::invalid_argument("beam_splitter_unitary: n_max must be >= 1");
    const int dim = (n_max + 1) * (n_max + 1);
    Matrix u = Matrix::Zero(dim, dim);
    u(grid_index(0, 0, n_max), grid_index(0, 0, n_max)) = 1.0;
    for (int total_n = 1; total_n <= 2 * n_max; ++total_n) {
        // sectors with total_n > n_max are clipped by the grid; exponentiating
        // the restricted Hermitian generator keeps the block exactly unitary
        const int k_lo = std::max(0, total_n - n_max);
        const int k_hi = std::min(total_n, n_max);
        const Matrix block = exponentiate_sector(which, total_n, k_lo, k_hi);
        for (int k = k_lo; k <= k_hi; ++k)
            for (int l = k_lo; l <= k_hi; ++l)
                u(grid_index(k, total_n - k, n_max), grid_index(l, total_n - l, n_max)) =
                    block(k - k_lo, l - k_lo);
    }
    return u;
}

Matrix kerr_unitary(double phi, int k, int n_max) {
    if (k < 1) throw std::invalid_argument("kerr_unitary: k must be >= 1");
    if (n_max < 0) throw std::invalid_argument("kerr_unitary: n_max must be >= 0");
    const int dim = (n_max + 1) * (n_max + 1);
    Matrix u = Matrix::Zero(dim, dim);
    for (int n_a = 0; n_a <= n_max; ++n_a) {
        const std::complex<double> phase = std::polar(1.0, -phi * integer_power(n_a, k));
        for (int n_b = 0; n_b <= n_max; ++n_b) {
            const int i = grid_index(n_a, n_b, n_max);
            u(i, i) = phase;
        }
    }
    return u;
}

Matrix parity_b(int n_max) {
    const int dim = (n_max + 1) * (n_max + 1);
    Matrix p = Matrix::Zero(dim, dim);
    for (int n_a = 0; n_a <= n_max; ++n_a)
        for (int n_b = 0; n_b <= n_max; ++n_b) {
            const int i = grid_index(n_a, n_b, n_max);
            p(i, i) = (n_b % 2 == 0) ? 1.0 : -1.0;
        }
    return p;
}

double max_abs_on_interior(const Matrix& m, int n_max, int guard) {
    double worst = 0.0;
    for (int n_a = 0; n_a <= n_max; ++n_a)
        for (int n_b = 0; n_b <= n_max; ++n_b) {
            if (n_a + n_b > n_max - guard) continue;
            const int row = grid_index(n_a, n_b, n_max);
            for (int m_a = 0; m_a <= n_max; ++m_a)
                for (int m_b = 0; m_b <= n_max; ++m_b) {
                    if (m_a + m_b > n_max - guard) continue;
                    worst = std::max(worst, std::abs(m(row, grid_index(m_a, m_b, n_max))));
                }
        }
    return worst;
}

double schwinger_identity_residual(int n_max) {
    if (n_max < 2) throw std::invalid_argument("schwinger_identity_residual: n_max must be >= 2");
    const ModeOperators ops = build_mode_operators(n_max);
    const Matrix kerr_gen = (ops.a_dag * ops.a) * (ops.a_dag * ops.a);
    const Matrix decomposition = ops.total_number * ops.total_number / 4.0 +
                                 ops.jz * ops.jz + ops.total_number * ops.jz;
    return max_abs_on_interior(kerr_gen - decomposition, n_max);
}

double TwoModeState::norm_squared() const {
    double acc = 0.0;
    for (const auto& sector : sectors) acc += sector.amplitudes.squaredNorm();
    return acc;
}

std::complex<double> TwoModeState::amplitude(int n_a, int n_b) const {
    const int total = n_a + n_b;
    for (const auto& sector : sectors)
        if (sector.total_n == total) return sector.amplitudes(n_a);
    return {0.0, 0.0};
}

TwoModeState prepare_input_state(const InputStateSpec& spec, const TruncationPolicy& policy) {
    TwoModeState state;
    switch (spec.family) {
        case StateFamily::TwinFock: {
            SectorComponent component{2 * spec.n, Vector::Zero(2 * spec.n + 1)};
            component.amplitudes(spec.n) = 1.0;
            state.sectors.push_back(std::move(component));
            state.through_first_splitter = true;
            return state;
        }
        case StateFamily::Tmsv: {
            for (int n = 0; n <= policy.n_max; ++n) {
                SectorComponent component{2 * n, Vector::Zero(2 * n + 1)};
                component.amplitudes(n) = std::sqrt(geometric_weight(n, spec.nbar));
                state.sectors.push_back(std::move(component));
            }
            state.through_first_splitter = true;
            return state;
        }
        case StateFamily::Noon: {
            SectorComponent component{spec.n, Vector::Zero(spec.n + 1)};
            component.amplitudes(spec.n) += 1.0 / std::sqrt(2.0);
            component.amplitudes(0) += i_pow(spec.n) / std::sqrt(2.0);
            state.sectors.push_back(std::move(component));
            state.through_first_splitter = false;
            return state;
        }
        case StateFamily::EntangledCoherent: {
            const double lambda = spec.alpha * spec.alpha;
            const double normalization = 1.0 / std::sqrt(2.0 * (1.0 + std::exp(-lambda)));
            for (int n = 0; n <= policy.n_max; ++n) {
                // c_n = e^(-|a|^2/2) alpha^n / sqrt(n!), via lgamma so large
                // lambda does not underflow
                const double c_n = std::exp(0.5 * n * std::log(lambda > 0 ? lambda : 1.0) -
                                            lambda / 2.0 - 0.5 * std::lgamma(n + 1.0));
                SectorComponent component{n, Vector::Zero(n + 1)};
                component.amplitudes(n) += normalization * c_n;
                component.amplitudes(0) += normalization * c_n * i_pow(n);
                state.sectors.push_back(std::move(component));
            }
            state.through_first_splitter = false;
            return state;
        }
    }
    throw std::logic_error("prepare_input_state: unreachable");
}

ParityPipeline::ParityPipeline(TwoModeState state) {
    sectors_.reserve(state.sectors.size());
    for (auto& sector : state.sectors) {
        SectorData data;
        data.total_n = sector.total_n;
        data.probe = state.through_first_splitter
                         ? Vector(sector_beam_splitter(Splitter::B1, sector.total_n) *
                                  sector.amplitudes)
                         : std::move(sector.amplitudes);
        data.second_splitter = sector_beam_splitter(Splitter::B2, sector.total_n);
        sectors_.push_back(std::move(data));
    }
}

double ParityPipeline::expectation(double phi) const {
    double total = 0.0;
    for (const auto& sector : sectors_) {
        const int n = sector.total_n;
        Vector v(n + 1);
        for (int k = 0; k <= n; ++k)
            v(k) = std::polar(1.0, -phi * static_cast<double>(k) * k) * sector.probe(k);
        const Vector out = sector.second_splitter * v;
        double sector_parity = 0.0;
        for (int k = 0; k <= n; ++k) {
            const double weight = out(k).real() * out(k).real() + out(k).imag() * out(k).imag();
            sector_parity += ((n - k) % 2 == 0) ? weight : -weight;
        }
        total += sector_parity;
    }
    return total;
}

double parity_expectation_output(const InputStateSpec& spec, double phi,
                                 const TruncationPolicy& policy) {
    return ParityPipeline(prepare_input_state(spec, policy)).expectation(phi);
}

GeneratorMoments kerr_generator_moments(const SectorComponent& component,
                                        bool through_first_splitter) {
    const double norm = component.amplitudes.norm();
    if (!(norm > 0.0))
        throw std::invalid_argument("kerr_generator_moments: zero-norm component");
    Vector probe = component.amplitudes / norm;
    if (through_first_splitter)
        probe = sector_beam_splitter(Splitter::B1, component.total_n) * probe;
    // (a^t a)^2 is diagonal in the sector basis, entries k^2
    GeneratorMoments moments;
    for (int k = 0; k <= component.total_n; ++k) {
        const double weight = std::norm(probe(k));
        const double k2 = static_cast<double>(k) * k;
        moments.mean += weight * k2;
        moments.second_moment += weight * k2 * k2;
    }
    return moments;
}

double qfi_fixed_sector(const TwoModeState& state) {
    if (state.sectors.size() != 1)
        throw std::invalid_argument("qfi_fixed_sector: state spans more than one sector");
    const GeneratorMoments moments =
        kerr_generator_moments(state.sectors.front(), state.through_first_splitter);
    return 4.0 * (moments.second_moment - moments.mean * moments.mean);
}

double qfi_phase_averaged(const InputStateSpec& spec, const TruncationPolicy& policy) {
    if (!spec.has_fluctuating_number())
        throw std::invalid_argument("qfi_phase_averaged: spec must be TMSV or EC");
    const TwoModeState state = prepare_input_state(spec, policy);
    double acc = 0.0;
    for (const auto& sector : state.sectors) {
        const double weight = sector.amplitudes.squaredNorm();
        if (weight == 0.0) continue;
        const GeneratorMoments moments =
            kerr_generator_moments(sector, state.through_first_splitter);
        acc += weight * 4.0 * (moments.second_moment - moments.mean * moments.mean);
    }
    return acc;
}

SectorSpectrum heff_sector_spectrum(int total_n, SectorHamiltonian hamiltonian) {
    if (total_n < 1) throw std::invalid_argument("heff_sector_spectrum: N must be >= 1");
    SectorSpectrum result;
    result.eigenvalues.resize(static_cast<size_t>(total_n) + 1);
    for (int k = 0; k <= total_n; ++k) {
        const double m = k - total_n / 2.0;  // Jz eigenvalue of |k, N-k>
        double value = 0.0;
        switch (hamiltonian) {
            case SectorHamiltonian::KerrEffective: value = m * m + total_n * m; break;
            case SectorHamiltonian::JzSquared: value = m * m; break;
            case SectorHamiltonian::NumberTimesJz: value = total_n * m; break;
        }
        result.eigenvalues[static_cast<size_t>(k)] = value;
    }
    int arg_min = 0;
    int arg_max = 0;
    for (int k = 0; k <= total_n; ++k) {
        if (result.eigenvalues[k] < result.eigenvalues[arg_min]) arg_min = k;
        if (result.eigenvalues[k] >= result.eigenvalues[arg_max]) arg_max = k;
    }
    result.seminorm = result.eigenvalues[arg_max] - result.eigenvalues[arg_min];
    result.max_qfi = result.seminorm * result.seminorm;
    result.extremal_state.total_n = total_n;
    result.extremal_state.amplitudes = Vector::Zero(total_n + 1);
    result.extremal_state.amplitudes(arg_max) += 1.0 / std::sqrt(2.0);
    result.extremal_state.amplitudes(arg_min) += 1.0 / std::sqrt(2.0);
    return result;
}

}  // namespace kerr_mzi::oracle
