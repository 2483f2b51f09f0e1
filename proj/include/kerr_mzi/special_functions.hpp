#pragma once

#include <vector>

#include "kerr_mzi/input_state.hpp"

namespace kerr_mzi {

/// Table of log(k!) for k = 0..k_max, accumulated in extended precision.
/// Immutable after construction; safe for concurrent reads.
class LogFactorialTable {
public:
    explicit LogFactorialTable(int k_max);

    double operator[](int k) const { return values_[static_cast<size_t>(k)]; }
    int k_max() const { return static_cast<int>(values_.size()) - 1; }

private:
    std::vector<double> values_;
};

/// Shared table sized for desk-scale sweeps (binomials up to C(2n,n) with
/// n ~ 3e4, i.e. TMSV series at nbar ~ 1e3). Built once on first use.
const LogFactorialTable& shared_log_factorial_table();

/// log C(n,k). Out-of-range k (k < 0 or k > n) returns -infinity, so that
/// exponentiation yields an exact zero coefficient.
double log_binomial(long long n, long long k);

/// Moments sum_n p_n n^order of the geometric twin-Fock distribution
/// p_n = (1 - r) r^n, r = nbar/(nbar+2), in closed form. order must be 1..4.
double geometric_moment(double nbar, int order);

/// Poisson weight e^-lambda lambda^n / n!, computed in the log domain (the
/// direct product underflows once lambda exceeds ~700).
double poisson_weight(double lambda, int n);

/// Cutoff n_max plus the tail tolerance that produced it; governs every
/// truncated series in the library.
struct TruncationPolicy {
    int n_max = 0;
    double tail_epsilon = 1e-12;
};

/// Smallest n_max whose discarded tail mass is <= tail_epsilon.
/// TMSV: geometric tail (nbar/(nbar+2))^(n_max+1), solved in closed form.
/// EC: Poisson(alpha^2) upper tail, summed with compensated accumulation.
/// Twin-Fock and NOON specs are rejected (their photon number is fixed).
TruncationPolicy truncation_cutoff(const InputStateSpec& spec, double tail_epsilon);

}  // namespace kerr_mzi
