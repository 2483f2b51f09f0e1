#pragma once

#include <map>
#include <span>
#include <vector>

namespace kerr_mzi {

struct CosineTerm {
    double weight = 0.0;
    double frequency = 0.0;  // radians^-1 per unit phi, nonnegative after folding
};

/// A parity signal S(phi) = offset + sum_j W_j cos(w_j phi), stored exactly.
/// Terms are sorted by strictly increasing frequency; all frequencies are
/// positive (zero-frequency weight lives in the offset). Evaluation sums the
/// terms first and adds the offset last, so a unit-peak series built by
/// CosineSeriesBuilder::build_unit_peak evaluates to exactly 1.0 at phi = 0.
class CosineSeriesSignal {
public:
    CosineSeriesSignal() = default;

    static CosineSeriesSignal constant(double value);

    double evaluate(double phi) const;

    /// Exact term-wise derivative -sum_j W_j w_j sin(w_j phi).
    double derivative(double phi) const;

    /// S(0) = offset + sum of weights, evaluated in the same order as
    /// evaluate(0).
    double peak_value() const { return evaluate(0.0); }

    /// sum_j W_j w_j^2, the negated second derivative at phi = 0.
    double curvature_sum() const;

    double constant_offset() const { return offset_; }
    std::span<const CosineTerm> terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

private:
    friend class CosineSeriesBuilder;

    double offset_ = 0.0;
    std::vector<CosineTerm> terms_;
};

/// Accumulates weighted cosines with exact integer frequencies, folding
/// cos(-w phi) onto cos(w phi) and merging equal frequencies.
class CosineSeriesBuilder {
public:
    /// Adds weight * cos(frequency * phi). Negative frequencies fold onto
    /// their mirror; frequency 0 accumulates into the offset.
    void add(double weight, long long frequency);

    void add_offset(double weight) { offset_ += weight; }

    CosineSeriesSignal build() &&;

    /// build(), then nudges the offset (by at most a few ulp) so that
    /// evaluate(0) == 1.0 exactly. Intended for series whose weights sum
    /// to 1 analytically, e.g. the twin-Fock parity signal.
    CosineSeriesSignal build_unit_peak() &&;

private:
    double offset_ = 0.0;
    std::map<long long, double> weights_;
};

}  // namespace kerr_mzi
