#include "kerr_mzi/cosine_series.hpp"

#include <cmath>

namespace kerr_mzi {

CosineSeriesSignal CosineSeriesSignal::constant(double value) {
    CosineSeriesSignal s;
    s.offset_ = value;
    return s;
}

double CosineSeriesSignal::evaluate(double phi) const {
    double acc = 0.0;
    for (const auto& term : terms_) acc += term.weight * std::cos(term.frequency * phi);
    return acc + offset_;  // offset last: see build_unit_peak
}

double CosineSeriesSignal::derivative(double phi) const {
    double acc = 0.0;
    for (const auto& term : terms_)
        acc -= term.weight * term.frequency * std::sin(term.frequency * phi);
    return acc;
}

double CosineSeriesSignal::curvature_sum() const {
    double acc = 0.0;
    for (const auto& term : terms_) acc += term.weight * term.frequency * term.frequency;
    return acc;
}

void CosineSeriesBuilder::add(double weight, long long frequency) {
    if (frequency < 0) frequency = -frequency;  // cos is even
    if (frequency == 0) {
        offset_ += weight;
        return;
    }
    weights_[frequency] += weight;
}

CosineSeriesSignal CosineSeriesBuilder::build() && {
    CosineSeriesSignal s;
    s.offset_ = offset_;
    s.terms_.reserve(weights_.size());
    for (const auto& [freq, weight] : weights_)
        s.terms_.push_back({weight, static_cast<double>(freq)});
    return s;
}

CosineSeriesSignal CosineSeriesBuilder::build_unit_peak() && {
    CosineSeriesSignal s = std::move(*this).build();
    // The weights sum to 1 analytically; absorb the accumulated rounding
    // (a few ulp) into the offset so evaluate(0) == 1.0 exactly.
    for (int i = 0; i < 4 && s.evaluate(0.0) != 1.0; ++i)
        s.offset_ += 1.0 - s.evaluate(0.0);
    return s;
}

}  // namespace kerr_mzi
