#include "kerr_mzi/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kerr_mzi {

LogFactorialTable::LogFactorialTable(int k_max) {
    if (k_max < 0) throw std::invalid_argument("LogFactorialTable: k_max must be >= 0");
    values_.resize(static_cast<size_t>(k_max) + 1);
    values_[0] = 0.0;
    long double acc = 0.0L;  // extended precision keeps the cumulative sum tight
    for (int k = 1; k <= k_max; ++k) {
        acc += std::log(static_cast<long double>(k));
        values_[static_cast<size_t>(k)] = static_cast<double>(acc);
    }
}

const LogFactorialTable& shared_log_factorial_table() {
    static const LogFactorialTable table(1 << 16);
    return table;
}

double log_binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("log_binomial: n must be >= 0");
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    const auto& table = shared_log_factorial_table();
    if (n > table.k_max())
        throw std::invalid_argument("log_binomial: n exceeds the factorial table");
    return table[static_cast<int>(n)] - table[static_cast<int>(k)] -
           table[static_cast<int>(n - k)];
}

double geometric_moment(double nbar, int order) {
    if (!(nbar >= 0.0)) throw std::invalid_argument("geometric_moment: nbar must be >= 0");
    const double n = nbar;
    switch (order) {
        case 1: return n / 2.0;
        case 2: return (n * n + n) / 2.0;
        case 3: return (3.0 * n * n * n + 6.0 * n * n + 2.0 * n) / 4.0;
        case 4: return (3.0 * n * n * n * n + 9.0 * n * n * n + 7.0 * n * n + n) / 2.0;
        default:
            throw std::invalid_argument("geometric_moment: order must be in 1..4");
    }
}

double poisson_weight(double lambda, int n) {
    if (n < 0) throw std::invalid_argument("poisson_weight: n must be >= 0");
    if (!(lambda > 0.0)) return n == 0 ? 1.0 : 0.0;
    const auto& table = shared_log_factorial_table();
    return std::exp(n * std::log(lambda) - lambda - table[n]);
}

namespace {

int tmsv_cutoff(double nbar, double eps) {
    if (nbar == 0.0) return 0;
    const double r = nbar / (nbar + 2.0);
    // closed form: smallest n with r^(n+1) <= eps, then fix up rounding
    int n = static_cast<int>(std::ceil(std::log(eps) / std::log(r))) - 1;
    if (n < 0) n = 0;
    while (std::pow(r, n + 1) > eps) ++n;
    while (n > 0 && std::pow(r, n) <= eps) --n;
    return n;
}

int poisson_cutoff(double lambda, double eps) {
    // direct summation with compensated accumulation; once n > lambda the
    // remaining tail is dominated by the geometric series with ratio
    // lambda/(n+2), giving the running bound below
    double sum = poisson_weight(lambda, 0);
    double comp = 0.0;
    if (1.0 - sum <= eps) return 0;
    int n = 0;
    const int hard_limit = static_cast<int>(lambda + 40.0 * std::sqrt(lambda + 1.0)) + 400;
    while (n < hard_limit) {
        ++n;
        const double term = poisson_weight(lambda, n);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (n > lambda) {
            const double next = term * lambda / (n + 1);
            const double tail_bound = next / (1.0 - lambda / (n + 2));
            if (tail_bound <= eps) return n;
        }
    }
    return hard_limit;
}

}  // namespace

TruncationPolicy truncation_cutoff(const InputStateSpec& spec, double tail_epsilon) {
    if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0))
        throw std::invalid_argument("truncation_cutoff: tail_epsilon must be in (0,1)");
    TruncationPolicy policy;
    policy.tail_epsilon = tail_epsilon;
    switch (spec.family) {
        case StateFamily::Tmsv:
            policy.n_max = tmsv_cutoff(spec.nbar, tail_epsilon);
            return policy;
        case StateFamily::EntangledCoherent:
            policy.n_max = poisson_cutoff(spec.alpha * spec.alpha, tail_epsilon);
            return policy;
        case StateFamily::TwinFock:
        case StateFamily::Noon:
            throw std::invalid_argument(
                "truncation_cutoff: " + spec.label() + " has a fixed photon number");
    }
    throw std::logic_error("truncation_cutoff: unreachable");
}

}  // namespace kerr_mzi
