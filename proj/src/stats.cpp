#include "lt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lt/kernels.hpp"

namespace lt::stats {

KSReport ks_statistic(std::span<const double> samples, const ScalarDist& dist,
                      std::optional<double> threshold) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");

    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());

    const double n = static_cast<double>(sorted.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = dist.cdf(sorted[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - f;
        const double lo = f - static_cast<double>(i) / n;
        sup = std::max(sup, std::max(hi, lo));
    }

    KSReport report;
    report.statistic = sup;
    report.n = sorted.size();
    report.critical_001 = 1.63 / std::sqrt(n);
    report.threshold = threshold.value_or(report.critical_001);
    report.pass = report.statistic < report.threshold;
    return report;
}

double default_ks_threshold(std::size_t n) {
    return std::max(0.01, 1.63 / std::sqrt(static_cast<double>(n)));
}

NormApprox clt_squared_norm(const PriorSpec& prior, const OperationSpec* op) {
    prior.validate();
    const ScalarDist component(prior);
    const double d = static_cast<double>(prior.dim);
    const double mean = d * component.mu_z2();
    const double var = d * component.var_z2();
    if (op == nullptr) return {mean, var};

    const bool midpoint =
        op->kind == OpKind::TwoPointInterp && std::fabs(op->t - 0.5) < 1e-12;
    if (!midpoint)
        throw std::invalid_argument(
            "clt_squared_norm: closed form available only for the prior and the "
            "two-point midpoint");
    // Midpoint component is (Z1+Z2)/2: E[Y^2] = mu_Z2/2, Var[Y^2] = var_Z2/4.
    return {0.5 * mean, 0.25 * var};
}

std::vector<double> squared_norm_samples(const LatentBatch& batch) {
    return kernels::squared_norms(batch);
}

Histogram histogram(std::span<const double> values, std::size_t bins, double lo, double hi) {
    auto counts = kernels::histogram_counts(values, bins, lo, hi);
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.counts = std::move(counts.counts);
    h.underflow = counts.underflow;
    h.overflow = counts.overflow;
    return h;
}

}  // namespace lt::stats
