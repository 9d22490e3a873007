#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lt/batch.hpp"
#include "lt/ops.hpp"
#include "lt/prior.hpp"

namespace lt::stats {

// One-sample Kolmogorov-Smirnov result. critical_001 is the asymptotic 1%
// critical value 1.63/sqrt(n); pass compares the statistic against the
// threshold actually used (critical_001 unless a caller supplies one).
struct KSReport {
    double statistic = 0.0;
    std::size_t n = 0;
    double critical_001 = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Sup distance between the empirical CDF of `samples` and the analytic CDF.
// Throws on empty input.
KSReport ks_statistic(std::span<const double> samples, const ScalarDist& dist,
                      std::optional<double> threshold = std::nullopt);

// Default verification threshold: the 1% critical value, floored at 0.01 so
// large-sample runs are judged by the acceptance tolerance rather than by
// ever-shrinking critical values.
double default_ks_threshold(std::size_t n);

// Normal approximation of a squared-norm distribution.
struct NormApprox {
    double mean;
    double var;
};

// CLT approximation of ||x||^2 at dimension d: the prior gives
// N(d*mu_Z2, d*var_Z2); the linear interpolation midpoint gives
// N(d*mu_Z2/2, d*var_Z2/4). Other operations are unsupported and throw.
NormApprox clt_squared_norm(const PriorSpec& prior, const OperationSpec* op = nullptr);

// Per-row squared norms.
std::vector<double> squared_norm_samples(const LatentBatch& batch);

struct Histogram {
    double lo = 0.0, hi = 1.0;
    std::vector<std::uint64_t> counts;
    std::uint64_t underflow = 0, overflow = 0;

    std::size_t bins() const { return counts.size(); }
    double edge(std::size_t i) const {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins());
    }
};

// Equal-width histogram over [lo, hi); values outside the range are counted
// in underflow/overflow. Requires bins >= 1 and lo < hi.
Histogram histogram(std::span<const double> values, std::size_t bins, double lo, double hi);

}  // namespace lt::stats
