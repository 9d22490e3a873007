#include <cmath>
#include <stdexcept>

#include "lt/kernels.hpp"
#include "lt/rng.hpp"
#include "lt/runtime.hpp"

// Serial reference implementations. Sampling walks the same per-chunk streams
// as the kernels (that contract is what makes results thread-count
// independent, so the reference must honor it too); everything else is the
// plainest possible loop.

namespace lt::ref {

LatentBatch sample_batch(const PriorSpec& prior, std::size_t n, std::uint64_t seed,
                         std::uint64_t salt) {
    prior.validate();
    if (n == 0) throw std::invalid_argument("sample_batch: n must be >= 1");
    const ScalarDist component(prior);
    const std::size_t d = prior.dim;
    LatentBatch out(n, d);
    for (std::size_t c = 0; c < chunk_count(n); ++c) {
        const auto [row_begin, row_end] = chunk_range(n, c);
        Rng rng(seed, stream_key(kStreamSample, salt, c));
        for (std::size_t i = row_begin; i < row_end; ++i) {
            auto row = out.row(i);
            for (std::size_t j = 0; j < d; ++j) row[j] = component.sample(rng);
        }
    }
    return out;
}

std::vector<double> sample_op_scalar(const OperationSpec& op, const PriorSpec& prior,
                                     std::size_t n, std::uint64_t seed) {
    op.validate();
    prior.validate();
    if (op.kind == OpKind::Slerp)
        throw std::invalid_argument("sample_op_scalar: slerp is not pointwise");
    const ScalarDist component(prior);
    std::vector<double> out(n);
    for (std::size_t c = 0; c < chunk_count(n); ++c) {
        const auto [begin, end] = chunk_range(n, c);
        Rng rng(seed, stream_key(kStreamMap, static_cast<std::uint64_t>(op.kind), c));
        for (std::size_t i = begin; i < end; ++i) {
            switch (op.kind) {
                case OpKind::TwoPointInterp: {
                    const double z1 = component.sample(rng);
                    const double z2 = component.sample(rng);
                    out[i] = op.t * z1 + (1.0 - op.t) * z2;
                    break;
                }
                case OpKind::NPointInterp: {
                    double y = 0.0;
                    for (const double w : op.weights) y += w * component.sample(rng);
                    out[i] = y;
                    break;
                }
                case OpKind::Vicinity: {
                    const double z = component.sample(rng);
                    out[i] = z + op.eps * component.sample(rng);
                    break;
                }
                case OpKind::Analogy: {
                    const double z1 = component.sample(rng);
                    const double z2 = component.sample(rng);
                    const double z3 = component.sample(rng);
                    out[i] = z3 + (z2 - z1);
                    break;
                }
                case OpKind::RandomWalk: {
                    double y = component.sample(rng);
                    for (std::size_t s = 0; s < op.steps; ++s)
                        y += op.eps * component.sample(rng);
                    out[i] = y;
                    break;
                }
                case OpKind::Slerp:
                    break;
            }
        }
    }
    return out;
}

LatentBatch interpolate_pairs(const LatentBatch& z1, const LatentBatch& z2, double t) {
    if (z1.rows() != z2.rows() || z1.dim() != z2.dim())
        throw std::invalid_argument("interpolate_pairs: batch shape mismatch");
    LatentBatch out(z1.rows(), z1.dim());
    for (std::size_t i = 0; i < z1.rows() * z1.dim(); ++i)
        out.data()[i] = t * z1.data()[i] + (1.0 - t) * z2.data()[i];
    return out;
}

LatentBatch npoint_combine(std::span<const LatentBatch> zs, std::span<const double> weights) {
    if (zs.empty() || zs.size() != weights.size())
        throw std::invalid_argument("npoint_combine: need one weight per batch");
    LatentBatch out(zs.front().rows(), zs.front().dim());
    for (std::size_t i = 0; i < out.rows() * out.dim(); ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < zs.size(); ++k) acc += weights[k] * zs[k].data()[i];
        out.data()[i] = acc;
    }
    return out;
}

LatentBatch vicinity_batch(const LatentBatch& base, const PriorSpec& prior, double eps,
                           std::uint64_t seed, std::uint64_t salt) {
    prior.validate();
    const ScalarDist component(prior);
    const std::size_t n = base.rows(), d = base.dim();
    LatentBatch out(n, d);
    for (std::size_t c = 0; c < chunk_count(n); ++c) {
        const auto [row_begin, row_end] = chunk_range(n, c);
        Rng rng(seed, stream_key(kStreamVicinity, salt, c));
        for (std::size_t i = row_begin * d; i < row_end * d; ++i)
            out.data()[i] = base.data()[i] + eps * component.sample(rng);
    }
    return out;
}

LatentBatch analogy_batch(const LatentBatch& z1, const LatentBatch& z2,
                          const LatentBatch& z3) {
    LatentBatch out(z1.rows(), z1.dim());
    for (std::size_t i = 0; i < z1.rows() * z1.dim(); ++i)
        out.data()[i] = z3.data()[i] + (z2.data()[i] - z1.data()[i]);
    return out;
}

LatentBatch slerp_pairs(const LatentBatch& z1, const LatentBatch& z2, double t) {
    LatentBatch out(z1.rows(), z1.dim());
    for (std::size_t i = 0; i < z1.rows(); ++i) {
        const auto row = ops::slerp(z1.row(i), z2.row(i), t);
        std::copy(row.begin(), row.end(), out.row(i).begin());
    }
    return out;
}

LatentBatch walk_batch(const LatentBatch& start, double eps, std::size_t steps,
                       bool matched, const PriorSpec& prior, std::uint64_t seed) {
    const std::size_t n = start.rows();
    LatentBatch traj((steps + 1) * n, start.dim());
    for (std::size_t w = 0; w < n; ++w) {
        const LatentBatch one = ops::random_walk(start.row(w), eps, steps, matched,
                                                 prior, seed, w);
        for (std::size_t s = 0; s <= steps; ++s) {
            const auto src = one.row(s);
            std::copy(src.begin(), src.end(), traj.row(s * n + w).begin());
        }
    }
    return traj;
}

LatentBatch apply_map(const LatentBatch& batch, const TransportMap1D& map) {
    LatentBatch out(batch.rows(), batch.dim());
    for (std::size_t i = 0; i < batch.rows() * batch.dim(); ++i)
        out.data()[i] = map(batch.data()[i]);
    return out;
}

std::vector<double> squared_norms(const LatentBatch& batch) {
    std::vector<double> out(batch.rows());
    for (std::size_t i = 0; i < batch.rows(); ++i) {
        double acc = 0.0;
        for (const double v : batch.row(i)) acc += v * v;
        out[i] = acc;
    }
    return out;
}

double sum(std::span<const double> values) {
    double acc = 0.0;
    for (const double v : values) acc += v;
    return acc;
}

kernels::MeanVar mean_var(std::span<const double> values) {
    if (values.size() < 2) throw std::invalid_argument("mean_var: need at least 2 values");
    const double mean = sum(values) / static_cast<double>(values.size());
    double ss = 0.0;
    for (const double v : values) ss += (v - mean) * (v - mean);
    return {mean, ss / static_cast<double>(values.size() - 1)};
}

kernels::BinCounts histogram_counts(std::span<const double> values, std::size_t bins,
                                    double lo, double hi) {
    if (bins == 0) throw std::invalid_argument("histogram_counts: bins must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("histogram_counts: need lo < hi");
    kernels::BinCounts out;
    out.counts.assign(bins, 0);
    const double scale = static_cast<double>(bins) / (hi - lo);
    for (const double v : values) {
        if (v < lo) {
            ++out.underflow;
        } else if (v > hi) {
            ++out.overflow;
        } else {
            std::size_t b = static_cast<std::size_t>((v - lo) * scale);
            if (b >= bins) b = bins - 1;
            ++out.counts[b];
        }
    }
    return out;
}

}  // namespace lt::ref
