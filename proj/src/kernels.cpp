#include "lt/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "lt/rng.hpp"
#include "lt/runtime.hpp"

namespace lt::kernels {

namespace {

std::int64_t signed_chunks(std::size_t n) {
    return static_cast<std::int64_t>(chunk_count(n));
}

void require_aligned(const LatentBatch& a, const LatentBatch& b, const char* what) {
    if (a.rows() != b.rows() || a.dim() != b.dim())
        throw std::invalid_argument(std::string(what) + ": batch shape mismatch");
}

// Draws one scalar output of the operation from `rng`. The draw order per
// sample is fixed, which pins the sequence for a given stream.
double draw_op_scalar(const OperationSpec& op, const ScalarDist& component, Rng& rng) {
    switch (op.kind) {
        case OpKind::TwoPointInterp: {
            const double z1 = component.sample(rng);
            const double z2 = component.sample(rng);
            return op.t * z1 + (1.0 - op.t) * z2;
        }
        case OpKind::NPointInterp: {
            double y = 0.0;
            for (const double w : op.weights) y += w * component.sample(rng);
            return y;
        }
        case OpKind::Vicinity: {
            const double z = component.sample(rng);
            return z + op.eps * component.sample(rng);
        }
        case OpKind::Analogy: {
            const double z1 = component.sample(rng);
            const double z2 = component.sample(rng);
            const double z3 = component.sample(rng);
            return z3 + (z2 - z1);
        }
        case OpKind::RandomWalk: {
            double y = component.sample(rng);
            for (std::size_t s = 0; s < op.steps; ++s) y += op.eps * component.sample(rng);
            return y;
        }
        case OpKind::Slerp:
            break;
    }
    throw std::invalid_argument("sample_op_scalar: operation has no scalar component law");
}

}  // namespace

LatentBatch sample_batch(const PriorSpec& prior, std::size_t n, std::uint64_t seed,
                         std::uint64_t salt) {
    prior.validate();
    if (n == 0) throw std::invalid_argument("sample_batch: n must be >= 1");

    const ScalarDist component(prior);
    const std::size_t d = prior.dim;
    LatentBatch out(n, d);
    double* data = out.data().data();

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < signed_chunks(n); ++c) {
        const auto [row_begin, row_end] = chunk_range(n, static_cast<std::size_t>(c));
        Rng rng(seed, stream_key(kStreamSample, salt, static_cast<std::size_t>(c)));
        for (std::size_t i = row_begin * d; i < row_end * d; ++i)
            data[i] = component.sample(rng);
    }
    return out;
}

std::vector<double> sample_op_scalar(const OperationSpec& op, const PriorSpec& prior,
                                     std::size_t n, std::uint64_t seed) {
    op.validate();
    prior.validate();
    if (op.kind == OpKind::Slerp)
        throw std::invalid_argument("sample_op_scalar: slerp is not pointwise");
    if (n == 0) return {};

    const ScalarDist component(prior);
    std::vector<double> out(n);

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < signed_chunks(n); ++c) {
        const auto [begin, end] = chunk_range(n, static_cast<std::size_t>(c));
        Rng rng(seed, stream_key(kStreamMap, static_cast<std::uint64_t>(op.kind),
                                 static_cast<std::size_t>(c)));
        for (std::size_t i = begin; i < end; ++i) out[i] = draw_op_scalar(op, component, rng);
    }
    return out;
}

LatentBatch interpolate_pairs(const LatentBatch& z1, const LatentBatch& z2, double t) {
    require_aligned(z1, z2, "interpolate_pairs");
    LatentBatch out(z1.rows(), z1.dim());
    const double* a = z1.data().data();
    const double* b = z2.data().data();
    double* y = out.data().data();
    const std::int64_t total = static_cast<std::int64_t>(z1.rows() * z1.dim());

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) y[i] = t * a[i] + (1.0 - t) * b[i];
    return out;
}

LatentBatch npoint_combine(std::span<const LatentBatch> zs, std::span<const double> weights) {
    if (zs.empty() || zs.size() != weights.size())
        throw std::invalid_argument("npoint_combine: need one weight per batch");
    double wsum = 0.0;
    for (const double w : weights) wsum += w;
    if (std::fabs(wsum - 1.0) > 1e-12)
        throw std::invalid_argument("npoint_combine: weights must sum to 1");
    for (const auto& z : zs) require_aligned(zs.front(), z, "npoint_combine");

    LatentBatch out(zs.front().rows(), zs.front().dim());
    double* y = out.data().data();
    const std::int64_t total = static_cast<std::int64_t>(out.rows() * out.dim());

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < zs.size(); ++k)
            acc += weights[k] * zs[k].data()[static_cast<std::size_t>(i)];
        y[i] = acc;
    }
    return out;
}

LatentBatch vicinity_batch(const LatentBatch& base, const PriorSpec& prior, double eps,
                           std::uint64_t seed, std::uint64_t salt) {
    prior.validate();
    if (!(eps >= 0.0)) throw std::invalid_argument("vicinity_batch: eps must be >= 0");
    if (base.dim() != prior.dim)
        throw std::invalid_argument("vicinity_batch: batch dimension does not match prior");

    const ScalarDist component(prior);
    const std::size_t n = base.rows(), d = base.dim();
    LatentBatch out(n, d);
    const double* src = base.data().data();
    double* dst = out.data().data();

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < signed_chunks(n); ++c) {
        const auto [row_begin, row_end] = chunk_range(n, static_cast<std::size_t>(c));
        Rng rng(seed, stream_key(kStreamVicinity, salt, static_cast<std::size_t>(c)));
        for (std::size_t i = row_begin * d; i < row_end * d; ++i)
            dst[i] = src[i] + eps * component.sample(rng);
    }
    return out;
}

LatentBatch analogy_batch(const LatentBatch& z1, const LatentBatch& z2,
                          const LatentBatch& z3) {
    require_aligned(z1, z2, "analogy_batch");
    require_aligned(z1, z3, "analogy_batch");
    LatentBatch out(z1.rows(), z1.dim());
    const double* a = z1.data().data();
    const double* b = z2.data().data();
    const double* c = z3.data().data();
    double* y = out.data().data();
    const std::int64_t total = static_cast<std::int64_t>(z1.rows() * z1.dim());

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) y[i] = c[i] + (b[i] - a[i]);
    return out;
}

LatentBatch slerp_pairs(const LatentBatch& z1, const LatentBatch& z2, double t) {
    require_aligned(z1, z2, "slerp_pairs");
    LatentBatch out(z1.rows(), z1.dim());
    std::atomic<bool> failed{false};
    std::string error;

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(z1.rows()); ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            const auto row = ops::slerp(z1.row(static_cast<std::size_t>(i)),
                                        z2.row(static_cast<std::size_t>(i)), t);
            auto dst = out.row(static_cast<std::size_t>(i));
            std::copy(row.begin(), row.end(), dst.begin());
        } catch (const std::exception& e) {
            // Exceptions must not escape the parallel region.
            if (!failed.exchange(true)) {
#pragma omp critical(lt_slerp_error)
                error = e.what();
            }
        }
    }
    if (failed.load()) throw std::invalid_argument("slerp_pairs: " + error);
    return out;
}

LatentBatch walk_batch(const LatentBatch& start, double eps, std::size_t steps,
                       bool matched, const PriorSpec& prior, std::uint64_t seed) {
    prior.validate();
    if (steps < 1) throw std::invalid_argument("walk_batch: steps must be >= 1");
    if (!(eps >= 0.0)) throw std::invalid_argument("walk_batch: eps must be >= 0");
    if (start.dim() != prior.dim)
        throw std::invalid_argument("walk_batch: batch dimension does not match prior");

    const ScalarDist component(prior);
    const TransportMap1D step_map =
        matched ? matched_map(OperationSpec::vicinity(eps), prior) : TransportMap1D::identity();

    const std::size_t n = start.rows(), d = start.dim();
    LatentBatch traj((steps + 1) * n, d);

#pragma omp parallel for schedule(static)
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(n); ++w) {
        const std::size_t walker = static_cast<std::size_t>(w);
        auto first = traj.row(walker);
        const auto z0 = start.row(walker);
        std::copy(z0.begin(), z0.end(), first.begin());
        for (std::size_t s = 1; s <= steps; ++s) {
            Rng rng(seed, stream_key(kStreamWalk, s, walker));
            const auto prev = traj.row((s - 1) * n + walker);
            auto next = traj.row(s * n + walker);
            for (std::size_t i = 0; i < d; ++i) {
                double y = prev[i] + eps * component.sample(rng);
                if (matched) y = step_map(y);
                next[i] = y;
            }
        }
    }
    return traj;
}

LatentBatch apply_map(const LatentBatch& batch, const TransportMap1D& map) {
    LatentBatch out(batch.rows(), batch.dim());
    const double* src = batch.data().data();
    double* dst = out.data().data();
    const std::int64_t total = static_cast<std::int64_t>(batch.rows() * batch.dim());

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) dst[i] = map(src[i]);
    return out;
}

std::vector<double> squared_norms(const LatentBatch& batch) {
    const std::size_t n = batch.rows(), d = batch.dim();
    std::vector<double> out(n);
    const double* data = batch.data().data();

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        const double* row = data + static_cast<std::size_t>(i) * d;
        double acc = 0.0;
        for (std::size_t j = 0; j < d; ++j) acc += row[j] * row[j];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

// Chunk partials combined in chunk order: the result is independent of the
// number of threads.
double sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    std::vector<double> partial(chunk_count(n), 0.0);

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < signed_chunks(n); ++c) {
        const auto [begin, end] = chunk_range(n, static_cast<std::size_t>(c));
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) acc += values[i];
        partial[static_cast<std::size_t>(c)] = acc;
    }
    double total = 0.0;
    for (const double p : partial) total += p;
    return total;
}

MeanVar mean_var(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw std::invalid_argument("mean_var: need at least 2 values");
    const double mean = sum(values) / static_cast<double>(n);

    std::vector<double> partial(chunk_count(n), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < signed_chunks(n); ++c) {
        const auto [begin, end] = chunk_range(n, static_cast<std::size_t>(c));
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            const double dev = values[i] - mean;
            acc += dev * dev;
        }
        partial[static_cast<std::size_t>(c)] = acc;
    }
    double ss = 0.0;
    for (const double p : partial) ss += p;
    return {mean, ss / static_cast<double>(n - 1)};
}

BinCounts histogram_counts(std::span<const double> values, std::size_t bins,
                           double lo, double hi) {
    if (bins == 0) throw std::invalid_argument("histogram_counts: bins must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("histogram_counts: need lo < hi");

    BinCounts total;
    total.counts.assign(bins, 0);
    const double scale = static_cast<double>(bins) / (hi - lo);

#pragma omp parallel
    {
        BinCounts local;
        local.counts.assign(bins, 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(values.size()); ++i) {
            const double v = values[static_cast<std::size_t>(i)];
            if (v < lo) {
                ++local.underflow;
            } else if (v > hi) {
                ++local.overflow;
            } else {
                std::size_t b = static_cast<std::size_t>((v - lo) * scale);
                if (b >= bins) b = bins - 1;  // v == hi joins the last bin
                ++local.counts[b];
            }
        }
#pragma omp critical(lt_histogram_merge)
        {
            for (std::size_t b = 0; b < bins; ++b) total.counts[b] += local.counts[b];
            total.underflow += local.underflow;
            total.overflow += local.overflow;
        }
    }
    return total;
}

}  // namespace lt::kernels
